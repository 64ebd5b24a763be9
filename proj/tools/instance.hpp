#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "liquidpower/behavior.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/netgen.hpp"

namespace liquidpower::cli {

/// Instance-file problem: carries the field path so errors point at the
/// offending key ("weights[3]", "network.family", ...).
class InstanceError : public std::runtime_error {
public:
    InstanceError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class BehaviorKind { global_uniformity, constant_pd, per_voter };

struct BehaviorSpec {
    BehaviorKind kind{BehaviorKind::global_uniformity};
    Rational constant{0, 1};
    std::vector<Rational> per_voter;
};

struct Instance {
    DelegationGraph graph;
    WeightedVotingGame game;
    BehaviorSpec behavior;
    std::vector<std::string> labels;
    std::optional<std::vector<int>> delegatees;
    std::optional<NetworkSpec> network; // set when the graph came from a generator

    BehaviorModel model() const;
};

Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::string& path);
nlohmann::json instance_to_json(const Instance& instance);

} // namespace liquidpower::cli
