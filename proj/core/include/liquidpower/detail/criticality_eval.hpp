#pragma once

#include <cstdint>
#include <vector>

#include "liquidpower/game.hpp"
#include "liquidpower/partition.hpp"

namespace liquidpower::detail {

/// Evaluates, for one delegation partition, the criticality indicator of
/// every voter in O(n): resolve once, aggregate per-voter follower weight
/// (the weight a voter carries when their action is overridden, including
/// whole cycles they sit on), then test each voter's forced +/- outcomes
/// against the resolved tallies with that voter's subtree removed.
class CriticalityEvaluator {
public:
    CriticalityEvaluator(const WeightedVotingGame& game) : game_(&game) {
        const int n = game.size();
        votes_.resize(n);
        marks_.resize(n);
        on_cycle_.resize(n);
        cycle_id_.resize(n);
        carried_.resize(n);
        pending_.resize(n);
        queue_.resize(n);
        path_.resize(n);
        critical_.resize(n);
    }

    /// actions must have game().size() entries. Fills critical()[i] in {0,1}
    /// and votes()[i] in {-1,0,1}.
    void evaluate(const VoterAction* actions);

    const std::vector<signed char>& critical() const { return critical_; }
    const std::vector<signed char>& votes() const { return votes_; }

    /// Straightforward re-resolution of both overrides for one voter;
    /// reference path for debug rechecks and tests.
    int slow_criticality(const VoterAction* actions, int voter) const;

private:
    const WeightedVotingGame* game_;
    std::vector<signed char> votes_, marks_, on_cycle_, critical_;
    std::vector<int> cycle_id_, pending_, queue_, path_;
    std::vector<std::int64_t> carried_, cycle_totals_;
};

} // namespace liquidpower::detail
