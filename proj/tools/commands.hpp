#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "presets.hpp"

namespace liquidpower::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_budget = 3;

struct ComputeArgs {
    std::string instance_path;
    std::string engine; // brute | pv | pvr | ld | sample
    std::optional<std::string> pd;
    double epsilon{0.02};
    double delta{0.05};
    std::optional<std::uint64_t> samples;
    std::uint64_t seed{0};
    std::uint64_t budget{100'000'000ull};
    bool force_complete{false};
    std::string format{"csv"};
    std::optional<int> round;
    std::optional<std::string> out_path;
};

struct GenArgs {
    std::string family;
    int n{100};
    double p{0.1};
    int m{5};
    int k{10};
    double rewire_p{0.2};
    std::string dist{"uniform"};
    int layers{10};
    int layer_size{10};
    std::uint64_t seed{0};
    std::string out_prefix;
};

struct ExperimentCliArgs {
    ExperimentArgs experiment;
    std::optional<std::string> out_path;
};

int cmd_compute(const ComputeArgs& args);
int cmd_experiment(const ExperimentCliArgs& args);
int cmd_gen(const GenArgs& args);

} // namespace liquidpower::cli
