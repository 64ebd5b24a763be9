#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace liquidpower::cli {

struct ExperimentArgs {
    std::string preset;
    bool full{false};           // full appendix sweeps (5 networks per family)
    std::uint64_t seed{1};
    std::optional<int> round;
};

const std::vector<std::string>& experiment_presets();

/// Emits the preset's CSV series. Throws std::invalid_argument for unknown
/// presets.
void run_experiment(const ExperimentArgs& args, std::ostream& out);

} // namespace liquidpower::cli
