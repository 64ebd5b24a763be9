#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liquidpower {

struct SamplingInfo {
    double epsilon{0};
    double delta{0};
    std::uint64_t samples{0};
    std::uint64_t seed{0};
    bool samples_derived{false}; // true when k came from the Hoeffding bound
    std::string generator;
};

/// Per-voter power measures produced by any engine. measure[i] is the
/// probability that voter i is critical; positive/negative split it by the
/// voter's realized stance (critical-while-abstaining counts half to each
/// side, so measure == positive + negative always holds).
struct MeasureReport {
    std::vector<double> measure;
    std::vector<double> positive;
    std::vector<double> negative;
    std::string engine;
    std::optional<SamplingInfo> sampling;

    int size() const { return static_cast<int>(measure.size()); }
};

} // namespace liquidpower
