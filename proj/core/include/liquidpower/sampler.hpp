#pragma once

#include <cstdint>
#include <random>

#include "liquidpower/behavior.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/partition.hpp"
#include "liquidpower/report.hpp"

namespace liquidpower {

/// Monte Carlo sampling plan. samples == 0 means "derive k from the
/// Hoeffding bound for the instance's voter count"; a user-fixed k gets an
/// implied epsilon back-computed at delta = 0.05 in the report.
struct SamplingPlan {
    double epsilon{0.02};
    double delta{0.05};
    std::uint64_t samples{0};
    std::uint64_t seed{0};

    static SamplingPlan hoeffding(double epsilon, double delta, std::uint64_t seed) {
        return {epsilon, delta, 0, seed};
    }
    static SamplingPlan fixed_k(std::uint64_t samples, std::uint64_t seed) {
        return {0, 0, samples, seed};
    }
};

/// ceil(ln(2n/delta) / (2 epsilon^2)): sample count guaranteeing all n
/// estimates land within epsilon with probability >= 1 - delta.
std::uint64_t required_samples(int n, double epsilon, double delta);

/// Draws one delegation partition under the behavior model: each voter
/// independently delegates with probability p_d^i to a uniform out-neighbor,
/// otherwise votes +1/-1 with probability 1/2 each. Deterministic given the
/// generator state.
DelegationPartition sample_partition(const DelegationGraph& graph, const BehaviorModel& model,
                                     std::mt19937_64& rng);

/// Monte Carlo estimate of every voter's power measure. Each sample is
/// resolved once and all voters' criticality indicators are evaluated from
/// per-voter carried weights (O(n) amortized per sample). Samples are drawn
/// in fixed 4096-sample blocks with per-block generator substreams, so the
/// result is a pure function of (instance, plan) regardless of thread count
/// and block merges are exact integer additions.
MeasureReport estimate_measures(const DelegationGraph& graph, const WeightedVotingGame& game,
                                const BehaviorModel& model, const SamplingPlan& plan);

} // namespace liquidpower
