#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liquidpower/rational.hpp"

namespace liquidpower {

class DirectVotePartition;

/// Weighted voting game: positive integer weights and a quota ratio
/// q in (0.5, 1]. A proposal passes iff w(T+) > q * w(T+ u T-), evaluated
/// in exact integer/rational arithmetic so quota boundaries never depend
/// on floating-point rounding.
class WeightedVotingGame {
public:
    WeightedVotingGame(std::vector<std::int64_t> weights, Rational quota);

    int size() const { return static_cast<int>(weights_.size()); }
    std::int64_t weight(int i) const { return weights_[i]; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t total_weight() const { return total_; }
    const Rational& quota() const { return quota_; }

    /// Outcome given supporting weight and total non-abstaining weight.
    /// Returns +1 iff plus_weight > q * active_weight, else -1.
    int outcome(std::int64_t plus_weight, std::int64_t active_weight) const;

private:
    std::vector<std::int64_t> weights_;
    Rational quota_;
    std::int64_t total_{0};
};

/// Collective decision on a resolved profile; abstainers drop out of the
/// quota base. The all-abstain profile rejects (0 > 0 is false).
int wvg_outcome(const DirectVotePartition& votes, const WeightedVotingGame& game);

/// Criticality indicator for voter i given disjoint subsets of V\{i}:
/// supporters resolve to +1, opposers to -1, followers delegate
/// (directly or transitively) to i, everyone else abstains. Returns 1 iff
/// switching i (and the followers' carried weight) from -1 to +1 flips the
/// outcome.
int criticality_delta(int voter,
                      std::span<const int> supporters,
                      std::span<const int> opposers,
                      std::span<const int> followers,
                      const WeightedVotingGame& game);

} // namespace liquidpower
