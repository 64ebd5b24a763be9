#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "liquidpower/bignum.hpp"

namespace liquidpower {

/// Counts ordered c-partitions of a weighted item set by prescribed group
/// sizes and group weight sums; the last group takes the remainder. Counts
/// are exact arbitrary-precision integers.
///
/// The table holds every feasible (sizes, weights) tuple for the first c-1
/// groups, built by one pass over the items, so a single build answers all
/// queries for a fixed item set. Infeasible parameters count 0.
class PartitionCounter {
public:
    static constexpr int max_groups = 4;

    PartitionCounter(std::span<const std::int64_t> item_weights, int groups);

    int groups() const { return groups_; }
    int item_count() const { return items_; }
    std::int64_t total_weight() const { return total_weight_; }
    std::size_t state_count() const { return table_.size(); }

    /// Number of ordered partitions with sizes[g], group_weights[g] for the
    /// first groups-1 groups. Spans shorter than groups-1 are invalid.
    const BigInt& count(std::span<const int> sizes,
                        std::span<const std::int64_t> group_weights) const;

    /// Visits every nonzero table entry:
    /// f(const std::array<int, 3>& sizes, const std::array<std::int64_t, 3>& weights,
    ///   const BigInt& count). Unused trailing groups hold zeros.
    template <typename F>
    void for_each(F&& f) const {
        for (const auto& [key, value] : table_) f(key.n, key.w, value);
    }

private:
    struct Key {
        std::array<int, 3> n{0, 0, 0};
        std::array<std::int64_t, 3> w{0, 0, 0};
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    int groups_{2};
    int items_{0};
    std::int64_t total_weight_{0};
    std::unordered_map<Key, BigInt, KeyHash> table_;

    static BigInt zero_;
};

/// One-shot form of the count above; prefer PartitionCounter when querying
/// the same item set repeatedly.
BigInt count_partitions(std::span<const std::int64_t> item_weights, int groups,
                        std::span<const int> sizes,
                        std::span<const std::int64_t> group_weights);

} // namespace liquidpower
