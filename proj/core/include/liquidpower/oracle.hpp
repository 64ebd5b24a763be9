#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "liquidpower/behavior.hpp"
#include "liquidpower/bignum.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/report.hpp"

namespace liquidpower {

/// Thrown when an enumeration would exceed the configured budget; carries
/// the exact number of delegation partitions the instance has.
class EnumerationBudgetExceeded : public std::runtime_error {
public:
    EnumerationBudgetExceeded(BigInt partitions, BigInt budget);
    const BigInt& partitions() const { return partitions_; }
    const BigInt& budget() const { return budget_; }

private:
    BigInt partitions_;
    BigInt budget_;
};

/// Number of valid delegation partitions: prod_i (|OutN(i)| + 2).
BigInt delegation_partition_count(const DelegationGraph& graph);

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000ull;

/// Exact per-voter results in rationals; convert to a float report at the end.
struct ExactMeasures {
    std::vector<BigRational> measure;
    std::vector<BigRational> positive;
    std::vector<BigRational> negative;

    MeasureReport to_report() const;
};

/// Ground truth by exhaustive enumeration of every delegation partition.
/// For each voter i it sums P(D) * (W(T_{D_i+}) - W(T_{D_i-})) / 2, with
/// probabilities kept exact. Positive/negative criticality split by the
/// voter's realized resolved vote; critical partitions where the voter
/// abstains contribute half to each side. Deterministic and splittable
/// across threads (per-voter sums are exact integers, so merge order
/// cannot change the result).
ExactMeasures exact_measure_bruteforce(const DelegationGraph& graph,
                                       const WeightedVotingGame& game,
                                       const BehaviorModel& model,
                                       BigInt budget = BigInt(default_enumeration_budget));

/// (P(i positively critical), P(i negatively critical)) by enumeration.
std::pair<BigRational, BigRational> criticality_split_bruteforce(
    const DelegationGraph& graph, const WeightedVotingGame& game, const BehaviorModel& model,
    int voter, BigInt budget = BigInt(default_enumeration_budget));

} // namespace liquidpower
