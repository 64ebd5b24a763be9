#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "liquidpower/bignum.hpp"
#include "liquidpower/counting.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/rational.hpp"

namespace liquidpower {

/// In-forest probability P^ld(m, p) on a complete digraph of n voters with
/// delegation probability pd. Convenience wrapper; batch queries should go
/// through CompletePowerSolver, which shares the underlying tables.
double pld(int m, double p, int n, double pd);

/// Probability that n0 voters form a pure delegation-cycle group.
double p0_cycle_probability(int n0, int n, double pd);

/// Exact power measures on a complete delegation digraph. Enumerates
/// (size, weight) decompositions of V\{i} into supporters / opposers /
/// cycle-abstainers / followers of i, tests the quota interval on the
/// abstention-reduced total, and weights partition counts by the in-forest
/// probabilities. Forest tables depend only on (n, pd) and are shared
/// across voters; count tables are cached per probed-voter weight.
class CompletePowerSolver {
public:
    CompletePowerSolver(WeightedVotingGame game, Rational pd);

    const WeightedVotingGame& game() const { return game_; }
    const Rational& pd() const { return pd_; }

    double measure(int voter) const;
    std::vector<double> measures() const;

    /// Total decomposition probability mass for one voter (equals 1 up to
    /// rounding); diagnostic for the probability model.
    double probability_sum(int voter) const;

    BigRational measure_exact(int voter) const;
    BigRational probability_sum_exact(int voter) const;

private:
    const PartitionCounter& others_table(std::int64_t voter_weight) const;
    double solve_double(int voter, bool criticality_filter) const;
    BigRational solve_exact(int voter, bool criticality_filter) const;

    WeightedVotingGame game_;
    Rational pd_;
    std::vector<double> plus_table_;     // P^ld(m, p_v/2)
    std::vector<double> follower_table_; // P^ld(m, p_d/(n-1))
    mutable std::unordered_map<std::int64_t, std::unique_ptr<PartitionCounter>> others_;
};

/// Single-voter entry point matching the module operation.
double ld_measure(const WeightedVotingGame& game, Rational pd, int voter);

} // namespace liquidpower
