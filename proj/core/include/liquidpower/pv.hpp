#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "liquidpower/bignum.hpp"
#include "liquidpower/counting.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/rational.hpp"

namespace liquidpower {

/// Proxy-voting instance: delegatees (V_v) always vote, delegators (V_d) may
/// vote or delegate to any delegatee, all with a shared delegation
/// probability p_d. The delegation pattern is the complete bipartite one.
class ProxyInstance {
public:
    ProxyInstance(WeightedVotingGame game, std::vector<int> delegatees, Rational pd);

    const WeightedVotingGame& game() const { return game_; }
    const Rational& pd() const { return pd_; }
    const std::vector<int>& delegatees() const { return delegatees_; }
    const std::vector<int>& delegators() const { return delegators_; }
    int delegatee_count() const { return static_cast<int>(delegatees_.size()); }
    int delegator_count() const { return static_cast<int>(delegators_.size()); }
    bool is_delegatee(int voter) const { return is_delegatee_[voter]; }

    DelegationGraph graph() const;

private:
    WeightedVotingGame game_;
    Rational pd_;
    std::vector<int> delegatees_;
    std::vector<int> delegators_;
    std::vector<bool> is_delegatee_;
};

/// Probability that the voters other than a fixed delegatee split into
/// (nv_plus supporting delegatees, nd_plus / nd_minus resolved delegators,
/// the rest delegating to the fixed delegatee). Profiles violating the side
/// constraints have probability 0.
double pv_prob_delegatee(const ProxyInstance& inst, int nv_plus, int nd_plus, int nd_minus);
/// Same grouping seen from a fixed delegator (nobody can delegate to them).
double pv_prob_delegator(const ProxyInstance& inst, int nv_plus, int nd_plus);
BigRational pv_prob_delegatee_exact(const ProxyInstance& inst, int nv_plus, int nd_plus,
                                    int nd_minus);
BigRational pv_prob_delegator_exact(const ProxyInstance& inst, int nv_plus, int nd_plus);

/// Restricted proxy voting (delegators must delegate); p_d plays no role.
double pvr_prob_delegatee(const ProxyInstance& inst, int nv_plus, int nd_plus, int nd_minus);
double pvr_prob_delegator(const ProxyInstance& inst, int nv_plus, int nd_plus);

/// Pseudo-polynomial power measures on proxy instances: enumerate
/// (size, weight) decompositions of the delegatee/delegator sides, test the
/// quota interval for criticality, weight by partition counts times profile
/// probability. Count tables for the shared sides are built once and reused
/// across voters.
class ProxyPowerSolver {
public:
    explicit ProxyPowerSolver(ProxyInstance inst);

    const ProxyInstance& instance() const { return inst_; }

    double measure(int voter) const;
    std::vector<double> measures() const;

    /// PV_r measure: delegators must delegate; a delegator is critical only
    /// when delegatees with opposite votes exist.
    double restricted_measure(int voter) const;
    std::vector<double> restricted_measures() const;

    /// Total probability mass over all decompositions for a fixed voter;
    /// equals 1 up to rounding. Diagnostic for the profile probabilities.
    double probability_sum(int voter) const;
    BigRational probability_sum_exact(int voter) const;
    BigRational measure_exact(int voter) const;
    BigRational restricted_measure_exact(int voter) const;

private:
    struct Entry2 {
        int size;
        std::int64_t weight;
        const BigInt* count;
        double count_d, count_log2;
    };
    struct Entry3 {
        int size_a, size_b;
        std::int64_t weight_a, weight_b;
        const BigInt* count;
        double count_d, count_log2;
    };

    const PartitionCounter& delegator_three_way() const;
    const PartitionCounter& delegatee_pair_table() const; // 2-way over all of V_v
    const PartitionCounter& side_without(bool delegatee_side, std::int64_t weight) const;
    static std::vector<Entry2> entries2(const PartitionCounter& t);
    static std::vector<Entry3> entries3(const PartitionCounter& t);

    double solve_double(int voter, bool restricted, bool criticality_filter) const;
    BigRational solve_exact(int voter, bool restricted, bool criticality_filter) const;

    ProxyInstance inst_;
    std::vector<std::int64_t> delegatee_weights_;
    std::vector<std::int64_t> delegator_weights_;
    mutable std::unique_ptr<PartitionCounter> vd3_;
    mutable std::unique_ptr<PartitionCounter> vv2_;
    mutable std::unordered_map<std::int64_t, std::unique_ptr<PartitionCounter>> vv_minus_;
    mutable std::unordered_map<std::int64_t, std::unique_ptr<PartitionCounter>> vd_minus_;
};

/// Convenience single-voter entry points.
double pv_measure(const ProxyInstance& inst, int voter);
double pvr_measure(const ProxyInstance& inst, int voter);

} // namespace liquidpower
