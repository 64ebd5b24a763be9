#pragma once

#include <vector>

#include "liquidpower/bignum.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/partition.hpp"
#include "liquidpower/rational.hpp"

namespace liquidpower {

/// Per-voter behavior under the individual uniformity assumption:
/// voter i delegates with probability p_d^i (target uniform over OutN(i)),
/// otherwise votes, supporting or opposing with probability 1/2 each.
/// p_d^i is forced to 0 whenever OutN(i) is empty.
class BehaviorModel {
public:
    /// Every delegation partition equally likely: p_d^i = |OutN(i)| / (|OutN(i)| + 2).
    static BehaviorModel global_uniformity(const DelegationGraph& graph);
    /// Shared delegation probability (still 0 for voters without targets).
    static BehaviorModel constant_pd(const DelegationGraph& graph, Rational pd);
    static BehaviorModel per_voter(const DelegationGraph& graph, std::vector<Rational> pd);

    int size() const { return static_cast<int>(pd_.size()); }
    const Rational& delegation_prob(int i) const { return pd_[i]; }
    double pd(int i) const { return pd_[i].as_double(); }
    int out_degree(int i) const { return out_degree_[i]; }

    /// Probability of one voter's action: p_d^i/|OutN(i)| for a delegation,
    /// (1 - p_d^i)/2 for either direct vote.
    BigRational action_probability(int i, const VoterAction& action) const;

private:
    BehaviorModel(std::vector<Rational> pd, std::vector<int> out_degree);

    std::vector<Rational> pd_;
    std::vector<int> out_degree_;
};

/// Product of per-voter action probabilities, exact.
BigRational partition_probability_exact(const DelegationPartition& partition,
                                        const DelegationGraph& graph,
                                        const BehaviorModel& model);

double partition_probability(const DelegationPartition& partition,
                             const DelegationGraph& graph,
                             const BehaviorModel& model);

} // namespace liquidpower
