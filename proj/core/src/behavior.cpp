#include "liquidpower/behavior.hpp"

#include <stdexcept>
#include <string>

namespace liquidpower {

BehaviorModel::BehaviorModel(std::vector<Rational> pd, std::vector<int> out_degree)
    : pd_(std::move(pd)), out_degree_(std::move(out_degree)) {}

BehaviorModel BehaviorModel::global_uniformity(const DelegationGraph& graph) {
    std::vector<Rational> pd;
    std::vector<int> deg;
    pd.reserve(graph.size());
    deg.reserve(graph.size());
    for (int i = 0; i < graph.size(); ++i) {
        const int d = graph.out_degree(i);
        pd.emplace_back(d, d + 2);
        deg.push_back(d);
    }
    return BehaviorModel(std::move(pd), std::move(deg));
}

BehaviorModel BehaviorModel::constant_pd(const DelegationGraph& graph, Rational pd) {
    if (pd < Rational(0, 1) || pd > Rational(1, 1))
        throw std::invalid_argument("BehaviorModel: p_d must lie in [0, 1], got " + pd.str());
    std::vector<Rational> probs;
    std::vector<int> deg;
    for (int i = 0; i < graph.size(); ++i) {
        const int d = graph.out_degree(i);
        probs.push_back(d == 0 ? Rational(0, 1) : pd);
        deg.push_back(d);
    }
    return BehaviorModel(std::move(probs), std::move(deg));
}

BehaviorModel BehaviorModel::per_voter(const DelegationGraph& graph, std::vector<Rational> pd) {
    if (static_cast<int>(pd.size()) != graph.size())
        throw std::invalid_argument("BehaviorModel: p_d list size != voter count");
    std::vector<int> deg;
    for (int i = 0; i < graph.size(); ++i) {
        if (pd[i] < Rational(0, 1) || pd[i] > Rational(1, 1))
            throw std::invalid_argument("BehaviorModel: p_d of voter " + std::to_string(i) +
                                        " must lie in [0, 1]");
        if (graph.out_degree(i) == 0 && pd[i] != Rational(0, 1))
            throw std::invalid_argument("BehaviorModel: voter " + std::to_string(i) +
                                        " has no delegation targets; p_d must be 0");
        deg.push_back(graph.out_degree(i));
    }
    return BehaviorModel(std::move(pd), std::move(deg));
}

BigRational BehaviorModel::action_probability(int i, const VoterAction& action) const {
    const Rational& p = pd_[i];
    if (action.is_delegation())
        return BigRational(p.num(), static_cast<std::int64_t>(p.den()) * out_degree_[i]);
    return BigRational(p.den() - p.num(), 2 * p.den());
}

BigRational partition_probability_exact(const DelegationPartition& partition,
                                        const DelegationGraph& graph,
                                        const BehaviorModel& model) {
    if (partition.size() != graph.size() || model.size() != graph.size())
        throw std::invalid_argument("partition_probability: size mismatch");
    BigRational prob = 1;
    for (int i = 0; i < graph.size(); ++i)
        prob *= model.action_probability(i, partition.action(i));
    return prob;
}

double partition_probability(const DelegationPartition& partition,
                             const DelegationGraph& graph,
                             const BehaviorModel& model) {
    return to_double(partition_probability_exact(partition, graph, model));
}

} // namespace liquidpower
