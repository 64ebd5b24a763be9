#include "liquidpower/ld.hpp"

#include <cmath>
#include <stdexcept>

#include "liquidpower/detail/forest_prob.hpp"
#include "liquidpower/detail/prob_math.hpp"

namespace liquidpower {

using detail::KahanSum;

double pld(int m, double p, int n, double pd) {
    if (n < 1 || m < 0 || m > n - 1)
        throw std::invalid_argument("pld: need 0 <= m <= n-1 and n >= 1");
    if (m == 0) return 1.0;
    detail::ForestTable<double> table(n, pd);
    return table.table(p)[m];
}

double p0_cycle_probability(int n0, int n, double pd) {
    if (n < 1 || n0 < 0 || n0 > n - 1)
        throw std::invalid_argument("p0_cycle_probability: need 0 <= n0 <= n-1");
    return detail::cycle_group_probability(n0, n, pd);
}

CompletePowerSolver::CompletePowerSolver(WeightedVotingGame game, Rational pd)
    : game_(std::move(game)), pd_(pd) {
    if (game_.size() < 1) throw std::invalid_argument("CompletePowerSolver: empty game");
    if (pd_ < Rational(0, 1) || pd_ > Rational(1, 1))
        throw std::invalid_argument("CompletePowerSolver: p_d must lie in [0, 1]");
    if (game_.size() == 1 && pd_ != Rational(0, 1))
        throw std::invalid_argument("CompletePowerSolver: a single voter cannot delegate");
    const int n = game_.size();
    const double pd_d = pd_.as_double();
    detail::ForestTable<double> table(n, pd_d);
    plus_table_ = table.table((1.0 - pd_d) / 2.0);
    follower_table_ = table.follower_table();
}

const PartitionCounter& CompletePowerSolver::others_table(std::int64_t voter_weight) const {
    auto it = others_.find(voter_weight);
    if (it != others_.end()) return *it->second;
    std::vector<std::int64_t> rest;
    rest.reserve(game_.size() - 1);
    bool removed = false;
    for (std::int64_t w : game_.weights()) {
        if (!removed && w == voter_weight) {
            removed = true;
            continue;
        }
        rest.push_back(w);
    }
    auto table = std::make_unique<PartitionCounter>(rest, 4);
    return *others_.emplace(voter_weight, std::move(table)).first->second;
}

double CompletePowerSolver::solve_double(int voter, bool criticality_filter) const {
    const int n = game_.size();
    const std::int64_t w_total = game_.total_weight();
    const std::int64_t w_voter = game_.weight(voter);
    const Rational& q = game_.quota();
    const double pd_d = pd_.as_double();
    KahanSum sum;
    others_table(w_voter).for_each([&](const auto& sizes, const auto& weights,
                                       const BigInt& count) {
        const int n_plus = sizes[0], n_minus = sizes[1], n_zero = sizes[2];
        const std::int64_t w_plus = weights[0], w_zero = weights[2];
        const int n_follow = (n - 1) - n_plus - n_minus - n_zero;
        const std::int64_t w_follow =
            w_total - w_voter - w_plus - weights[1] - w_zero;
        if (criticality_filter) {
            const std::int64_t active = w_total - w_zero;
            const __int128 scaled = static_cast<__int128>(q.num()) * active;
            if (static_cast<__int128>(w_plus) * q.den() > scaled) return;
            if (static_cast<__int128>(w_plus + w_voter + w_follow) * q.den() <= scaled) return;
        }
        const double prob = plus_table_[n_plus] * plus_table_[n_minus] *
                            follower_table_[n_follow] *
                            detail::cycle_group_probability(n_zero, n, pd_d);
        if (prob <= 0) return;
        sum.add(detail::count_times_prob(count, prob, std::log2(prob)));
    });
    return sum.value();
}

BigRational CompletePowerSolver::solve_exact(int voter, bool criticality_filter) const {
    const int n = game_.size();
    const std::int64_t w_total = game_.total_weight();
    const std::int64_t w_voter = game_.weight(voter);
    const Rational& q = game_.quota();
    const BigRational pd_x(pd_.num(), pd_.den());
    detail::ForestTable<BigRational> table(n, pd_x);
    const std::vector<BigRational> plus_tab = table.table((BigRational(1) - pd_x) / 2);
    const std::vector<BigRational>& follow_tab = table.follower_table();
    BigRational sum = 0;
    others_table(w_voter).for_each([&](const auto& sizes, const auto& weights,
                                       const BigInt& count) {
        const int n_plus = sizes[0], n_minus = sizes[1], n_zero = sizes[2];
        const std::int64_t w_plus = weights[0], w_zero = weights[2];
        const int n_follow = (n - 1) - n_plus - n_minus - n_zero;
        const std::int64_t w_follow =
            w_total - w_voter - w_plus - weights[1] - w_zero;
        if (criticality_filter) {
            const std::int64_t active = w_total - w_zero;
            const __int128 scaled = static_cast<__int128>(q.num()) * active;
            if (static_cast<__int128>(w_plus) * q.den() > scaled) return;
            if (static_cast<__int128>(w_plus + w_voter + w_follow) * q.den() <= scaled) return;
        }
        const BigRational prob = plus_tab[n_plus] * plus_tab[n_minus] *
                                 follow_tab[n_follow] *
                                 detail::cycle_group_probability(n_zero, n, pd_x);
        if (prob.is_zero()) return;
        sum += BigRational(count) * prob;
    });
    return sum;
}

double CompletePowerSolver::measure(int voter) const {
    if (voter < 0 || voter >= game_.size())
        throw std::out_of_range("CompletePowerSolver: voter id out of range");
    return solve_double(voter, true);
}

double CompletePowerSolver::probability_sum(int voter) const {
    return solve_double(voter, false);
}

BigRational CompletePowerSolver::measure_exact(int voter) const {
    return solve_exact(voter, true);
}

BigRational CompletePowerSolver::probability_sum_exact(int voter) const {
    return solve_exact(voter, false);
}

std::vector<double> CompletePowerSolver::measures() const {
    const int n = game_.size();
    std::vector<double> out(n);
    std::unordered_map<std::int64_t, double> by_weight;
    for (int v = 0; v < n; ++v) {
        auto it = by_weight.find(game_.weight(v));
        if (it == by_weight.end()) it = by_weight.emplace(game_.weight(v), measure(v)).first;
        out[v] = it->second;
    }
    return out;
}

double ld_measure(const WeightedVotingGame& game, Rational pd, int voter) {
    return CompletePowerSolver(game, pd).measure(voter);
}

} // namespace liquidpower
