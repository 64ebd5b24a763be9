#include "liquidpower/pv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "liquidpower/detail/prob_math.hpp"

namespace liquidpower {

using detail::int_pow;
using detail::KahanSum;

ProxyInstance::ProxyInstance(WeightedVotingGame game, std::vector<int> delegatees, Rational pd)
    : game_(std::move(game)), pd_(pd), delegatees_(std::move(delegatees)) {
    const int n = game_.size();
    if (delegatees_.empty())
        throw std::invalid_argument("ProxyInstance: delegatee set must be nonempty");
    is_delegatee_.assign(n, false);
    for (int v : delegatees_) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("ProxyInstance: delegatee id " + std::to_string(v) +
                                        " out of range");
        if (is_delegatee_[v])
            throw std::invalid_argument("ProxyInstance: duplicate delegatee id " +
                                        std::to_string(v));
        is_delegatee_[v] = true;
    }
    std::sort(delegatees_.begin(), delegatees_.end());
    for (int v = 0; v < n; ++v)
        if (!is_delegatee_[v]) delegators_.push_back(v);
    if (pd_ < Rational(0, 1) || pd_ > Rational(1, 1))
        throw std::invalid_argument("ProxyInstance: p_d must lie in [0, 1]");
}

DelegationGraph ProxyInstance::graph() const {
    return DelegationGraph::complete_bipartite(game_.size(), delegatees_);
}

namespace {

struct ProbValue {
    double value{0};
    double log2{-std::numeric_limits<double>::infinity()};
};

ProbValue pv_delegatee_prob_pair(int nv, int nd, double pd, int nvp, int ndp, int ndm) {
    if (nvp < 0 || nvp > nv - 1 || ndp < 0 || ndm < 0 || ndp + ndm > nd) return {};
    const int nvm = nv - 1 - nvp;
    const int ni = nd - ndp - ndm;
    const double pv = 1.0 - pd;
    const double a = pv / 2 + pd * nvp / nv;
    const double b = pv / 2 + pd * nvm / nv;
    const double c = pd / nv;
    ProbValue out;
    out.value = std::exp2(static_cast<double>(1 - nv)) * std::pow(a, ndp) * std::pow(b, ndm) *
                std::pow(c, ni);
    auto lg = [](double x, int e) { return e == 0 ? 0.0 : e * std::log2(x); };
    out.log2 = static_cast<double>(1 - nv) + lg(a, ndp) + lg(b, ndm) + lg(c, ni);
    return out;
}

ProbValue pv_delegator_prob_pair(int nv, int nd, double pd, int nvp, int ndp) {
    if (nd < 1 || nvp < 0 || nvp > nv || ndp < 0 || ndp > nd - 1) return {};
    const int nvm = nv - nvp;
    const int ndm = nd - 1 - ndp;
    const double pv = 1.0 - pd;
    const double a = pv / 2 + pd * nvp / nv;
    const double b = pv / 2 + pd * nvm / nv;
    ProbValue out;
    out.value = std::exp2(static_cast<double>(-nv)) * std::pow(a, ndp) * std::pow(b, ndm);
    auto lg = [](double x, int e) { return e == 0 ? 0.0 : e * std::log2(x); };
    out.log2 = static_cast<double>(-nv) + lg(a, ndp) + lg(b, ndm);
    return out;
}

ProbValue pvr_delegatee_prob_pair(int nv, int nd, int nvp, int ndp, int ndm) {
    if (nvp < 0 || nvp > nv - 1 || ndp < 0 || ndm < 0 || ndp + ndm > nd) return {};
    const int nvm = nv - 1 - nvp;
    if ((nvp == 0 && ndp > 0) || (nvm == 0 && ndm > 0)) return {};
    ProbValue out;
    auto lg = [](int x, int e) { return e == 0 ? 0.0 : e * std::log2(static_cast<double>(x)); };
    out.log2 = lg(nvp, ndp) + lg(nvm, ndm) - static_cast<double>(nv - 1) - nd * std::log2(nv);
    out.value = std::exp2(out.log2);
    return out;
}

ProbValue pvr_delegator_prob_pair(int nv, int nd, int nvp, int ndp) {
    if (nd < 1 || nvp < 0 || nvp > nv || ndp < 0 || ndp > nd - 1) return {};
    const int nvm = nv - nvp;
    const int ndm = nd - 1 - ndp;
    if ((nvp == 0 && ndp > 0) || (nvm == 0 && ndm > 0)) return {};
    ProbValue out;
    auto lg = [](int x, int e) { return e == 0 ? 0.0 : e * std::log2(static_cast<double>(x)); };
    out.log2 = lg(nvp, ndp) + lg(nvm, ndm) - static_cast<double>(nv) -
               (nd - 1) * std::log2(nv);
    out.value = std::exp2(out.log2);
    return out;
}

BigRational ratio_of(const Rational& r) { return BigRational(r.num(), r.den()); }

BigRational pv_delegatee_prob_exact(int nv, int nd, const Rational& pd_r, int nvp, int ndp,
                                    int ndm) {
    if (nvp < 0 || nvp > nv - 1 || ndp < 0 || ndm < 0 || ndp + ndm > nd) return 0;
    const int nvm = nv - 1 - nvp;
    const int ni = nd - ndp - ndm;
    const BigRational pd = ratio_of(pd_r);
    const BigRational pv = BigRational(1) - pd;
    const BigRational a = pv / 2 + pd * nvp / nv;
    const BigRational b = pv / 2 + pd * nvm / nv;
    const BigRational c = pd / nv;
    return int_pow(BigRational(1, 2), nv - 1) * int_pow(a, ndp) * int_pow(b, ndm) *
           int_pow(c, ni);
}

BigRational pv_delegator_prob_exact(int nv, int nd, const Rational& pd_r, int nvp, int ndp) {
    if (nd < 1 || nvp < 0 || nvp > nv || ndp < 0 || ndp > nd - 1) return 0;
    const int nvm = nv - nvp;
    const int ndm = nd - 1 - ndp;
    const BigRational pd = ratio_of(pd_r);
    const BigRational pv = BigRational(1) - pd;
    const BigRational a = pv / 2 + pd * nvp / nv;
    const BigRational b = pv / 2 + pd * nvm / nv;
    return int_pow(BigRational(1, 2), nv) * int_pow(a, ndp) * int_pow(b, ndm);
}

BigRational pvr_delegatee_prob_exact(int nv, int nd, int nvp, int ndp, int ndm) {
    if (nvp < 0 || nvp > nv - 1 || ndp < 0 || ndm < 0 || ndp + ndm > nd) return 0;
    const int nvm = nv - 1 - nvp;
    if ((nvp == 0 && ndp > 0) || (nvm == 0 && ndm > 0)) return 0;
    const BigInt num = int_pow(BigInt(nvp), ndp) * int_pow(BigInt(nvm), ndm);
    const BigInt den = int_pow(BigInt(2), nv - 1) * int_pow(BigInt(nv), nd);
    return BigRational(num, den);
}

BigRational pvr_delegator_prob_exact(int nv, int nd, int nvp, int ndp) {
    if (nd < 1 || nvp < 0 || nvp > nv || ndp < 0 || ndp > nd - 1) return 0;
    const int nvm = nv - nvp;
    const int ndm = nd - 1 - ndp;
    if ((nvp == 0 && ndp > 0) || (nvm == 0 && ndm > 0)) return 0;
    const BigInt num = int_pow(BigInt(nvp), ndp) * int_pow(BigInt(nvm), ndm);
    const BigInt den = int_pow(BigInt(2), nv) * int_pow(BigInt(nv), nd - 1);
    return BigRational(num, den);
}

/// lhs <= q * rhs and (lhs + gain) > q * rhs, in exact integers.
bool in_criticality_interval(std::int64_t w_plus, std::int64_t gain, std::int64_t active,
                             const Rational& q) {
    const __int128 scaled = static_cast<__int128>(q.num()) * active;
    if (static_cast<__int128>(w_plus) * q.den() > scaled) return false;
    return static_cast<__int128>(w_plus + gain) * q.den() > scaled;
}

double combine(double count, double count_log2, const ProbValue& p) {
    if (p.value > 0 && std::isfinite(count)) {
        const double direct = count * p.value;
        if (direct > 0 && std::isfinite(direct)) return direct;
    }
    if (p.log2 == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp2(count_log2 + p.log2);
}

} // namespace

double pv_prob_delegatee(const ProxyInstance& inst, int nv_plus, int nd_plus, int nd_minus) {
    return pv_delegatee_prob_pair(inst.delegatee_count(), inst.delegator_count(),
                                  inst.pd().as_double(), nv_plus, nd_plus, nd_minus)
        .value;
}

double pv_prob_delegator(const ProxyInstance& inst, int nv_plus, int nd_plus) {
    return pv_delegator_prob_pair(inst.delegatee_count(), inst.delegator_count(),
                                  inst.pd().as_double(), nv_plus, nd_plus)
        .value;
}

BigRational pv_prob_delegatee_exact(const ProxyInstance& inst, int nv_plus, int nd_plus,
                                    int nd_minus) {
    return pv_delegatee_prob_exact(inst.delegatee_count(), inst.delegator_count(), inst.pd(),
                                   nv_plus, nd_plus, nd_minus);
}

BigRational pv_prob_delegator_exact(const ProxyInstance& inst, int nv_plus, int nd_plus) {
    return pv_delegator_prob_exact(inst.delegatee_count(), inst.delegator_count(), inst.pd(),
                                   nv_plus, nd_plus);
}

double pvr_prob_delegatee(const ProxyInstance& inst, int nv_plus, int nd_plus, int nd_minus) {
    return pvr_delegatee_prob_pair(inst.delegatee_count(), inst.delegator_count(), nv_plus,
                                   nd_plus, nd_minus)
        .value;
}

double pvr_prob_delegator(const ProxyInstance& inst, int nv_plus, int nd_plus) {
    return pvr_delegator_prob_pair(inst.delegatee_count(), inst.delegator_count(), nv_plus,
                                   nd_plus)
        .value;
}

ProxyPowerSolver::ProxyPowerSolver(ProxyInstance inst) : inst_(std::move(inst)) {
    for (int v : inst_.delegatees()) delegatee_weights_.push_back(inst_.game().weight(v));
    for (int v : inst_.delegators()) delegator_weights_.push_back(inst_.game().weight(v));
}

const PartitionCounter& ProxyPowerSolver::delegator_three_way() const {
    if (!vd3_) vd3_ = std::make_unique<PartitionCounter>(delegator_weights_, 3);
    return *vd3_;
}

const PartitionCounter& ProxyPowerSolver::delegatee_pair_table() const {
    if (!vv2_) vv2_ = std::make_unique<PartitionCounter>(delegatee_weights_, 2);
    return *vv2_;
}

const PartitionCounter& ProxyPowerSolver::side_without(bool delegatee_side,
                                                       std::int64_t weight) const {
    auto& cache = delegatee_side ? vv_minus_ : vd_minus_;
    auto it = cache.find(weight);
    if (it != cache.end()) return *it->second;
    const auto& side = delegatee_side ? delegatee_weights_ : delegator_weights_;
    std::vector<std::int64_t> rest;
    rest.reserve(side.size() - 1);
    bool removed = false;
    for (std::int64_t w : side) {
        if (!removed && w == weight) {
            removed = true;
            continue;
        }
        rest.push_back(w);
    }
    auto table = std::make_unique<PartitionCounter>(rest, 2);
    return *cache.emplace(weight, std::move(table)).first->second;
}

std::vector<ProxyPowerSolver::Entry2> ProxyPowerSolver::entries2(const PartitionCounter& t) {
    std::vector<Entry2> out;
    out.reserve(t.state_count());
    t.for_each([&](const auto& sizes, const auto& weights, const BigInt& count) {
        out.push_back({sizes[0], weights[0], &count, count.convert_to<double>(),
                       detail::log2_big(count)});
    });
    return out;
}

std::vector<ProxyPowerSolver::Entry3> ProxyPowerSolver::entries3(const PartitionCounter& t) {
    std::vector<Entry3> out;
    out.reserve(t.state_count());
    t.for_each([&](const auto& sizes, const auto& weights, const BigInt& count) {
        out.push_back({sizes[0], sizes[1], weights[0], weights[1], &count,
                       count.convert_to<double>(), detail::log2_big(count)});
    });
    return out;
}

double ProxyPowerSolver::solve_double(int voter, bool restricted, bool criticality_filter) const {
    const auto& game = inst_.game();
    const int nv = inst_.delegatee_count();
    const int nd = inst_.delegator_count();
    const std::int64_t w_total = game.total_weight();
    const std::int64_t w_voter = game.weight(voter);
    const double pd = inst_.pd().as_double();
    const Rational& q = game.quota();
    KahanSum sum;

    if (inst_.is_delegatee(voter)) {
        std::int64_t wd_total = 0;
        for (std::int64_t w : delegator_weights_) wd_total += w;
        const auto vv = entries2(side_without(true, w_voter));
        const auto vd = entries3(delegator_three_way());
        for (const auto& d : vd) {
            const std::int64_t w_follow = wd_total - d.weight_a - d.weight_b;
            for (const auto& v : vv) {
                const std::int64_t w_plus = v.weight + d.weight_a;
                if (criticality_filter &&
                    !in_criticality_interval(w_plus, w_voter + w_follow, w_total, q))
                    continue;
                const ProbValue p =
                    restricted
                        ? pvr_delegatee_prob_pair(nv, nd, v.size, d.size_a, d.size_b)
                        : pv_delegatee_prob_pair(nv, nd, pd, v.size, d.size_a, d.size_b);
                sum.add(combine(d.count_d * v.count_d, d.count_log2 + v.count_log2, p));
            }
        }
    } else {
        const auto vv = entries2(delegatee_pair_table());
        const auto vd = entries2(side_without(false, w_voter));
        for (const auto& v : vv) {
            if (restricted && (v.size == 0 || v.size == nv)) continue;
            for (const auto& d : vd) {
                const std::int64_t w_plus = v.weight + d.weight;
                if (criticality_filter &&
                    !in_criticality_interval(w_plus, w_voter, w_total, q))
                    continue;
                const ProbValue p = restricted
                                        ? pvr_delegator_prob_pair(nv, nd, v.size, d.size)
                                        : pv_delegator_prob_pair(nv, nd, pd, v.size, d.size);
                sum.add(combine(v.count_d * d.count_d, v.count_log2 + d.count_log2, p));
            }
        }
    }
    return sum.value();
}

BigRational ProxyPowerSolver::solve_exact(int voter, bool restricted,
                                          bool criticality_filter) const {
    const auto& game = inst_.game();
    const int nv = inst_.delegatee_count();
    const int nd = inst_.delegator_count();
    const std::int64_t w_total = game.total_weight();
    const std::int64_t w_voter = game.weight(voter);
    const Rational& q = game.quota();
    BigRational sum = 0;

    if (inst_.is_delegatee(voter)) {
        std::int64_t wd_total = 0;
        for (std::int64_t w : delegator_weights_) wd_total += w;
        const auto vv = entries2(side_without(true, w_voter));
        const auto vd = entries3(delegator_three_way());
        for (const auto& d : vd) {
            const std::int64_t w_follow = wd_total - d.weight_a - d.weight_b;
            for (const auto& v : vv) {
                const std::int64_t w_plus = v.weight + d.weight_a;
                if (criticality_filter &&
                    !in_criticality_interval(w_plus, w_voter + w_follow, w_total, q))
                    continue;
                const BigRational p =
                    restricted
                        ? pvr_delegatee_prob_exact(nv, nd, v.size, d.size_a, d.size_b)
                        : pv_delegatee_prob_exact(nv, nd, inst_.pd(), v.size, d.size_a,
                                                  d.size_b);
                if (p.is_zero()) continue;
                sum += BigRational(*d.count * *v.count) * p;
            }
        }
    } else {
        const auto vv = entries2(delegatee_pair_table());
        const auto vd = entries2(side_without(false, w_voter));
        for (const auto& v : vv) {
            if (restricted && (v.size == 0 || v.size == nv)) continue;
            for (const auto& d : vd) {
                const std::int64_t w_plus = v.weight + d.weight;
                if (criticality_filter &&
                    !in_criticality_interval(w_plus, w_voter, w_total, q))
                    continue;
                const BigRational p =
                    restricted ? pvr_delegator_prob_exact(nv, nd, v.size, d.size)
                               : pv_delegator_prob_exact(nv, nd, inst_.pd(), v.size, d.size);
                if (p.is_zero()) continue;
                sum += BigRational(*v.count * *d.count) * p;
            }
        }
    }
    return sum;
}

double ProxyPowerSolver::measure(int voter) const { return solve_double(voter, false, true); }

double ProxyPowerSolver::restricted_measure(int voter) const {
    return solve_double(voter, true, true);
}

double ProxyPowerSolver::probability_sum(int voter) const {
    return solve_double(voter, false, false);
}

BigRational ProxyPowerSolver::probability_sum_exact(int voter) const {
    return solve_exact(voter, false, false);
}

BigRational ProxyPowerSolver::measure_exact(int voter) const {
    return solve_exact(voter, false, true);
}

BigRational ProxyPowerSolver::restricted_measure_exact(int voter) const {
    return solve_exact(voter, true, true);
}

namespace {

std::vector<double> dedup_by_class(const ProxyInstance& inst,
                                   const std::function<double(int)>& eval) {
    const int n = inst.game().size();
    std::vector<double> out(n);
    std::unordered_map<std::int64_t, double> cache; // key: weight, sign-tagged by side
    for (int v = 0; v < n; ++v) {
        const std::int64_t key =
            inst.game().weight(v) * 2 + (inst.is_delegatee(v) ? 1 : 0);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, eval(v)).first;
        out[v] = it->second;
    }
    return out;
}

} // namespace

std::vector<double> ProxyPowerSolver::measures() const {
    return dedup_by_class(inst_, [this](int v) { return measure(v); });
}

std::vector<double> ProxyPowerSolver::restricted_measures() const {
    return dedup_by_class(inst_, [this](int v) { return restricted_measure(v); });
}

double pv_measure(const ProxyInstance& inst, int voter) {
    return ProxyPowerSolver(inst).measure(voter);
}

double pvr_measure(const ProxyInstance& inst, int voter) {
    return ProxyPowerSolver(inst).restricted_measure(voter);
}

} // namespace liquidpower
