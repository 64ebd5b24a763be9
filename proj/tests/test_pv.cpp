#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "liquidpower/oracle.hpp"
#include "liquidpower/pv.hpp"
#include "reference_oracles.hpp"
#include "test_instances.hpp"

using namespace liquidpower;
using namespace lptest;

namespace {

ProxyInstance unit_instance(int nv, int nd, Rational pd) {
    std::vector<int> delegatees(nv);
    for (int v = 0; v < nv; ++v) delegatees[v] = v;
    return ProxyInstance(WeightedVotingGame(std::vector<std::int64_t>(nv + nd, 1),
                                            Rational(1, 2)),
                         delegatees, pd);
}

// Table 1 instance: delegatees a(w3), b(w2), c(w1); delegators d(w2) + nine w1.
ProxyInstance table1_instance(Rational pd) {
    return ProxyInstance(example1_game(), {0, 1, 2}, pd);
}

BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

} // namespace

TEST_CASE("profile probabilities: no-delegation degenerate cases") {
    const auto inst = unit_instance(3, 4, Rational(0, 1));
    // any profile leaving delegators unresolved is impossible at p_d = 0
    CHECK(pv_prob_delegatee(inst, 1, 1, 1) == 0.0); // n^i = 2 > 0
    // with everyone voting, fair independent coins remain
    CHECK(pv_prob_delegatee(inst, 1, 2, 2) == doctest::Approx(std::pow(0.5, 2 + 4)));
    CHECK(pv_prob_delegator(inst, 2, 1) == doctest::Approx(std::pow(0.5, 3 + 3)));
    // side-constraint violations are zero, not errors
    CHECK(pv_prob_delegatee(inst, 3, 0, 0) == 0.0);
    CHECK(pv_prob_delegator(inst, 4, 0) == 0.0);
    CHECK(pv_prob_delegator(inst, 1, 4) == 0.0);
}

TEST_CASE("delegatee profile probability equals the summed matching partitions") {
    // p_d = 1/2, three delegatees, ten delegators; profile (1, 2, 3)
    const auto inst = unit_instance(3, 10, Rational(1, 2));
    const auto graph = inst.graph();
    const auto model = BehaviorModel::constant_pd(graph, Rational(1, 2));
    const int ref = 0;
    // fix concrete sets realizing the profile
    const std::vector<int> vv_plus = {1};          // delegatee 1 votes +, delegatee 2 votes -
    const std::vector<int> vd_plus = {3, 4};       // n_d^+ = 2
    const std::vector<int> vd_minus = {5, 6, 7};   // n_d^- = 3
    const std::vector<int> vd_ref = {8, 9, 10, 11, 12};

    std::vector<std::vector<VoterAction>> options(13);
    options[ref] = {VoterAction::plus(), VoterAction::minus()}; // marginalized
    options[1] = {VoterAction::plus()};
    options[2] = {VoterAction::minus()};
    for (int v : vd_plus)
        options[v] = {VoterAction::plus(), VoterAction::delegate_to(1)};
    for (int v : vd_minus)
        options[v] = {VoterAction::minus(), VoterAction::delegate_to(2)};
    for (int v : vd_ref) options[v] = {VoterAction::delegate_to(ref)};

    BigRational total = 0;
    std::vector<VoterAction> acts(13);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == 13) {
            total += partition_probability_exact(DelegationPartition(graph, acts), graph, model);
            return;
        }
        for (const auto& option : options[v]) {
            acts[v] = option;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    CHECK(total == pv_prob_delegatee_exact(inst, 1, 2, 3));
    CHECK(to_double(total) == doctest::Approx(pv_prob_delegatee(inst, 1, 2, 3)).epsilon(1e-12));
}

TEST_CASE("profile classes exhaust the probability space (joint enumeration)") {
    const int nv = 3, nd = 4, n = nv + nd;
    const auto inst = unit_instance(nv, nd, Rational(1, 3));
    const auto graph = inst.graph();
    const auto model = BehaviorModel::constant_pd(graph, Rational(1, 3));

    std::map<std::tuple<int, int, int>, BigRational> tee_buckets;
    std::map<std::tuple<int, int>, BigRational> tor_buckets;
    const int tee_ref = 0;
    const int tor_ref = nv; // first delegator

    std::vector<VoterAction> acts(n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            const DelegationPartition partition(graph, acts);
            const BigRational p = partition_probability_exact(partition, graph, model);
            const auto resolved = resolve_delegations(partition, graph);
            int nvp = 0, ndp = 0, ndm = 0;
            for (int t = 0; t < nv; ++t)
                if (t != tee_ref && resolved.vote(t) == 1) ++nvp;
            for (int t = nv; t < n; ++t) {
                if (acts[t].is_delegation() && acts[t].target == tee_ref)
                    continue; // follower of the reference delegatee
                if (resolved.vote(t) == 1)
                    ++ndp;
                else
                    ++ndm;
            }
            tee_buckets[{nvp, ndp, ndm}] += p;

            int all_vp = 0, other_dp = 0;
            for (int t = 0; t < nv; ++t)
                if (resolved.vote(t) == 1) ++all_vp;
            for (int t = nv; t < n; ++t)
                if (t != tor_ref && resolved.vote(t) == 1) ++other_dp;
            tor_buckets[{all_vp, other_dp}] += p;
            return;
        }
        acts[v] = VoterAction::plus();
        self(self, v + 1);
        acts[v] = VoterAction::minus();
        self(self, v + 1);
        for (int t : graph.out_neighbors(v)) {
            acts[v] = VoterAction::delegate_to(t);
            self(self, v + 1);
        }
    };
    rec(rec, 0);

    BigRational tee_total = 0, tor_total = 0;
    for (const auto& [key, prob] : tee_buckets) {
        const auto [nvp, ndp, ndm] = key;
        const BigInt ways = binom(nv - 1, nvp) * binom(nd, ndp) * binom(nd - ndp, ndm);
        CHECK(prob == BigRational(ways) * pv_prob_delegatee_exact(inst, nvp, ndp, ndm));
        tee_total += prob;
    }
    for (const auto& [key, prob] : tor_buckets) {
        const auto [nvp, ndp] = key;
        const BigInt ways = binom(nv, nvp) * binom(nd - 1, ndp);
        CHECK(prob == BigRational(ways) * pv_prob_delegator_exact(inst, nvp, ndp));
        tor_total += prob;
    }
    CHECK(tee_total == BigRational(1));
    CHECK(tor_total == BigRational(1));
}

TEST_CASE("Table 1 measures at p_d in {0, 0.5, 0.9}") {
    struct Row {
        Rational pd;
        double a, b, c, d, small;
    };
    const Row rows[] = {
        {Rational(0, 1), 0.511, 0.306, 0.148, 0.306, 0.148},
        {Rational(1, 2), 0.552, 0.395, 0.303, 0.206, 0.098},
        {Rational(9, 10), 0.542, 0.438, 0.390, 0.138, 0.065},
    };
    for (const auto& row : rows) {
        const ProxyPowerSolver solver(table1_instance(row.pd));
        CHECK(std::abs(solver.measure(0) - row.a) <= 0.001);
        CHECK(std::abs(solver.measure(1) - row.b) <= 0.001);
        CHECK(std::abs(solver.measure(2) - row.c) <= 0.001);
        CHECK(std::abs(solver.measure(3) - row.d) <= 0.001);
        CHECK(std::abs(solver.measure(4) - row.small) <= 0.001);
        // same-weight voters inside each side agree exactly
        const auto all = solver.measures();
        for (int v = 5; v < 13; ++v) CHECK(all[v] == all[4]);
    }
}

TEST_CASE("p_d = 0 reduces to the classical Banzhaf measure") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> nv_dist(1, 4), nd_dist(0, 5);
        std::uniform_int_distribution<std::int64_t> wd(1, 6);
        const int nv = nv_dist(rng), nd = nd_dist(rng);
        std::vector<std::int64_t> ws(nv + nd);
        for (auto& w : ws) w = wd(rng);
        std::vector<int> delegatees(nv);
        for (int v = 0; v < nv; ++v) delegatees[v] = v;
        const WeightedVotingGame game(ws, Rational(51, 100));
        const ProxyInstance inst(game, delegatees, Rational(0, 1));
        const ProxyPowerSolver solver(inst);
        const auto classic = classic_banzhaf(game);
        for (int v = 0; v < nv + nd; ++v)
            CHECK(std::abs(solver.measure(v) - to_double(classic[v])) < 1e-9);
    }
}

TEST_CASE("solver equals the brute-force oracle on random bipartite instances") {
    std::mt19937_64 rng(223);
    std::uniform_int_distribution<int> nv_dist(1, 3), nd_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> wd(1, 4);
    std::uniform_int_distribution<int> pd_num(0, 3);
    for (int trial = 0; trial < 12; ++trial) {
        const int nv = nv_dist(rng), nd = nd_dist(rng);
        std::vector<std::int64_t> ws(nv + nd);
        for (auto& w : ws) w = wd(rng);
        std::vector<int> delegatees(nv);
        for (int v = 0; v < nv; ++v) delegatees[v] = v;
        const Rational pd(pd_num(rng), 3);
        const WeightedVotingGame game(ws, Rational(1, 2));
        const ProxyInstance inst(game, delegatees, pd);
        const ProxyPowerSolver solver(inst);
        const auto graph = inst.graph();
        const auto model = BehaviorModel::constant_pd(graph, pd);
        const auto oracle = exact_measure_bruteforce(graph, game, model);
        for (int v = 0; v < nv + nd; ++v) {
            CHECK(std::abs(solver.measure(v) - to_double(oracle.measure[v])) < 1e-9);
            CHECK(solver.measure_exact(v) == oracle.measure[v]);
        }
    }
}

TEST_CASE("profile probability mass sums to one") {
    // exact, for rational p_d on mixed weights
    const ProxyInstance small(WeightedVotingGame({2, 1, 1, 3, 1, 2}, Rational(2, 3)),
                              {0, 1}, Rational(2, 7));
    const ProxyPowerSolver solver(small);
    CHECK(solver.probability_sum_exact(0) == BigRational(1)); // delegatee
    CHECK(solver.probability_sum_exact(2) == BigRational(1)); // delegator

    // floating-point, n = 20
    const ProxyPowerSolver big(ProxyPowerSolver(unit_instance(6, 14, Rational(1, 2))));
    CHECK(std::abs(big.probability_sum(0) - 1.0) < 1e-10);
    CHECK(std::abs(big.probability_sum(6) - 1.0) < 1e-10);
}

TEST_CASE("power transfers monotonically from delegators to delegatees") {
    // unit weights: delegatee measure nondecreasing, delegator nonincreasing in p_d
    double prev_tee = -1.0, prev_tor = 2.0;
    for (int step = 0; step <= 10; ++step) {
        const ProxyPowerSolver solver(unit_instance(3, 9, Rational(step, 10)));
        const double tee = solver.measure(0);
        const double tor = solver.measure(3);
        CHECK(tee >= prev_tee - 1e-12);
        CHECK(tor <= prev_tor + 1e-12);
        prev_tee = tee;
        prev_tor = tor;
    }
}

TEST_CASE("restricted proxy voting: lone delegatee takes all the power") {
    const ProxyPowerSolver solver(unit_instance(1, 7, Rational(1, 2)));
    CHECK(solver.restricted_measure(0) == doctest::Approx(1.0));
    for (int v = 1; v < 8; ++v) CHECK(solver.restricted_measure(v) == 0.0);
}

TEST_CASE("restricted proxy voting on the 100-voter two-delegatee instance") {
    const ProxyPowerSolver solver(unit_instance(2, 98, Rational(1, 2)));
    const double tee = solver.restricted_measure(0);
    const double tor = solver.restricted_measure(2);
    // exact values: 1/2 and C(97,49)/2^98
    CHECK(std::abs(tee - 0.5) < 1e-12);
    CHECK(std::abs(tor - 0.040196584538979174) < 1e-12);
    // the sampled series reported for this point
    CHECK(std::abs(tee - 0.499695) < 0.01);
    CHECK(std::abs(tor - 0.0399327551) < 0.01);
}

TEST_CASE("restricted measures match a restricted brute force") {
    std::mt19937_64 rng(227);
    std::uniform_int_distribution<int> nv_dist(1, 3), nd_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> wd(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const int nv = nv_dist(rng), nd = nd_dist(rng);
        const int n = nv + nd;
        std::vector<std::int64_t> ws(n);
        for (auto& w : ws) w = wd(rng);
        std::vector<int> delegatees(nv);
        for (int v = 0; v < nv; ++v) delegatees[v] = v;
        const WeightedVotingGame game(ws, Rational(1, 2));
        const ProxyInstance inst(game, delegatees, Rational(1, 2));
        const ProxyPowerSolver solver(inst);

        // enumerate PV_r partitions: delegatees vote, delegators delegate
        std::vector<BigRational> brute(n, 0);
        BigRational each(1, 1);
        for (int t = 0; t < nv; ++t) each /= 2;
        for (int t = 0; t < nd; ++t) each /= nv;
        std::vector<int> choice(n, 0); // delegatee: 0/1 vote; delegator: target index
        auto outcome_of = [&](const std::vector<signed char>& votes) {
            std::int64_t plus = 0;
            for (int t = 0; t < n; ++t)
                if (votes[t] == 1) plus += ws[t];
            return game.outcome(plus, game.total_weight());
        };
        auto rec = [&](auto&& self, int v) -> void {
            if (v == n) {
                std::vector<signed char> votes(n);
                for (int t = 0; t < nv; ++t) votes[t] = choice[t] == 0 ? 1 : -1;
                for (int t = nv; t < n; ++t) votes[t] = votes[choice[t]];
                for (int t = 0; t < n; ++t) {
                    if (t < nv) {
                        auto flipped = votes;
                        flipped[t] = 1;
                        for (int u = nv; u < n; ++u) flipped[u] = flipped[choice[u]];
                        const int up = outcome_of(flipped);
                        flipped[t] = -1;
                        for (int u = nv; u < n; ++u) flipped[u] = flipped[choice[u]];
                        const int down = outcome_of(flipped);
                        if (up != down) brute[t] += each;
                    } else {
                        int plus_tee = -1, minus_tee = -1;
                        for (int u = 0; u < nv; ++u)
                            (votes[u] == 1 ? plus_tee : minus_tee) = u;
                        if (plus_tee < 0 || minus_tee < 0) continue;
                        auto moved = votes;
                        moved[t] = 1;
                        const int up = outcome_of(moved);
                        moved[t] = -1;
                        const int down = outcome_of(moved);
                        if (up != down) brute[t] += each;
                    }
                }
                return;
            }
            const int options = v < nv ? 2 : nv;
            for (int pick = 0; pick < options; ++pick) {
                choice[v] = pick;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
        for (int v = 0; v < n; ++v) CHECK(solver.restricted_measure_exact(v) == brute[v]);
    }
}
