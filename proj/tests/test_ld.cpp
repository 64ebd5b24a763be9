#include "doctest.h"

#include <cmath>
#include <random>

#include "liquidpower/ld.hpp"
#include "liquidpower/oracle.hpp"
#include "reference_oracles.hpp"
#include "test_instances.hpp"

using namespace liquidpower;
using namespace lptest;

namespace {

WeightedVotingGame table2_game() { return example1_game(); } // same 13 weights, q = 1/2

// Probability that the set {0..m-1} on a complete n-digraph forms an
// in-forest whose roots all take an action of probability p_root, by direct
// enumeration of member actions with an acyclicity check.
double forest_probability_by_enumeration(int m, int n, double pd, double p_root) {
    if (m == 0) return 1.0;
    std::vector<int> target(m, -1); // -1: root action
    double total = 0.0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == m) {
            for (int s = 0; s < m; ++s) { // acyclic?
                int u = s, steps = 0;
                while (target[u] != -1) {
                    u = target[u];
                    if (++steps > m) return;
                }
            }
            double p = 1.0;
            for (int s = 0; s < m; ++s)
                p *= target[s] == -1 ? p_root : pd / (n - 1);
            total += p;
            return;
        }
        target[v] = -1;
        self(self, v + 1);
        for (int t = 0; t < m; ++t) {
            if (t == v) continue;
            target[v] = t;
            self(self, v + 1);
        }
        target[v] = -1;
    };
    rec(rec, 0);
    return total;
}

} // namespace

TEST_CASE("in-forest recursion base cases and the m = 2 closed form") {
    for (double p : {0.0, 0.3, 1.0}) {
        CHECK(pld(0, p, 7, 0.4) == 1.0);
        CHECK(pld(1, p, 7, 0.4) == p);
        CHECK(pld(2, p, 7, 0.4) == doctest::Approx(p * (p + 2 * 0.4 / 6)).epsilon(1e-14));
    }
}

TEST_CASE("in-forest probabilities match enumeration on five voters") {
    const int n = 5;
    const double pd = 0.5, pv = 0.5;
    for (int m = 0; m <= 4; ++m) {
        const double expect = forest_probability_by_enumeration(m, n, pd, pv / 2);
        CHECK(pld(m, pv / 2, n, pd) == doctest::Approx(expect).epsilon(1e-12));
        const double follow = forest_probability_by_enumeration(m, n, pd, pd / (n - 1));
        CHECK(pld(m, pd / (n - 1), n, pd) == doctest::Approx(follow).epsilon(1e-12));
    }
}

TEST_CASE("cycle-group probability") {
    CHECK(p0_cycle_probability(0, 13, 0.9) == 1.0);
    CHECK(p0_cycle_probability(1, 13, 0.9) == 0.0);
    CHECK(p0_cycle_probability(2, 13, 0.9) == doctest::Approx(0.005625).epsilon(1e-14));
}

TEST_CASE("Table 2 measures and the flattening spreads") {
    struct Row {
        Rational pd;
        double w3, w2, w1, spread; // spread follows from the tabulated values
    };
    const Row rows[] = {
        {Rational(0, 1), 0.511, 0.306, 0.148, 0.363},
        {Rational(1, 2), 0.424, 0.308, 0.212, 0.212},
        {Rational(9, 10), 0.696, 0.638, 0.568, 0.128},
    };
    double prev_spread = 1.0;
    for (const auto& row : rows) {
        const CompletePowerSolver solver(table2_game(), row.pd);
        const double m3 = solver.measure(0); // voter a, weight 3
        const double m2 = solver.measure(1); // voter b, weight 2
        const double m1 = solver.measure(2); // voter c, weight 1
        CHECK(std::abs(m3 - row.w3) <= 0.001);
        CHECK(std::abs(m2 - row.w2) <= 0.001);
        CHECK(std::abs(m1 - row.w1) <= 0.001);
        const double spread = std::max({m1, m2, m3}) - std::min({m1, m2, m3});
        CHECK(std::abs(spread - row.spread) <= 0.002);
        CHECK(spread < prev_spread); // flattening as delegation gets likelier
        prev_spread = spread;
    }
}

TEST_CASE("equal weights imply exactly equal measures") {
    const CompletePowerSolver solver(table2_game(), Rational(1, 2));
    CHECK(solver.measure(1) == solver.measure(3)); // b and d, both weight 2
    for (int v = 4; v < 13; ++v) CHECK(solver.measure(v) == solver.measure(2));
}

TEST_CASE("solver equals the brute-force oracle on complete digraphs") {
    std::mt19937_64 rng(307);
    std::uniform_int_distribution<int> n_dist(2, 6);
    std::uniform_int_distribution<std::int64_t> wd(1, 4);
    std::uniform_int_distribution<int> pd_num(0, 4);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = n_dist(rng);
        std::vector<std::int64_t> ws(n);
        for (auto& w : ws) w = wd(rng);
        const Rational pd(pd_num(rng), 5);
        const WeightedVotingGame game(ws, Rational(1, 2));
        const auto graph = DelegationGraph::complete(n);
        const auto model = BehaviorModel::constant_pd(graph, pd);
        const auto oracle = exact_measure_bruteforce(graph, game, model);
        const CompletePowerSolver solver(game, pd);
        for (int v = 0; v < n; ++v) {
            CHECK(std::abs(solver.measure(v) - to_double(oracle.measure[v])) < 1e-9);
            CHECK(solver.measure_exact(v) == oracle.measure[v]);
        }
    }
}

TEST_CASE("decomposition probability mass sums to one") {
    // exact for a rational p_d
    const CompletePowerSolver small(WeightedVotingGame({2, 1, 3, 1, 1, 2}, Rational(3, 5)),
                                    Rational(2, 7));
    CHECK(small.probability_sum_exact(0) == BigRational(1));
    CHECK(small.probability_sum_exact(2) == BigRational(1));

    // floating-point at n = 20 with mixed weights
    std::vector<std::int64_t> ws(20, 1);
    for (int v = 0; v < 6; ++v) ws[v] = 2;
    const CompletePowerSolver big(WeightedVotingGame(ws, Rational(1, 2)), Rational(2, 5));
    CHECK(std::abs(big.probability_sum(0) - 1.0) < 1e-10);
    CHECK(std::abs(big.probability_sum(19) - 1.0) < 1e-10);
}

TEST_CASE("no dummy voters once delegation is possible") {
    const WeightedVotingGame game({1, 1, 1, 10}, Rational(1, 2));
    const CompletePowerSolver zero(game, Rational(0, 1));
    CHECK(zero.measure(0) == 0.0); // classic dummy under a dictator
    const CompletePowerSolver half(game, Rational(1, 2));
    for (int v = 0; v < 4; ++v) CHECK(half.measure(v) > 0.0);
}

TEST_CASE("p_d = 0 reduces to the classical Banzhaf measure") {
    std::mt19937_64 rng(311);
    std::uniform_int_distribution<int> n_dist(1, 9);
    std::uniform_int_distribution<std::int64_t> wd(1, 8);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = n_dist(rng);
        std::vector<std::int64_t> ws(n);
        for (auto& w : ws) w = wd(rng);
        const WeightedVotingGame game(ws, Rational(13, 25));
        const CompletePowerSolver solver(game, Rational(0, 1));
        const auto classic = classic_banzhaf(game);
        for (int v = 0; v < n; ++v)
            CHECK(std::abs(solver.measure(v) - to_double(classic[v])) < 1e-9);
    }
}

TEST_CASE("single-voter wrapper and validation") {
    CHECK(ld_measure(WeightedVotingGame({1}, Rational(1, 2)), Rational(0, 1), 0) == 1.0);
    CHECK_THROWS(CompletePowerSolver(WeightedVotingGame({1}, Rational(1, 2)), Rational(1, 2)));
    CHECK_THROWS(pld(3, 0.5, 3, 0.5)); // m must stay below n
}
