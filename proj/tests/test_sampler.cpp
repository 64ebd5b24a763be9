#include "doctest.h"

#include <cmath>
#include <random>

#include "liquidpower/ld.hpp"
#include "liquidpower/oracle.hpp"
#include "liquidpower/sampler.hpp"
#include "test_instances.hpp"

using namespace liquidpower;
using namespace lptest;

TEST_CASE("required sample counts from the Hoeffding bound") {
    CHECK(required_samples(100, 0.01, 0.05) == 41471); // ceil(ln(4000)/0.0002)
    CHECK(required_samples(8, 0.02, 0.05) == 7211);
    CHECK(required_samples(1, 0.9, 0.999) >= 1);
    CHECK_THROWS(required_samples(0, 0.1, 0.1));
    CHECK_THROWS(required_samples(10, 0.0, 0.1));
    CHECK_THROWS(required_samples(10, 0.1, 1.0));

    // halving epsilon quadruples the count, up to ceiling slack
    for (double eps : {0.05, 0.02, 0.013}) {
        const auto k = required_samples(50, eps, 0.05);
        const auto k2 = required_samples(50, eps / 2, 0.05);
        CHECK(k2 <= 4 * k);
        CHECK(k2 >= 4 * k - 3);
    }
}

TEST_CASE("sampled partitions honor the behavior model's support") {
    const auto graph = example1_graph();
    const auto no_delegation = BehaviorModel::constant_pd(graph, Rational(0, 1));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const auto partition = sample_partition(graph, no_delegation, rng);
        for (int v = 0; v < graph.size(); ++v) CHECK(!partition.action(v).is_delegation());
    }

    // p_d = 1 on a complete graph: all delegations
    const auto complete = DelegationGraph::complete(5);
    const auto always = BehaviorModel::constant_pd(complete, Rational(1, 1));
    const auto partition = sample_partition(complete, always, rng);
    for (int v = 0; v < 5; ++v) CHECK(partition.action(v).is_delegation());
}

TEST_CASE("fixed seed gives an identical partition stream") {
    const auto graph = example1_graph();
    const auto model = BehaviorModel::global_uniformity(graph);
    std::mt19937_64 rng_a(42), rng_b(42);
    for (int t = 0; t < 200; ++t) {
        const auto pa = sample_partition(graph, model, rng_a);
        const auto pb = sample_partition(graph, model, rng_b);
        CHECK(pa.actions() == pb.actions());
    }
}

TEST_CASE("empirical frequency of a fixed partition matches its probability") {
    const auto graph = DelegationGraph::complete(3);
    const auto model = BehaviorModel::global_uniformity(graph);
    // target: voter 0 votes +, voter 1 delegates to 0, voter 2 votes -
    const DelegationPartition target(
        graph, {VoterAction::plus(), VoterAction::delegate_to(0), VoterAction::minus()});
    const double p = partition_probability(target, graph, model);
    CHECK(p == doctest::Approx(1.0 / 64).epsilon(1e-12));

    std::mt19937_64 rng(7);
    const int draws = 1'000'000;
    int hits = 0;
    for (int t = 0; t < draws; ++t)
        if (sample_partition(graph, model, rng).actions() == target.actions()) ++hits;
    const double freq = static_cast<double>(hits) / draws;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(freq - p) < 3 * sigma);
}

TEST_CASE("estimates agree with the exact engine on the 13-voter instance") {
    const auto game = example1_game();
    const CompletePowerSolver exact(game, Rational(1, 2));
    const auto graph = DelegationGraph::complete(13);
    const auto model = BehaviorModel::constant_pd(graph, Rational(1, 2));
    const auto report =
        estimate_measures(graph, game, model, SamplingPlan::fixed_k(100'000, 2024));
    REQUIRE(report.sampling.has_value());
    CHECK(report.sampling->samples == 100'000);
    CHECK(!report.sampling->samples_derived);
    for (int v = 0; v < 13; ++v)
        CHECK(std::abs(report.measure[v] - exact.measure(v)) < 0.01);
}

TEST_CASE("per-sample indicators decompose the estimate") {
    const auto graph = example1_graph();
    const auto game = example1_game();
    const auto model = BehaviorModel::global_uniformity(graph);
    const auto report = estimate_measures(graph, game, model, SamplingPlan::fixed_k(20'000, 9));
    for (int v = 0; v < 13; ++v) {
        CHECK(report.measure[v] >= 0.0);
        CHECK(report.measure[v] <= 1.0);
        CHECK(report.positive[v] + report.negative[v] ==
              doctest::Approx(report.measure[v]).epsilon(1e-12));
    }
}

TEST_CASE("identical plans give identical reports") {
    const auto graph = example1_graph();
    const auto game = example1_game();
    const auto model = BehaviorModel::global_uniformity(graph);
    const auto plan = SamplingPlan::fixed_k(30'000, 77);
    const auto r1 = estimate_measures(graph, game, model, plan);
    const auto r2 = estimate_measures(graph, game, model, plan);
    CHECK(r1.measure == r2.measure);
    CHECK(r1.positive == r2.positive);
    CHECK(r1.negative == r2.negative);
}

TEST_CASE("hoeffding-sized runs from disjoint seeds stay within combined bounds") {
    std::mt19937_64 rng(501);
    const auto inst = random_instance(rng, 6, 4);
    const auto model = BehaviorModel::global_uniformity(inst.graph);
    const auto exact = exact_measure_bruteforce(inst.graph, inst.game, model);
    const double eps = 0.02;
    const auto plan_a = SamplingPlan::hoeffding(eps, 0.05, 1111);
    const auto plan_b = SamplingPlan::hoeffding(eps, 0.05, 2222);
    const auto ra = estimate_measures(inst.graph, inst.game, model, plan_a);
    const auto rb = estimate_measures(inst.graph, inst.game, model, plan_b);
    REQUIRE(ra.sampling.has_value());
    CHECK(ra.sampling->samples_derived);
    CHECK(ra.sampling->samples == required_samples(inst.game.size(), eps, 0.05));
    for (int v = 0; v < inst.game.size(); ++v) {
        const double truth = to_double(exact.measure[v]);
        CHECK(std::abs(ra.measure[v] - truth) < eps);
        CHECK(std::abs(rb.measure[v] - truth) < eps);
        CHECK(std::abs(ra.measure[v] - rb.measure[v]) < 2 * eps);
    }
}

TEST_CASE("fixed k reports a back-computed epsilon") {
    const auto graph = DelegationGraph::complete(4);
    const auto game = WeightedVotingGame({1, 1, 1, 1}, Rational(1, 2));
    const auto model = BehaviorModel::global_uniformity(graph);
    const auto report = estimate_measures(graph, game, model, SamplingPlan::fixed_k(5000, 3));
    REQUIRE(report.sampling.has_value());
    const double implied = std::sqrt(std::log(2.0 * 4 / 0.05) / (2.0 * 5000));
    CHECK(report.sampling->epsilon == doctest::Approx(implied).epsilon(1e-12));
    CHECK(report.sampling->delta == 0.05);
}
