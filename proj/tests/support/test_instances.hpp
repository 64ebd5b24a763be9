#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "liquidpower/behavior.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"

namespace lptest {

// 13-voter instance used throughout: voters a..m mapped to ids 0..12,
// every out-degree 2, weights a=3, b=d=2, rest 1, majority quota.
inline constexpr int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8, j = 9,
                     k = 10, l = 11, m = 12;

inline liquidpower::DelegationGraph example1_graph() {
    std::vector<std::vector<int>> out(13);
    out[a] = {b, e};
    out[b] = {c, f};
    out[c] = {i, a};
    out[d] = {a, e};
    out[e] = {b, l};
    out[f] = {c, l};
    out[g] = {c, l};
    out[h] = {i, c};
    out[i] = {h, m};
    out[j] = {d, a};
    out[k] = {d, e};
    out[l] = {m, k};
    out[m] = {l, g};
    return liquidpower::DelegationGraph(13, std::move(out));
}

inline std::vector<std::int64_t> example1_weights() {
    std::vector<std::int64_t> w(13, 1);
    w[a] = 3;
    w[b] = 2;
    w[d] = 2;
    return w;
}

inline liquidpower::WeightedVotingGame example1_game() {
    return liquidpower::WeightedVotingGame(example1_weights(), liquidpower::Rational(1, 2));
}

// Seeded random instances for property tests.
struct RandomInstance {
    liquidpower::DelegationGraph graph;
    liquidpower::WeightedVotingGame game;
};

inline liquidpower::DelegationGraph random_digraph(std::mt19937_64& rng, int n,
                                                   double arc_prob) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::vector<int>> out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng) < arc_prob) out[u].push_back(v);
    return liquidpower::DelegationGraph(n, std::move(out));
}

inline RandomInstance random_instance(std::mt19937_64& rng, int max_n, std::int64_t max_weight,
                                      double arc_prob = 0.45) {
    std::uniform_int_distribution<int> size_dist(1, max_n);
    const int n = size_dist(rng);
    std::uniform_int_distribution<std::int64_t> weight_dist(1, max_weight);
    std::vector<std::int64_t> weights(n);
    for (auto& w : weights) w = weight_dist(rng);
    std::uniform_int_distribution<int> quota_pct(51, 100);
    liquidpower::Rational quota(quota_pct(rng), 100);
    return {random_digraph(rng, n, arc_prob),
            liquidpower::WeightedVotingGame(std::move(weights), quota)};
}

} // namespace lptest
