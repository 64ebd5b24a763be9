#include "liquidpower/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace liquidpower {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint32_t pick_index(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

/// Box-Muller; explicit so results do not depend on the standard library's
/// normal_distribution implementation.
double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

DelegationGraph from_undirected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> out(n);
    for (const auto& [u, v] : edges) {
        out[u].push_back(v);
        out[v].push_back(u);
    }
    return DelegationGraph(n, std::move(out));
}

} // namespace

std::string to_string(NetworkFamily family) {
    switch (family) {
        case NetworkFamily::gnp: return "gnp";
        case NetworkFamily::pref_attach: return "pref_attach";
        case NetworkFamily::small_world: return "small_world";
        case NetworkFamily::spatial: return "spatial";
        case NetworkFamily::k_layers: return "k_layers";
    }
    return "?";
}

std::string to_string(SpatialDist dist) {
    return dist == SpatialDist::uniform ? "uniform" : "gaussian";
}

NetworkFamily network_family_from_string(const std::string& name) {
    if (name == "gnp") return NetworkFamily::gnp;
    if (name == "pref_attach") return NetworkFamily::pref_attach;
    if (name == "small_world") return NetworkFamily::small_world;
    if (name == "spatial") return NetworkFamily::spatial;
    if (name == "k_layers") return NetworkFamily::k_layers;
    throw std::invalid_argument("unknown network family '" + name + "'");
}

SpatialDist spatial_dist_from_string(const std::string& name) {
    if (name == "uniform") return SpatialDist::uniform;
    if (name == "gaussian") return SpatialDist::gaussian;
    throw std::invalid_argument("unknown spatial distribution '" + name + "'");
}

DelegationGraph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0 || p > 1)
        throw std::invalid_argument("gen_gnp: need n >= 0 and p in [0, 1]");
    auto rng = seeded(seed, 0xE2);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < p) edges.emplace_back(i, j);
    return from_undirected(n, edges);
}

DelegationGraph gen_pref_attach(int n, int m, std::uint64_t seed) {
    if (m < 1 || n <= m)
        throw std::invalid_argument("gen_pref_attach: need m >= 1 and n > m");
    auto rng = seeded(seed, 0xBA);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> endpoints; // node appears once per incident edge
    const int core = m + 1;
    for (int i = 0; i < core; ++i)
        for (int j = i + 1; j < core; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    std::vector<int> chosen;
    for (int v = core; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            const int t = endpoints[pick_index(rng, static_cast<std::uint32_t>(endpoints.size()))];
            if (t == v || std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
            chosen.push_back(t);
        }
        for (int t : chosen) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return from_undirected(n, edges);
}

DelegationGraph gen_small_world(int n, int k, double rewire_p, std::uint64_t seed) {
    if (k < 2 || k % 2 != 0 || k >= n)
        throw std::invalid_argument("gen_small_world: need even k with 2 <= k < n");
    if (rewire_p < 0 || rewire_p > 1)
        throw std::invalid_argument("gen_small_world: rewire probability must lie in [0, 1]");
    auto rng = seeded(seed, 0x5A);
    std::vector<std::pair<int, int>> lattice;
    std::unordered_set<std::uint64_t> present;
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= k / 2; ++d) {
            const int j = (i + d) % n;
            lattice.emplace_back(i, j);
            present.insert(edge_key(i, j));
        }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(lattice.size());
    for (auto [u, v] : lattice) {
        if (uniform01(rng) < rewire_p) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                const int w = static_cast<int>(pick_index(rng, static_cast<std::uint32_t>(n)));
                if (w == u || present.count(edge_key(u, w))) continue;
                present.erase(edge_key(u, v));
                present.insert(edge_key(u, w));
                v = w;
                break;
            }
        }
        edges.emplace_back(u, v);
    }
    return from_undirected(n, edges);
}

DelegationGraph gen_spatial(int n, int k, SpatialDist dist, std::uint64_t seed) {
    if (k < 1 || k >= n) throw std::invalid_argument("gen_spatial: need 1 <= k < n");
    auto rng = seeded(seed, 0x59);
    std::vector<std::pair<double, double>> pts(n);
    for (auto& [x, y] : pts) {
        if (dist == SpatialDist::uniform) {
            x = 2.0 * uniform01(rng) - 1.0;
            y = 2.0 * uniform01(rng) - 1.0;
        } else {
            x = gaussian(rng);
            y = gaussian(rng);
        }
    }
    std::vector<std::vector<int>> out(n);
    std::vector<std::pair<double, int>> dist2(n);
    for (int i = 0; i < n; ++i) {
        dist2.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dx = pts[i].first - pts[j].first;
            const double dy = pts[i].second - pts[j].second;
            dist2.emplace_back(dx * dx + dy * dy, j);
        }
        std::partial_sort(dist2.begin(), dist2.begin() + k, dist2.end());
        out[i].reserve(k);
        for (int t = 0; t < k; ++t) out[i].push_back(dist2[t].second);
        std::sort(out[i].begin(), out[i].end());
    }
    return DelegationGraph(n, std::move(out));
}

DelegationGraph gen_k_layers(int layers, int layer_size) {
    if (layers < 1 || layer_size < 1)
        throw std::invalid_argument("gen_k_layers: need layers >= 1 and layer_size >= 1");
    const int n = layers * layer_size;
    std::vector<std::vector<int>> out(n);
    for (int layer = 0; layer + 1 < layers; ++layer)
        for (int a = 0; a < layer_size; ++a) {
            auto& targets = out[layer * layer_size + a];
            targets.reserve(layer_size);
            for (int b = 0; b < layer_size; ++b)
                targets.push_back((layer + 1) * layer_size + b);
        }
    return DelegationGraph(n, std::move(out));
}

DelegationGraph generate(const NetworkSpec& spec) {
    switch (spec.family) {
        case NetworkFamily::gnp: return gen_gnp(spec.n, spec.p, spec.seed);
        case NetworkFamily::pref_attach: return gen_pref_attach(spec.n, spec.m, spec.seed);
        case NetworkFamily::small_world:
            return gen_small_world(spec.n, spec.k, spec.rewire_p, spec.seed);
        case NetworkFamily::spatial: return gen_spatial(spec.n, spec.k, spec.dist, spec.seed);
        case NetworkFamily::k_layers: return gen_k_layers(spec.layers, spec.layer_size);
    }
    throw std::invalid_argument("generate: unknown network family");
}

NetworkSpec default_experiment_spec(NetworkFamily family, int n, std::uint64_t seed) {
    NetworkSpec spec;
    spec.family = family;
    spec.n = n;
    spec.seed = seed;
    switch (family) {
        case NetworkFamily::gnp: spec.p = n > 1 ? 10.0 / (n - 1) : 0.0; break;
        case NetworkFamily::pref_attach: spec.m = 5; break;
        case NetworkFamily::small_world:
            spec.k = 10;
            spec.rewire_p = 0.2;
            break;
        case NetworkFamily::spatial: spec.k = 10; break;
        case NetworkFamily::k_layers:
            spec.layers = 10;
            spec.layer_size = n / 10 > 0 ? n / 10 : 1;
            spec.n = spec.layers * spec.layer_size;
            break;
    }
    return spec;
}

} // namespace liquidpower
