#pragma once

#include <cstdint>
#include <string>

#include "liquidpower/graph.hpp"

namespace liquidpower {

enum class NetworkFamily { gnp, pref_attach, small_world, spatial, k_layers };
enum class SpatialDist { uniform, gaussian };

std::string to_string(NetworkFamily family);
std::string to_string(SpatialDist dist);
NetworkFamily network_family_from_string(const std::string& name);
SpatialDist spatial_dist_from_string(const std::string& name);

/// Generator parameters for the five experiment network families. Only the
/// fields relevant to the chosen family are read.
struct NetworkSpec {
    NetworkFamily family{NetworkFamily::gnp};
    int n{0};
    double p{0};                              // gnp: edge probability
    int m{0};                                 // pref_attach: edges per new node
    int k{0};                                 // small_world / spatial: neighbor count
    double rewire_p{0};                       // small_world
    SpatialDist dist{SpatialDist::uniform};   // spatial
    int layers{0};                            // k_layers
    int layer_size{0};                        // k_layers
    std::uint64_t seed{0};

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Undirected Erdos-Renyi G(n, p) materialized as a symmetric digraph.
DelegationGraph gen_gnp(int n, double p, std::uint64_t seed);

/// Preferential attachment: a complete core of m+1 nodes, then each new node
/// attaches (bidirectionally) to m distinct existing nodes chosen with
/// probability proportional to current degree. Undirected edge count is
/// C(m+1, 2) + m * (n - m - 1).
DelegationGraph gen_pref_attach(int n, int m, std::uint64_t seed);

/// Ring lattice with k nearest neighbors, each edge independently rewired to
/// a uniform endpoint with probability rewire_p; no self-loops or duplicate
/// edges, edge count stays n*k/2. Symmetric digraph.
DelegationGraph gen_small_world(int n, int k, double rewire_p, std::uint64_t seed);

/// Nodes embedded in the plane (uniform on [-1,1]^2 or standard gaussian);
/// each node gets directed arcs to its k nearest others, ties broken by
/// lower node id.
DelegationGraph gen_spatial(int n, int k, SpatialDist dist, std::uint64_t seed);

/// layers stacked blocks of layer_size nodes; every node of layer j < layers
/// has arcs to every node of layer j+1. Deterministic.
DelegationGraph gen_k_layers(int layers, int layer_size);

DelegationGraph generate(const NetworkSpec& spec);

/// Family parameters matching the experiments' "average in-degree of 10"
/// setup: p = 10/(n-1), m = 5, lattice k = 10 with rewire 0.2, spatial k = 10.
NetworkSpec default_experiment_spec(NetworkFamily family, int n, std::uint64_t seed);

} // namespace liquidpower
