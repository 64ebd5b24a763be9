#include "liquidpower/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace liquidpower {

DelegationGraph::DelegationGraph(int n, std::vector<std::vector<int>> out_neighbors)
    : n_(n), out_(std::move(out_neighbors)) {
    if (n_ < 0) throw std::invalid_argument("DelegationGraph: negative size");
    if (static_cast<int>(out_.size()) != n_)
        throw std::invalid_argument("DelegationGraph: out-neighborhood list size != n");
    in_degree_.assign(n_, 0);
    std::unordered_set<int> seen;
    for (int i = 0; i < n_; ++i) {
        seen.clear();
        for (int j : out_[i]) {
            if (j < 0 || j >= n_)
                throw std::invalid_argument("DelegationGraph: arc " + std::to_string(i) + "->" +
                                            std::to_string(j) + " target out of range");
            if (j == i)
                throw std::invalid_argument("DelegationGraph: self-loop at voter " +
                                            std::to_string(i));
            if (!seen.insert(j).second)
                throw std::invalid_argument("DelegationGraph: duplicate arc " + std::to_string(i) +
                                            "->" + std::to_string(j));
            ++in_degree_[j];
        }
    }
}

DelegationGraph DelegationGraph::empty(int n) {
    return DelegationGraph(n, std::vector<std::vector<int>>(n));
}

DelegationGraph DelegationGraph::complete(int n) {
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < n; ++i) {
        out[i].reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) out[i].push_back(j);
    }
    return DelegationGraph(n, std::move(out));
}

DelegationGraph DelegationGraph::from_edges(int n, std::span<const std::pair<int, int>> arcs) {
    std::vector<std::vector<int>> out(std::max(n, 0));
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n)
            throw std::invalid_argument("DelegationGraph: arc source " + std::to_string(u) +
                                        " out of range");
        out[u].push_back(v);
    }
    return DelegationGraph(n, std::move(out));
}

DelegationGraph DelegationGraph::complete_bipartite(int n, std::span<const int> delegatees) {
    std::vector<bool> is_delegatee(n, false);
    for (int v : delegatees) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("DelegationGraph: delegatee id out of range");
        is_delegatee[v] = true;
    }
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < n; ++i) {
        if (is_delegatee[i]) continue;
        for (int v : delegatees) out[i].push_back(v);
    }
    return DelegationGraph(n, std::move(out));
}

std::int64_t DelegationGraph::arc_count() const {
    std::int64_t total = 0;
    for (const auto& nb : out_) total += static_cast<std::int64_t>(nb.size());
    return total;
}

bool DelegationGraph::is_complete() const {
    for (int i = 0; i < n_; ++i)
        if (out_degree(i) != n_ - 1) return false;
    return true;
}

bool DelegationGraph::is_complete_bipartite(std::span<const int> delegatees) const {
    std::vector<bool> is_delegatee(n_, false);
    for (int v : delegatees) {
        if (v < 0 || v >= n_) return false;
        is_delegatee[v] = true;
    }
    const auto nv = static_cast<std::size_t>(delegatees.size());
    for (int i = 0; i < n_; ++i) {
        if (is_delegatee[i]) {
            if (!out_[i].empty()) return false;
            continue;
        }
        if (out_[i].size() != nv) return false;
        for (int j : out_[i])
            if (!is_delegatee[j]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> DelegationGraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(arc_count()));
    for (int i = 0; i < n_; ++i)
        for (int j : out_[i]) result.emplace_back(i, j);
    return result;
}

} // namespace liquidpower
