#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace liquidpower {

/// Simple digraph over dense 0-based voter ids. Out-neighborhoods are the
/// admissible delegation targets. Immutable after construction.
///
/// Construction rejects self-loops, out-of-range ids and duplicate arcs.
class DelegationGraph {
public:
    DelegationGraph(int n, std::vector<std::vector<int>> out_neighbors);

    static DelegationGraph empty(int n);
    static DelegationGraph complete(int n);
    static DelegationGraph from_edges(int n, std::span<const std::pair<int, int>> arcs);
    /// Complete bipartite delegation pattern: every delegator -> every delegatee.
    static DelegationGraph complete_bipartite(int n, std::span<const int> delegatees);

    int size() const { return n_; }
    const std::vector<int>& out_neighbors(int i) const { return out_[i]; }
    int out_degree(int i) const { return static_cast<int>(out_[i].size()); }
    int in_degree(int i) const { return in_degree_[i]; }
    std::int64_t arc_count() const;

    bool is_complete() const;
    /// True iff arcs are exactly {(d, v) : d not in delegatees, v in delegatees}.
    bool is_complete_bipartite(std::span<const int> delegatees) const;

    std::vector<std::pair<int, int>> arcs() const;

private:
    int n_{0};
    std::vector<std::vector<int>> out_;
    std::vector<int> in_degree_;
};

} // namespace liquidpower
