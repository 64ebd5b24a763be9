#include "liquidpower/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liquidpower {

DelegationPartition::DelegationPartition(const DelegationGraph& graph,
                                         std::vector<VoterAction> actions)
    : actions_(std::move(actions)) {
    if (static_cast<int>(actions_.size()) != graph.size())
        throw std::invalid_argument("DelegationPartition: action count != voter count");
    for (int i = 0; i < graph.size(); ++i) {
        const VoterAction& a = actions_[i];
        if (!a.is_delegation()) continue;
        const auto& nb = graph.out_neighbors(i);
        if (std::find(nb.begin(), nb.end(), a.target) == nb.end())
            throw std::invalid_argument("DelegationPartition: voter " + std::to_string(i) +
                                        " delegates to " + std::to_string(a.target) +
                                        " which is not an out-neighbor");
    }
}

DirectVotePartition::DirectVotePartition(std::vector<signed char> votes)
    : votes_(std::move(votes)) {
    for (signed char v : votes_)
        if (v < -1 || v > 1)
            throw std::invalid_argument("DirectVotePartition: votes must be -1, 0 or +1");
}

namespace detail {

void resolve_into(const VoterAction* actions, int n, signed char* votes, signed char* marks) {
    // marks: 0 unvisited, 1 on the current chain, 2 resolved
    std::fill(marks, marks + n, static_cast<signed char>(0));
    for (int start = 0; start < n; ++start) {
        if (marks[start] == 2) continue;
        int v = start;
        signed char value = 0;
        while (true) {
            if (marks[v] == 2) { value = votes[v]; break; }
            if (marks[v] == 1) { value = 0; break; } // closed a cycle
            marks[v] = 1;
            const VoterAction& a = actions[v];
            if (a.kind == VoterAction::Kind::vote_plus) { value = 1; break; }
            if (a.kind == VoterAction::Kind::vote_minus) { value = -1; break; }
            v = a.target;
        }
        // unwind the chain; every voter marked 1 on it resolves to `value`
        int u = start;
        while (marks[u] == 1) {
            votes[u] = value;
            marks[u] = 2;
            const VoterAction& a = actions[u];
            if (!a.is_delegation()) break;
            u = a.target;
        }
    }
}

} // namespace detail

DirectVotePartition resolve_delegations(const DelegationPartition& partition,
                                        const DelegationGraph& graph) {
    const int n = graph.size();
    if (partition.size() != n)
        throw std::invalid_argument("resolve_delegations: partition size != graph size");
    std::vector<signed char> votes(n, 0);
    std::vector<signed char> marks(n, 0);
    detail::resolve_into(partition.actions().data(), n, votes.data(), marks.data());
    return DirectVotePartition(std::move(votes));
}

} // namespace liquidpower
