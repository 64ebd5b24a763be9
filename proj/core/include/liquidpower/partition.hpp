#pragma once

#include <vector>

#include "liquidpower/graph.hpp"

namespace liquidpower {

/// One voter's choice: vote for, vote against, or delegate to a neighbor.
struct VoterAction {
    enum class Kind : unsigned char { vote_plus, vote_minus, delegate };

    Kind kind{Kind::vote_plus};
    int target{-1}; // meaningful only when kind == delegate

    static VoterAction plus() { return {Kind::vote_plus, -1}; }
    static VoterAction minus() { return {Kind::vote_minus, -1}; }
    static VoterAction delegate_to(int j) { return {Kind::delegate, j}; }

    bool is_delegation() const { return kind == Kind::delegate; }
    friend bool operator==(const VoterAction&, const VoterAction&) = default;
};

/// A G-delegation partition: an action per voter, with delegation targets
/// restricted to the voter's out-neighborhood (checked at construction).
class DelegationPartition {
public:
    DelegationPartition(const DelegationGraph& graph, std::vector<VoterAction> actions);

    int size() const { return static_cast<int>(actions_.size()); }
    const VoterAction& action(int i) const { return actions_[i]; }
    const std::vector<VoterAction>& actions() const { return actions_; }

private:
    std::vector<VoterAction> actions_;
};

/// Resolved profile: per-voter vote in {-1, 0, +1}; 0 marks voters whose
/// delegation chain never reaches a direct voter (cycles).
class DirectVotePartition {
public:
    explicit DirectVotePartition(std::vector<signed char> votes);

    int size() const { return static_cast<int>(votes_.size()); }
    int vote(int i) const { return votes_[i]; }
    const std::vector<signed char>& votes() const { return votes_; }

    friend bool operator==(const DirectVotePartition&, const DirectVotePartition&) = default;

private:
    std::vector<signed char> votes_;
};

/// Follows delegation chains: direct voters keep their votes, chains inherit
/// the reached voter's vote, chains trapped in cycles abstain. Single pass
/// with a three-state mark per voter, O(n) total.
DirectVotePartition resolve_delegations(const DelegationPartition& partition,
                                        const DelegationGraph& graph);

namespace detail {
/// Resolution core shared by the oracle and the sampler: operates on raw
/// action arrays, reuses caller-provided buffers.
void resolve_into(const VoterAction* actions, int n,
                  signed char* votes, signed char* marks);
} // namespace detail

} // namespace liquidpower
