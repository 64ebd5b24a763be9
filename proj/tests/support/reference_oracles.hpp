#pragma once

// Reference implementations used only by tests: deliberately slow, built on
// the public slow-path API, independent of the engines they check.

#include <vector>

#include "liquidpower/behavior.hpp"
#include "liquidpower/bignum.hpp"
#include "liquidpower/game.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/partition.hpp"

namespace lptest {

using liquidpower::BehaviorModel;
using liquidpower::BigInt;
using liquidpower::BigRational;
using liquidpower::DelegationGraph;
using liquidpower::DelegationPartition;
using liquidpower::VoterAction;
using liquidpower::WeightedVotingGame;

struct ReferenceMeasures {
    std::vector<BigRational> measure, positive, negative;
};

// Exhaustive recursion over every voter's action; criticality evaluated by
// overriding one voter and re-resolving from scratch.
inline ReferenceMeasures reference_measures(const DelegationGraph& graph,
                                            const WeightedVotingGame& game,
                                            const BehaviorModel& model) {
    const int n = graph.size();
    ReferenceMeasures out;
    out.measure.assign(n, 0);
    out.positive.assign(n, 0);
    out.negative.assign(n, 0);

    std::vector<VoterAction> actions(n, VoterAction::plus());
    auto outcome_with = [&](std::vector<VoterAction> acts, int voter, VoterAction forced) {
        acts[voter] = forced;
        const DelegationPartition partition(graph, std::move(acts));
        return wvg_outcome(resolve_delegations(partition, graph), game);
    };

    auto recurse = [&](auto&& self, int voter) -> void {
        if (voter == n) {
            const DelegationPartition partition(graph, actions);
            const BigRational prob = partition_probability_exact(partition, graph, model);
            const auto resolved = resolve_delegations(partition, graph);
            for (int i = 0; i < n; ++i) {
                const int up = outcome_with(actions, i, VoterAction::plus());
                const int down = outcome_with(actions, i, VoterAction::minus());
                if (up == down) continue;
                out.measure[i] += prob;
                if (resolved.vote(i) > 0)
                    out.positive[i] += prob;
                else if (resolved.vote(i) < 0)
                    out.negative[i] += prob;
                else {
                    out.positive[i] += prob / 2;
                    out.negative[i] += prob / 2;
                }
            }
            return;
        }
        actions[voter] = VoterAction::plus();
        self(self, voter + 1);
        actions[voter] = VoterAction::minus();
        self(self, voter + 1);
        for (int target : graph.out_neighbors(voter)) {
            actions[voter] = VoterAction::delegate_to(target);
            self(self, voter + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

// Classical Banzhaf measure via the standard subset-sum count DP; exact.
inline std::vector<BigRational> classic_banzhaf(const WeightedVotingGame& game) {
    const int n = game.size();
    const std::int64_t total = game.total_weight();
    std::vector<BigRational> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> by_weight(static_cast<std::size_t>(total) + 1);
        by_weight[0] = 1;
        std::int64_t processed = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const std::int64_t w = game.weight(j);
            for (std::int64_t s = processed; s >= 0; --s) {
                if (by_weight[s].is_zero()) continue;
                by_weight[s + w] += by_weight[s];
            }
            processed += w;
        }
        // critical iff q*total - w(i) < s <= q*total
        BigInt pivotal = 0;
        const auto& q = game.quota();
        for (std::int64_t s = 0; s <= processed; ++s) {
            if (by_weight[s].is_zero()) continue;
            const __int128 scaled = static_cast<__int128>(q.num()) * total;
            if (static_cast<__int128>(s) * q.den() > scaled) continue;
            if (static_cast<__int128>(s + game.weight(i)) * q.den() <= scaled) continue;
            pivotal += by_weight[s];
        }
        BigInt denom = 1;
        denom <<= (n - 1);
        out.emplace_back(pivotal, denom);
    }
    return out;
}

} // namespace lptest
