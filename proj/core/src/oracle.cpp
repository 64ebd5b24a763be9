#include "liquidpower/oracle.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "liquidpower/detail/criticality_eval.hpp"
#include "liquidpower/threading.hpp"

namespace liquidpower {

namespace detail {

void CriticalityEvaluator::evaluate(const VoterAction* actions) {
    const int n = game_->size();
    resolve_into(actions, n, votes_.data(), marks_.data());

    // cycle detection on the delegation functional graph
    std::fill(marks_.begin(), marks_.end(), static_cast<signed char>(0));
    std::fill(on_cycle_.begin(), on_cycle_.end(), static_cast<signed char>(0));
    cycle_totals_.clear();
    for (int s = 0; s < n; ++s) {
        if (marks_[s] != 0 || !actions[s].is_delegation()) continue;
        int path_len = 0;
        int v = s;
        while (actions[v].is_delegation() && marks_[v] == 0) {
            marks_[v] = 1;
            path_[path_len++] = v;
            v = actions[v].target;
        }
        if (actions[v].is_delegation() && marks_[v] == 1) {
            // v closes a fresh cycle along the current path
            const int cid = static_cast<int>(cycle_totals_.size());
            cycle_totals_.push_back(0);
            for (int idx = path_len - 1;; --idx) {
                const int u = path_[idx];
                on_cycle_[u] = 1;
                cycle_id_[u] = cid;
                if (u == v) break;
            }
        }
        for (int t = 0; t < path_len; ++t) marks_[path_[t]] = 2;
    }

    // carried weight: each voter plus every voter whose delegator-only chain
    // reaches them; cycle members all carry the whole cycle's hanging trees
    for (int v = 0; v < n; ++v) {
        carried_[v] = game_->weight(v);
        pending_[v] = 0;
    }
    for (int v = 0; v < n; ++v)
        if (actions[v].is_delegation() && !on_cycle_[v]) ++pending_[actions[v].target];
    int head = 0, tail = 0;
    for (int v = 0; v < n; ++v)
        if (pending_[v] == 0) queue_[tail++] = v;
    while (head < tail) {
        const int v = queue_[head++];
        if (!actions[v].is_delegation() || on_cycle_[v]) continue;
        const int u = actions[v].target;
        carried_[u] += carried_[v];
        if (--pending_[u] == 0) queue_[tail++] = u;
    }
    for (int v = 0; v < n; ++v)
        if (on_cycle_[v]) cycle_totals_[cycle_id_[v]] += carried_[v];

    std::int64_t tally_plus = 0, tally_minus = 0;
    for (int v = 0; v < n; ++v) {
        if (votes_[v] > 0)
            tally_plus += game_->weight(v);
        else if (votes_[v] < 0)
            tally_minus += game_->weight(v);
    }

    for (int i = 0; i < n; ++i) {
        const std::int64_t carried = on_cycle_[i] ? cycle_totals_[cycle_id_[i]] : carried_[i];
        std::int64_t plus = tally_plus, minus = tally_minus;
        if (votes_[i] > 0)
            plus -= carried;
        else if (votes_[i] < 0)
            minus -= carried;
        const std::int64_t active = plus + minus + carried;
        const int up = game_->outcome(plus + carried, active);
        const int down = game_->outcome(plus, active);
        critical_[i] = static_cast<signed char>((up - down) / 2);
    }
}

int CriticalityEvaluator::slow_criticality(const VoterAction* actions, int voter) const {
    const int n = game_->size();
    std::vector<VoterAction> scratch(actions, actions + n);
    std::vector<signed char> votes(n), marks(n);
    scratch[voter] = VoterAction::plus();
    resolve_into(scratch.data(), n, votes.data(), marks.data());
    std::int64_t plus = 0, active = 0;
    for (int v = 0; v < n; ++v) {
        if (votes[v] == 0) continue;
        active += game_->weight(v);
        if (votes[v] > 0) plus += game_->weight(v);
    }
    const int up = game_->outcome(plus, active);
    scratch[voter] = VoterAction::minus();
    resolve_into(scratch.data(), n, votes.data(), marks.data());
    plus = active = 0;
    for (int v = 0; v < n; ++v) {
        if (votes[v] == 0) continue;
        active += game_->weight(v);
        if (votes[v] > 0) plus += game_->weight(v);
    }
    const int down = game_->outcome(plus, active);
    return (up - down) / 2;
}

} // namespace liquidpower::detail

EnumerationBudgetExceeded::EnumerationBudgetExceeded(BigInt partitions, BigInt budget)
    : std::runtime_error("enumeration refused: instance has " + partitions.str() +
                         " delegation partitions, budget is " + budget.str()),
      partitions_(std::move(partitions)),
      budget_(std::move(budget)) {}

BigInt delegation_partition_count(const DelegationGraph& graph) {
    BigInt count = 1;
    for (int i = 0; i < graph.size(); ++i) count *= graph.out_degree(i) + 2;
    return count;
}

MeasureReport ExactMeasures::to_report() const {
    MeasureReport report;
    report.engine = "brute";
    report.measure.reserve(measure.size());
    for (const auto& m : measure) report.measure.push_back(to_double(m));
    for (const auto& p : positive) report.positive.push_back(to_double(p));
    for (const auto& m : negative) report.negative.push_back(to_double(m));
    return report;
}

namespace {

struct VoterFactors {
    std::int64_t vote;       // scaled probability of either direct vote
    std::int64_t delegate;   // scaled probability of one specific delegation
    std::int64_t denominator;
};

VoterFactors scaled_factors(const Rational& pd, int degree) {
    const std::int64_t num = pd.num(), den = pd.den();
    if (degree == 0) return {den - num, 0, 2 * den};
    const __int128 d = static_cast<__int128>(2) * den * degree;
    const __int128 vote = static_cast<__int128>(den - num) * degree;
    if (d > INT64_MAX || vote > INT64_MAX)
        throw std::invalid_argument("exact_measure_bruteforce: delegation probability "
                                    "denominator too large for exact enumeration");
    return {static_cast<std::int64_t>(vote), 2 * num, static_cast<std::int64_t>(d)};
}

} // namespace

ExactMeasures exact_measure_bruteforce(const DelegationGraph& graph,
                                       const WeightedVotingGame& game,
                                       const BehaviorModel& model, BigInt budget) {
    const int n = graph.size();
    if (game.size() != n || model.size() != n)
        throw std::invalid_argument("exact_measure_bruteforce: size mismatch");

    const BigInt total = delegation_partition_count(graph);
    if (total > budget) throw EnumerationBudgetExceeded(total, budget);
    const auto total_u = total.convert_to<std::uint64_t>();

    std::vector<int> radix(n);
    std::vector<VoterFactors> factors(n);
    BigInt denominator = 1;
    for (int i = 0; i < n; ++i) {
        radix[i] = graph.out_degree(i) + 2;
        factors[i] = scaled_factors(model.delegation_prob(i), graph.out_degree(i));
        denominator *= factors[i].denominator;
    }

    ExactMeasures result;
    if (n == 0) return result;

    auto decode = [&](int voter, int digit) -> VoterAction {
        if (digit == 0) return VoterAction::plus();
        if (digit == 1) return VoterAction::minus();
        return VoterAction::delegate_to(graph.out_neighbors(voter)[digit - 2]);
    };
    auto factor_of = [&](int voter, int digit) -> std::int64_t {
        return digit < 2 ? factors[voter].vote : factors[voter].delegate;
    };

    const std::uint64_t min_block = 4096;
    const std::uint64_t n_blocks =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(4 * max_threads(),
                                                           (total_u + min_block - 1) / min_block));
    const std::uint64_t block_len = (total_u + n_blocks - 1) / n_blocks;

    struct Accumulator {
        std::vector<BigInt> plus, minus, abstain;
    };
    std::vector<Accumulator> partial(n_blocks);

    parallel_for(n_blocks, [&](std::size_t block) {
        const std::uint64_t lo = block * block_len;
        const std::uint64_t hi = std::min(total_u, lo + block_len);
        if (lo >= hi) return;

        Accumulator& acc = partial[block];
        acc.plus.assign(n, BigInt(0));
        acc.minus.assign(n, BigInt(0));
        acc.abstain.assign(n, BigInt(0));

        std::vector<int> digit(n);
        std::uint64_t rem = lo;
        for (int i = n - 1; i >= 0; --i) {
            digit[i] = static_cast<int>(rem % radix[i]);
            rem /= radix[i];
        }
        std::vector<VoterAction> actions(n);
        std::vector<BigInt> prefix(n + 1);
        prefix[0] = 1;
        for (int i = 0; i < n; ++i) {
            actions[i] = decode(i, digit[i]);
            prefix[i + 1] = prefix[i] * factor_of(i, digit[i]);
        }

        detail::CriticalityEvaluator eval(game);
        for (std::uint64_t t = lo; t < hi; ++t) {
            eval.evaluate(actions.data());
#ifndef NDEBUG
            if (t % 101 == 0)
                for (int i = 0; i < n; ++i)
                    assert(eval.critical()[i] == eval.slow_criticality(actions.data(), i));
#endif
            const BigInt& weight = prefix[n];
            for (int i = 0; i < n; ++i) {
                if (!eval.critical()[i]) continue;
                const int stance = eval.votes()[i];
                if (stance > 0)
                    acc.plus[i] += weight;
                else if (stance < 0)
                    acc.minus[i] += weight;
                else
                    acc.abstain[i] += weight;
            }
            if (t + 1 == hi) break;
            int p = n - 1;
            while (digit[p] + 1 == radix[p]) {
                digit[p] = 0;
                actions[p] = decode(p, 0);
                --p;
            }
            ++digit[p];
            actions[p] = decode(p, digit[p]);
            for (int i = p; i < n; ++i) prefix[i + 1] = prefix[i] * factor_of(i, digit[i]);
        }
    });

    std::vector<BigInt> plus(n), minus(n), abstain(n);
    for (const auto& acc : partial) {
        if (acc.plus.empty()) continue;
        for (int i = 0; i < n; ++i) {
            plus[i] += acc.plus[i];
            minus[i] += acc.minus[i];
            abstain[i] += acc.abstain[i];
        }
    }

    result.measure.reserve(n);
    result.positive.reserve(n);
    result.negative.reserve(n);
    const BigInt half_den = denominator * 2;
    for (int i = 0; i < n; ++i) {
        result.measure.emplace_back(plus[i] + minus[i] + abstain[i], denominator);
        result.positive.emplace_back(2 * plus[i] + abstain[i], half_den);
        result.negative.emplace_back(2 * minus[i] + abstain[i], half_den);
    }
    return result;
}

std::pair<BigRational, BigRational> criticality_split_bruteforce(const DelegationGraph& graph,
                                                                 const WeightedVotingGame& game,
                                                                 const BehaviorModel& model,
                                                                 int voter, BigInt budget) {
    if (voter < 0 || voter >= graph.size())
        throw std::out_of_range("criticality_split_bruteforce: voter id out of range");
    const ExactMeasures all = exact_measure_bruteforce(graph, game, model, std::move(budget));
    return {all.positive[voter], all.negative[voter]};
}

} // namespace liquidpower
