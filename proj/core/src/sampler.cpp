#include "liquidpower/sampler.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "liquidpower/detail/criticality_eval.hpp"
#include "liquidpower/threading.hpp"

namespace liquidpower {

namespace {

constexpr std::uint64_t block_size = 4096;
constexpr const char* generator_name = "mt19937_64+splitmix64/block4096";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint32_t pick_index(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

void sample_actions(const DelegationGraph& graph, const std::vector<double>& pd,
                    std::mt19937_64& rng, VoterAction* actions) {
    for (int i = 0; i < graph.size(); ++i) {
        const int degree = graph.out_degree(i);
        if (degree > 0 && uniform01(rng) < pd[i]) {
            actions[i] = VoterAction::delegate_to(
                graph.out_neighbors(i)[pick_index(rng, static_cast<std::uint32_t>(degree))]);
        } else {
            actions[i] = uniform01(rng) < 0.5 ? VoterAction::plus() : VoterAction::minus();
        }
    }
}

} // namespace

std::uint64_t required_samples(int n, double epsilon, double delta) {
    if (n < 1) throw std::invalid_argument("required_samples: need at least one voter");
    if (!(epsilon > 0) || !(epsilon < 1) || !(delta > 0) || !(delta < 1))
        throw std::invalid_argument("required_samples: epsilon and delta must lie in (0, 1)");
    const double k = std::ceil(std::log(2.0 * n / delta) / (2.0 * epsilon * epsilon));
    return k < 1 ? 1 : static_cast<std::uint64_t>(k);
}

DelegationPartition sample_partition(const DelegationGraph& graph, const BehaviorModel& model,
                                     std::mt19937_64& rng) {
    if (model.size() != graph.size())
        throw std::invalid_argument("sample_partition: model size != graph size");
    std::vector<double> pd(graph.size());
    for (int i = 0; i < graph.size(); ++i) pd[i] = model.pd(i);
    std::vector<VoterAction> actions(graph.size());
    sample_actions(graph, pd, rng, actions.data());
    return DelegationPartition(graph, std::move(actions));
}

MeasureReport estimate_measures(const DelegationGraph& graph, const WeightedVotingGame& game,
                                const BehaviorModel& model, const SamplingPlan& plan) {
    const int n = graph.size();
    if (game.size() != n || model.size() != n)
        throw std::invalid_argument("estimate_measures: size mismatch");
    if (n == 0) throw std::invalid_argument("estimate_measures: empty instance");

    SamplingInfo info;
    info.seed = plan.seed;
    info.generator = generator_name;
    if (plan.samples == 0) {
        info.samples = required_samples(n, plan.epsilon, plan.delta);
        info.epsilon = plan.epsilon;
        info.delta = plan.delta;
        info.samples_derived = true;
    } else {
        info.samples = plan.samples;
        info.delta = 0.05;
        info.epsilon =
            std::sqrt(std::log(2.0 * n / info.delta) / (2.0 * static_cast<double>(plan.samples)));
        info.samples_derived = false;
    }
    const std::uint64_t k = info.samples;

    std::vector<double> pd(n);
    for (int i = 0; i < n; ++i) pd[i] = model.pd(i);

    const std::uint64_t n_blocks = (k + block_size - 1) / block_size;
    std::vector<std::uint64_t> critical(n, 0), plus(n, 0), minus(n, 0), abstain(n, 0);
    std::mutex merge_mutex;

    parallel_for(n_blocks, [&](std::size_t block) {
        const std::uint64_t lo = block * block_size;
        const std::uint64_t hi = std::min(k, lo + block_size);
        std::mt19937_64 rng(splitmix64(plan.seed ^ (0x51CEB00C5ull + block)));
        std::vector<VoterAction> actions(n);
        detail::CriticalityEvaluator eval(game);
        std::vector<std::uint64_t> b_crit(n, 0), b_plus(n, 0), b_minus(n, 0), b_abst(n, 0);
        for (std::uint64_t t = lo; t < hi; ++t) {
            sample_actions(graph, pd, rng, actions.data());
            eval.evaluate(actions.data());
#ifndef NDEBUG
            if (t % 128 == 0)
                for (int i = 0; i < n; ++i)
                    assert(eval.critical()[i] == eval.slow_criticality(actions.data(), i));
#endif
            for (int i = 0; i < n; ++i) {
                if (!eval.critical()[i]) continue;
                ++b_crit[i];
                const int stance = eval.votes()[i];
                if (stance > 0)
                    ++b_plus[i];
                else if (stance < 0)
                    ++b_minus[i];
                else
                    ++b_abst[i];
            }
        }
        // integer merges commute, so the total is thread-schedule independent
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (int i = 0; i < n; ++i) {
            critical[i] += b_crit[i];
            plus[i] += b_plus[i];
            minus[i] += b_minus[i];
            abstain[i] += b_abst[i];
        }
    });

    MeasureReport report;
    report.engine = "sample";
    report.sampling = info;
    report.measure.resize(n);
    report.positive.resize(n);
    report.negative.resize(n);
    const double kd = static_cast<double>(k);
    for (int i = 0; i < n; ++i) {
        report.measure[i] = static_cast<double>(critical[i]) / kd;
        report.positive[i] = (static_cast<double>(plus[i]) + 0.5 * static_cast<double>(abstain[i])) / kd;
        report.negative[i] = (static_cast<double>(minus[i]) + 0.5 * static_cast<double>(abstain[i])) / kd;
    }
    return report;
}

} // namespace liquidpower
