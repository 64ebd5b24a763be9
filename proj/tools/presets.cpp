#include "presets.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "liquidpower/behavior.hpp"
#include "liquidpower/graph.hpp"
#include "liquidpower/ld.hpp"
#include "liquidpower/netgen.hpp"
#include "liquidpower/pv.hpp"
#include "liquidpower/sampler.hpp"
#include "results.hpp"

namespace liquidpower::cli {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// The 13-voter example: a..m, weights a=3, b=d=2, rest 1, q = 1/2.
const char* kExampleLabels = "abcdefghijklm";

std::vector<std::int64_t> example_weights() {
    std::vector<std::int64_t> w(13, 1);
    w[0] = 3;
    w[1] = 2;
    w[3] = 2;
    return w;
}

const std::array<Rational, 3> kPdGrid = {Rational(0, 1), Rational(1, 2), Rational(9, 10)};

void preset_table1(const ExperimentArgs& args, std::ostream& out) {
    out << "pd,voter_id,label,weight,side,measure\n";
    const WeightedVotingGame game(example_weights(), Rational(1, 2));
    for (const auto& pd : kPdGrid) {
        const ProxyPowerSolver solver(ProxyInstance(game, {0, 1, 2}, pd));
        const auto measures = solver.measures();
        for (int v = 0; v < 13; ++v)
            out << pd.str() << ',' << v << ',' << kExampleLabels[v] << ',' << game.weight(v)
                << ',' << (v < 3 ? "delegatee" : "delegator") << ','
                << format_value(measures[v], args.round) << '\n';
    }
}

void preset_table2(const ExperimentArgs& args, std::ostream& out) {
    out << "pd,voter_id,label,weight,measure\n";
    const WeightedVotingGame game(example_weights(), Rational(1, 2));
    for (const auto& pd : kPdGrid) {
        const CompletePowerSolver solver(game, pd);
        const auto measures = solver.measures();
        for (int v = 0; v < 13; ++v)
            out << pd.str() << ',' << v << ',' << kExampleLabels[v] << ',' << game.weight(v)
                << ',' << format_value(measures[v], args.round) << '\n';
    }
}

void preset_fig3(const ExperimentArgs& args, std::ostream& out) {
    out << "pd,delegatee_count,group,measure\n";
    const int n = 100;
    const WeightedVotingGame game(std::vector<std::int64_t>(n, 1), Rational(1, 2));
    for (int nv : {20, 50}) {
        std::vector<int> delegatees(nv);
        for (int v = 0; v < nv; ++v) delegatees[v] = v;
        const auto graph = DelegationGraph::complete_bipartite(n, delegatees);
        for (int step = 0; step <= 10; ++step) {
            const Rational pd(step, 10);
            const auto model = BehaviorModel::constant_pd(graph, pd);
            const auto report = estimate_measures(
                graph, game, model,
                SamplingPlan::fixed_k(100'000, mix(args.seed ^ (nv * 1000 + step))));
            double tee = 0, tor = 0;
            for (int v = 0; v < nv; ++v) tee += report.measure[v];
            for (int v = nv; v < n; ++v) tor += report.measure[v];
            out << pd.str() << ',' << nv << ",delegatee,"
                << format_value(tee / nv, args.round) << '\n';
            out << pd.str() << ',' << nv << ",delegator,"
                << format_value(tor / (n - nv), args.round) << '\n';
        }
    }
}

std::vector<std::int64_t> fig4_weights() {
    std::vector<std::int64_t> w;
    w.insert(w.end(), 50, 1);
    w.insert(w.end(), 30, 2);
    w.insert(w.end(), 20, 5);
    return w;
}

void preset_fig4(const ExperimentArgs& args, std::ostream& out) {
    out << "pd,weight,measure\n";
    const int n = 100;
    const auto weights = fig4_weights();
    const WeightedVotingGame game(weights, Rational(1, 2));
    const auto graph = DelegationGraph::complete(n);
    for (int step = 0; step <= 9; ++step) {
        const Rational pd(step, 10);
        const auto model = BehaviorModel::constant_pd(graph, pd);
        const auto report = estimate_measures(
            graph, game, model, SamplingPlan::fixed_k(10'000, mix(args.seed ^ (7000 + step))));
        for (std::int64_t cls : {1, 2, 5}) {
            double sum = 0;
            int count = 0;
            for (int v = 0; v < n; ++v)
                if (weights[v] == cls) {
                    sum += report.measure[v];
                    ++count;
                }
            out << pd.str() << ',' << cls << ',' << format_value(sum / count, args.round)
                << '\n';
        }
    }
}

void preset_fig5(const ExperimentArgs& args, std::ostream& out) {
    out << "delegatee_count,model,group,measure\n";
    const int n = 100;
    const WeightedVotingGame game(std::vector<std::int64_t>(n, 1), Rational(1, 2));
    std::vector<int> grid = {1, 2, 3, 4, 5};
    for (int nv = 10; nv <= 100; nv += 5) grid.push_back(nv);
    for (int nv : grid) {
        std::vector<int> delegatees(nv);
        for (int v = 0; v < nv; ++v) delegatees[v] = v;
        const ProxyPowerSolver solver(ProxyInstance(game, delegatees, Rational(1, 2)));
        out << nv << ",pv,delegatee," << format_value(solver.measure(0), args.round) << '\n';
        out << nv << ",pvr,delegatee," << format_value(solver.restricted_measure(0), args.round)
            << '\n';
        if (nv < n) {
            out << nv << ",pv,delegator," << format_value(solver.measure(nv), args.round)
                << '\n';
            out << nv << ",pvr,delegator,"
                << format_value(solver.restricted_measure(nv), args.round) << '\n';
        }
    }
}

struct FamilyRun {
    std::string name;
    NetworkSpec spec;
};

std::vector<FamilyRun> network_runs(std::uint64_t seed, int index) {
    std::vector<FamilyRun> runs;
    const auto add = [&](const std::string& name, NetworkFamily family, SpatialDist dist) {
        auto spec = default_experiment_spec(family, 100, mix(seed ^ (index * 97 + runs.size())));
        spec.dist = dist;
        runs.push_back({name, spec});
    };
    add("gnp", NetworkFamily::gnp, SpatialDist::uniform);
    add("pref_attach", NetworkFamily::pref_attach, SpatialDist::uniform);
    add("small_world", NetworkFamily::small_world, SpatialDist::uniform);
    add("spatial_uniform", NetworkFamily::spatial, SpatialDist::uniform);
    add("spatial_gaussian", NetworkFamily::spatial, SpatialDist::gaussian);
    add("k_layers", NetworkFamily::k_layers, SpatialDist::uniform);
    return runs;
}

std::vector<double> sampled_measures(const DelegationGraph& graph, std::uint64_t seed) {
    const WeightedVotingGame game(std::vector<std::int64_t>(graph.size(), 1), Rational(1, 2));
    const auto model = BehaviorModel::global_uniformity(graph);
    return estimate_measures(graph, game, model, SamplingPlan::fixed_k(5'000, seed)).measure;
}

void preset_fig6(const ExperimentArgs& args, std::ostream& out) {
    out << "family,rank,measure\n";
    const int repeats = args.full ? 5 : 2;
    for (const auto& base : network_runs(args.seed, 0)) {
        std::vector<double> average(100, 0.0);
        for (int rep = 0; rep < repeats; ++rep) {
            auto spec = base.spec;
            spec.seed = mix(base.spec.seed ^ (rep + 1));
            const auto graph = generate(spec);
            auto measures = sampled_measures(graph, mix(spec.seed ^ 0xF16));
            std::sort(measures.begin(), measures.end(), std::greater<>());
            for (int r = 0; r < 100; ++r) average[r] += measures[r];
        }
        for (int r = 0; r < 100; ++r)
            out << base.name << ',' << r << ',' << format_value(average[r] / repeats, args.round)
                << '\n';
    }
}

void preset_fig7(const ExperimentArgs& args, std::ostream& out) {
    out << "family,seed_index,node,x,measure\n";
    const int repeats = args.full ? 5 : 2;
    for (const auto& base : network_runs(args.seed, 1)) {
        for (int rep = 0; rep < repeats; ++rep) {
            auto spec = base.spec;
            spec.seed = mix(base.spec.seed ^ (rep + 1));
            const auto graph = generate(spec);
            const auto measures = sampled_measures(graph, mix(spec.seed ^ 0xF17));
            for (int v = 0; v < graph.size(); ++v) {
                // layer index is the natural x coordinate for the layered family
                const int x = base.spec.family == NetworkFamily::k_layers
                                  ? v / base.spec.layer_size + 1
                                  : graph.in_degree(v);
                out << base.name << ',' << rep << ',' << v << ',' << x << ','
                    << format_value(measures[v], args.round) << '\n';
            }
        }
    }
}

} // namespace

const std::vector<std::string>& experiment_presets() {
    static const std::vector<std::string> names = {
        "table1", "table2", "fig3", "fig4", "fig5_pvr", "fig6_networks", "fig7_correlation"};
    return names;
}

void run_experiment(const ExperimentArgs& args, std::ostream& out) {
    if (args.preset == "table1") return preset_table1(args, out);
    if (args.preset == "table2") return preset_table2(args, out);
    if (args.preset == "fig3") return preset_fig3(args, out);
    if (args.preset == "fig4") return preset_fig4(args, out);
    if (args.preset == "fig5_pvr") return preset_fig5(args, out);
    if (args.preset == "fig6_networks") return preset_fig6(args, out);
    if (args.preset == "fig7_correlation") return preset_fig7(args, out);
    throw std::invalid_argument("unknown experiment preset '" + args.preset + "'");
}

} // namespace liquidpower::cli
