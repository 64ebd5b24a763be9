#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "instance.hpp"
#include "liquidpower/ld.hpp"
#include "liquidpower/oracle.hpp"
#include "liquidpower/pv.hpp"
#include "liquidpower/sampler.hpp"
#include "results.hpp"

namespace liquidpower::cli {

namespace {

std::ofstream open_output(const std::optional<std::string>& path) {
    std::ofstream out;
    if (path) {
        out.open(*path);
        if (!out) throw InstanceError("", "cannot open output file '" + *path + "'");
    }
    return out;
}

std::ostream& select(std::ofstream& file, const std::optional<std::string>& path) {
    return path ? static_cast<std::ostream&>(file) : std::cout;
}

/// Shared delegation probability for the pv/ld engines: the --pd flag wins,
/// then a constant_pd behavior, then global uniformity derived from the
/// common out-degree. Per-voter behaviors must agree across delegators.
Rational shared_pd(const Instance& instance, const std::optional<std::string>& flag,
                   int common_out_degree, const std::vector<int>& delegators) {
    if (flag) return parse_rational(*flag);
    switch (instance.behavior.kind) {
        case BehaviorKind::constant_pd: return instance.behavior.constant;
        case BehaviorKind::global_uniformity:
            return Rational(common_out_degree, common_out_degree + 2);
        case BehaviorKind::per_voter: {
            if (delegators.empty()) return Rational(0, 1);
            const Rational first = instance.behavior.per_voter[delegators.front()];
            for (int v : delegators)
                if (instance.behavior.per_voter[v] != first)
                    throw InstanceError("behavior.per_voter",
                                        "this engine needs one shared delegation probability; "
                                        "per-voter values differ");
            return first;
        }
    }
    throw InstanceError("behavior", "unknown behavior kind");
}

MeasureReport run_engine(const ComputeArgs& args, Instance& instance) {
    const int n = instance.game.size();

    if (args.engine == "brute") {
        const auto model = args.pd ? BehaviorModel::constant_pd(instance.graph,
                                                                parse_rational(*args.pd))
                                   : instance.model();
        auto report =
            exact_measure_bruteforce(instance.graph, instance.game, model, BigInt(args.budget))
                .to_report();
        return report;
    }

    if (args.engine == "pv" || args.engine == "pvr") {
        if (!instance.delegatees)
            throw InstanceError("delegatees",
                                "the " + args.engine +
                                    " engine needs the instance to declare its delegatee set");
        if (!instance.graph.is_complete_bipartite(*instance.delegatees))
            throw InstanceError("edges",
                                "the " + args.engine +
                                    " engine needs the complete delegator-to-delegatee "
                                    "bipartite pattern");
        std::vector<int> delegators;
        std::vector<bool> is_tee(n, false);
        for (int v : *instance.delegatees) is_tee[v] = true;
        for (int v = 0; v < n; ++v)
            if (!is_tee[v]) delegators.push_back(v);

        MeasureReport report;
        if (args.engine == "pvr") {
            if (args.pd)
                throw InstanceError("", "the pvr engine takes no --pd; delegators always "
                                        "delegate");
            const ProxyPowerSolver solver(
                ProxyInstance(instance.game, *instance.delegatees, Rational(0, 1)));
            report.measure = solver.restricted_measures();
            report.engine = "pvr";
        } else {
            const Rational pd = shared_pd(instance, args.pd,
                                          static_cast<int>(instance.delegatees->size()),
                                          delegators);
            const ProxyPowerSolver solver(ProxyInstance(instance.game, *instance.delegatees, pd));
            report.measure = solver.measures();
            report.engine = "pv";
        }
        return report;
    }

    if (args.engine == "ld") {
        if (!args.force_complete && !instance.graph.is_complete())
            throw InstanceError("edges", "the ld engine needs a complete digraph "
                                         "(or pass --complete to ignore the edges)");
        std::vector<int> everyone(n);
        for (int v = 0; v < n; ++v) everyone[v] = v;
        const Rational pd = shared_pd(instance, args.pd, n - 1, everyone);
        if (pd == Rational(1, 1))
            std::cerr << "warning: p_d = 1 makes every delegation chain cyclic; all voters "
                         "abstain and measures collapse\n";
        const CompletePowerSolver solver(instance.game, pd);
        MeasureReport report;
        report.measure = solver.measures();
        report.engine = "ld";
        return report;
    }

    if (args.engine == "sample") {
        const auto model = args.pd ? BehaviorModel::constant_pd(instance.graph,
                                                                parse_rational(*args.pd))
                                   : instance.model();
        const SamplingPlan plan = args.samples
                                      ? SamplingPlan::fixed_k(*args.samples, args.seed)
                                      : SamplingPlan::hoeffding(args.epsilon, args.delta,
                                                                args.seed);
        return estimate_measures(instance.graph, instance.game, model, plan);
    }

    throw InstanceError("", "unknown engine '" + args.engine +
                                "' (expected brute, pv, pvr, ld or sample)");
}

} // namespace

int cmd_compute(const ComputeArgs& args) {
    try {
        Instance instance = load_instance(args.instance_path);
        if (args.format != "csv" && args.format != "json")
            throw InstanceError("", "unknown format '" + args.format + "'");
        const MeasureReport report = run_engine(args, instance);
        const ResultTable table = make_table(instance, report);
        auto file = open_output(args.out_path);
        auto& out = select(file, args.out_path);
        if (args.format == "json")
            write_json(out, table, args.round);
        else
            write_csv(out, table, args.round);
        return exit_ok;
    } catch (const EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
}

int cmd_experiment(const ExperimentCliArgs& args) {
    try {
        auto file = open_output(args.out_path);
        run_experiment(args.experiment, select(file, args.out_path));
        return exit_ok;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
}

int cmd_gen(const GenArgs& args) {
    try {
        NetworkSpec spec;
        spec.family = network_family_from_string(args.family);
        spec.n = args.n;
        spec.p = args.p;
        spec.m = args.m;
        spec.k = args.k;
        spec.rewire_p = args.rewire_p;
        spec.dist = spatial_dist_from_string(args.dist);
        spec.layers = args.layers;
        spec.layer_size = args.layer_size;
        spec.seed = args.seed;
        if (spec.family == NetworkFamily::k_layers) spec.n = spec.layers * spec.layer_size;

        const DelegationGraph graph = generate(spec);

        std::ofstream edges(args.out_prefix + ".edges");
        if (!edges) throw InstanceError("", "cannot write '" + args.out_prefix + ".edges'");
        for (const auto& [u, v] : graph.arcs()) edges << u << ' ' << v << '\n';

        std::vector<std::string> labels;
        for (int v = 0; v < graph.size(); ++v) labels.push_back("v" + std::to_string(v));
        Instance instance{graph,
                          WeightedVotingGame(std::vector<std::int64_t>(graph.size(), 1),
                                             Rational(1, 2)),
                          BehaviorSpec{},
                          std::move(labels),
                          std::nullopt,
                          spec};
        std::ofstream json_out(args.out_prefix + ".json");
        if (!json_out) throw InstanceError("", "cannot write '" + args.out_prefix + ".json'");
        json_out << instance_to_json(instance).dump(2) << '\n';
        return exit_ok;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
}

} // namespace liquidpower::cli
