#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace liquidpower::cli;

    CLI::App app{"liquidpower: a priori voting power in weighted voting games with delegations"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "compute per-voter power measures for an instance");
    c->add_option("instance", compute.instance_path, "instance JSON file")->required();
    c->add_option("--engine", compute.engine,
                  "brute | pv | pvr | ld | sample")
        ->required();
    std::string pd_text, out_text;
    c->add_option("--pd", pd_text, "shared delegation probability (rational like 1/2 or 0.5)");
    c->add_option("--epsilon", compute.epsilon, "sampler additive error (default 0.02)");
    c->add_option("--delta", compute.delta, "sampler failure probability (default 0.05)");
    std::uint64_t k_value = 0;
    auto* k_opt = c->add_option("--k", k_value, "fixed sample count (overrides epsilon/delta)");
    c->add_option("--seed", compute.seed, "sampler seed (default 0)");
    c->add_option("--budget", compute.budget,
                  "brute-force enumeration budget (default 100000000)");
    c->add_flag("--complete", compute.force_complete,
                "treat the instance as a complete digraph (ld engine)");
    c->add_option("--format", compute.format, "csv | json (default csv)");
    int round_digits = -1;
    auto* round_opt = c->add_option("--round", round_digits, "round displayed values");
    auto* out_opt = c->add_option("--out", out_text, "write to a file instead of stdout");

    ExperimentCliArgs experiment;
    auto* e = app.add_subcommand("experiment", "run a built-in experiment preset");
    e->add_option("preset", experiment.experiment.preset,
                  "table1 | table2 | fig3 | fig4 | fig5_pvr | fig6_networks | fig7_correlation")
        ->required();
    e->add_flag("--full", experiment.experiment.full, "full network sweeps (5 seeds, not 2)");
    e->add_option("--seed", experiment.experiment.seed, "base seed (default 1)");
    int exp_round = -1;
    auto* exp_round_opt = e->add_option("--round", exp_round, "round displayed values");
    std::string exp_out;
    auto* exp_out_opt = e->add_option("--out", exp_out, "write to a file instead of stdout");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate a delegation network and instance skeleton");
    g->add_option("--family", gen.family,
                  "gnp | pref_attach | small_world | spatial | k_layers")
        ->required();
    g->add_option("--n", gen.n, "voter count (default 100)");
    g->add_option("--p", gen.p, "gnp edge probability");
    g->add_option("--m", gen.m, "pref_attach edges per node");
    g->add_option("--k", gen.k, "small_world/spatial neighbor count");
    g->add_option("--rewire", gen.rewire_p, "small_world rewire probability (default 0.2)");
    g->add_option("--dist", gen.dist, "spatial distribution: uniform | gaussian");
    g->add_option("--layers", gen.layers, "k_layers layer count");
    g->add_option("--size", gen.layer_size, "k_layers layer size");
    g->add_option("--seed", gen.seed, "generator seed (default 0)");
    g->add_option("--out", gen.out_prefix, "output prefix: writes <prefix>.edges and <prefix>.json")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (c->parsed()) {
        if (!pd_text.empty()) compute.pd = pd_text;
        if (k_opt->count() > 0) compute.samples = k_value;
        if (round_opt->count() > 0) compute.round = round_digits;
        if (out_opt->count() > 0) compute.out_path = out_text;
        return cmd_compute(compute);
    }
    if (e->parsed()) {
        if (exp_round_opt->count() > 0) experiment.experiment.round = exp_round;
        if (exp_out_opt->count() > 0) experiment.out_path = exp_out;
        return cmd_experiment(experiment);
    }
    return cmd_gen(gen);
}
