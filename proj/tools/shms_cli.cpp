#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shms/benchmarks.hpp"
#include "shms/harness.hpp"
#include "shms/sthe.hpp"

using namespace shms;

int main(int argc, char** argv) {
    CLI::App app{"Snail homing and mating search: benchmark and heat exchanger campaigns"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a multi-trial campaign");
    std::string config_path, problem, out, label;
    std::size_t dim = 0;
    int trials = 0, threads = 0, scatter_every = 0;
    std::uint64_t max_evals = 0, seed = 0;
    bool scatter = false, no_trace = false;
    run->add_option("--config", config_path, "JSON campaign config; flags override it")
        ->check(CLI::ExistingFile);
    auto* o_problem = run->add_option("--problem", problem, "F1..F23, sthe1, sthe2 or sthe3");
    auto* o_dim = run->add_option("--dim", dim, "dimension for F1..F13");
    auto* o_trials = run->add_option("--trials", trials, "independent runs")->check(CLI::PositiveNumber);
    auto* o_evals = run->add_option("--max-evals", max_evals, "evaluation budget per run (0 = default)");
    auto* o_seed = run->add_option("--seed", seed, "base seed; run i uses seed + i");
    auto* o_out = run->add_option("--out", out, "output directory");
    auto* o_label = run->add_option("--label", label, "algorithm label used in reports");
    auto* o_threads = run->add_option("--threads", threads, "worker threads (0 = all cores)");
    run->add_flag("--scatter", scatter, "export snail position snapshots");
    auto* o_every = run->add_option("--scatter-every", scatter_every, "iterations between snapshots");
    run->add_flag("--no-trace", no_trace, "skip per-iteration trace files");

    auto* report = app.add_subcommand("report", "build rank, pairwise and closeness tables");
    std::string in_dir;
    report->add_option("--in", in_dir, "results directory holding campaigns")->required();

    auto* catalog = app.add_subcommand("catalog", "list the benchmark functions as JSON");

    auto* cases = app.add_subcommand("case", "print a heat exchanger case as JSON");
    int case_id = 1;
    cases->add_option("--id", case_id, "case number")->check(CLI::Range(1, 3));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            harness::CampaignConfig cfg;
            if (!config_path.empty()) harness::apply_json(cfg, harness::read_file(config_path));
            if (*o_problem) cfg.problem = problem;
            if (*o_dim) cfg.dim = dim;
            if (*o_trials) cfg.trials = trials;
            if (*o_evals) cfg.shms.max_evals = max_evals;
            if (*o_seed) cfg.shms.seed = seed;
            if (*o_out) cfg.out_dir = out;
            if (*o_label) cfg.label = label;
            if (*o_threads) cfg.threads = threads;
            if (*o_every) cfg.scatter_every = scatter_every;
            if (scatter) cfg.exports.scatter = true;
            if (no_trace) cfg.exports.trace = false;

            const auto s = harness::run_campaign(cfg);
            std::printf("%s dim %zu: %d trials (%d failed)\n", s.problem.c_str(), s.dim, s.trials,
                        s.failed);
            std::printf("best %.10g  mean %.10g  median %.10g  worst %.10g  std %.4g\n", s.best,
                        s.mean, s.median, s.worst, s.std_dev);
            std::printf("avg evals %.1f  avg time %.3f s\n", s.avg_evals, s.avg_wall_time);
            std::printf("written to %s\n", cfg.out_dir.string().c_str());
        } else if (*report) {
            const auto r = harness::generate_reports(in_dir);
            std::printf("%d campaigns, %zu files written\n", r.campaigns, r.written.size());
            for (const auto& m : r.missing) std::printf("missing: %s\n", m.c_str());
        } else if (*catalog) {
            std::cout << catalog_json() << "\n";
        } else if (*cases) {
            std::cout << sthe::case_json(sthe::make_case(case_id)) << "\n";
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
