// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tabuq/bench.hpp"
#include "tabuq/orlib.hpp"
#include "tabuq/qaoa.hpp"
#include "tabuq/samplers.hpp"
#include "tabuq/tabu.hpp"
#include "tabuq/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tabuq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartialFailure = 1;
constexpr int kExitConfigError = 2;

Qubo load_instance(const std::string& path, int index) {
    const auto instances = parse_orlib_file(path);
    if (index < 0 || index >= static_cast<int>(instances.size()))
        throw std::runtime_error("instance index " + std::to_string(index) +
                                 " out of range for " + path + " (" +
                                 std::to_string(instances.size()) + " instances)");
    return instances[static_cast<std::size_t>(index)];
}

std::string default_label(const std::string& path, int index) {
    return fs::path(path).stem().string() + ":" + std::to_string(index);
}

double display_value(const Qubo& q, double internal) {
    return q.sense() == Sense::maximize_negated ? -internal : internal;
}

struct SolveOptions {
    std::string path;
    int index = 0;
    std::string label;
    std::string algo = "basic";
    int tenure = 5;
    int rand_tenure = 0;
    int max_iters = 1000;
    int k = 10;
    std::uint64_t seed = 0;
    std::optional<double> target;
    bool no_best_known = false;
    std::string mode = "greedy";
    int p = 1;
    bool penalized = false;
    double penalty_scale = 1.0;
    int m = 10;
    int shots = 1000;
    int opt_evals = 2000;
    bool use_history = false;
    double sa_temperature = 17.5;
    int sa_steps = 100;
    int sa_restarts = 1;
    std::optional<int> cutoff;
    std::string trace_out;
    std::string json_out;
};

void add_sampler_flags(CLI::App* cmd, SolveOptions& opt) {
    cmd->add_option("--k", opt.k, "subproblem size for sampler-driven search");
    cmd->add_option("--mode", opt.mode, "variable selection: greedy|weighted")
        ->check(CLI::IsMember({"greedy", "weighted"}));
    cmd->add_option("--p", opt.p, "QAOA depth");
    cmd->add_flag("--penalized", opt.penalized, "add the locality penalty layer");
    cmd->add_option("--A", opt.penalty_scale, "penalty scale A");
    cmd->add_option("--m", opt.m, "samples per iteration used to pick a candidate");
    cmd->add_option("--shots", opt.shots, "measurements per objective evaluation");
    cmd->add_option("--evals", opt.opt_evals, "angle optimizer evaluation budget");
    cmd->add_flag("--use-history", opt.use_history,
                  "candidate may come from any sample seen during optimization");
    cmd->add_option("--sa-temp", opt.sa_temperature, "SA temperature");
    cmd->add_option("--sa-steps", opt.sa_steps, "SA steps per restart");
    cmd->add_option("--sa-restarts", opt.sa_restarts, "SA restarts");
}

int run_solve(const SolveOptions& opt) {
    const Qubo q = load_instance(opt.path, opt.index);
    const std::string label = opt.label.empty() ? default_label(opt.path, opt.index) : opt.label;

    TabuParams params;
    params.tenure = opt.tenure;
    params.rand_tenure = opt.rand_tenure;
    params.max_iters = opt.max_iters;
    params.seed = opt.seed;
    params.k = opt.k;
    params.improvement_cutoff = opt.cutoff;
    params.selection_mode =
        opt.mode == "greedy" ? SelectionMode::greedy : SelectionMode::weighted_random;
    if (opt.target) {
        params.target = q.sense() == Sense::maximize_negated ? -*opt.target : *opt.target;
    } else if (!opt.no_best_known) {
        if (auto t = lookup_target(label, {}))
            params.target = q.sense() == Sense::maximize_negated ? -*t : *t;
    }

    const BitString x0(static_cast<std::size_t>(q.num_vars()), 0);
    SearchResult res;
    if (opt.algo == "basic") {
        res = basic_tabu_search(q, x0, params);
    } else {
        std::unique_ptr<NeighborhoodSampler> sampler;
        if (opt.algo == "bf" || opt.algo == "brute-force") {
            sampler = std::make_unique<BruteForceSampler>();
        } else if (opt.algo == "sa") {
            sampler = std::make_unique<SaSampler>(
                SaConfig{opt.sa_temperature, opt.sa_steps, opt.sa_restarts}, opt.seed + 1);
        } else {
            QaoaSamplerConfig cfg;
            cfg.p = opt.p;
            cfg.penalized = opt.penalized;
            cfg.penalty_scale = opt.penalty_scale;
            cfg.m = opt.m;
            cfg.shots = opt.shots;
            cfg.use_optimizer_history = opt.use_history;
            cfg.budget.max_evals = opt.opt_evals;
            cfg.budget.seed = opt.seed + 1;
            sampler = std::make_unique<QaoaSampler>(cfg, opt.seed + 1);
        }
        res = sampler_tabu_search(q, x0, params, *sampler);
    }

    const char* reason = res.trace.reason == StopReason::target     ? "target"
                         : res.trace.reason == StopReason::max_iters ? "max_iters"
                                                                     : "cutoff";
    std::cout << "instance:   " << label << " (n=" << q.num_vars() << ")\n"
              << "algorithm:  " << opt.algo << "\n"
              << "best value: " << display_value(q, res.f_best) << "\n"
              << "iterations: " << res.trace.records.size() << "\n"
              << "stopped on: " << reason << "\n";

    if (!opt.trace_out.empty()) {
        std::ofstream f(opt.trace_out);
        if (!f) throw std::runtime_error("cannot write " + opt.trace_out);
        write_trace_csv(f, res.trace);
    }
    if (!opt.json_out.empty()) {
        json j;
        j["instance"] = label;
        j["algorithm"] = opt.algo;
        j["best_value"] = display_value(q, res.f_best);
        j["best_internal"] = res.f_best;
        j["iterations"] = res.trace.records.size();
        j["stop_reason"] = reason;
        std::string bits;
        for (auto b : res.x_best) bits.push_back(b ? '1' : '0');
        j["best_bits"] = bits;
        std::ofstream f(opt.json_out);
        if (!f) throw std::runtime_error("cannot write " + opt.json_out);
        f << j.dump(2) << "\n";
    }
    return kExitOk;
}

struct BenchOptions {
    std::string manifest;
    std::vector<std::string> instance_specs;   // path[:index[:label]]
    std::vector<std::string> algos = {"basic"};
    std::vector<int> tenures = {5};
    int rand_tenure = 0;
    std::vector<int> k_values = {10};
    std::string mode = "greedy";
    int p = 1;
    bool penalized = false;
    double penalty_scale = 1.0;
    int m = 10;
    int shots = 1000;
    int opt_evals = 2000;
    double sa_temperature = 17.5;
    int sa_steps = 100;
    int sa_restarts = 1;
    int runs = 1;
    std::vector<std::uint64_t> seeds;
    int max_iters = 1000;
    bool no_best_known = false;
    std::string targets_file;
    std::string out_dir = "bench-out";
};

InstanceRef parse_instance_spec(const std::string& spec) {
    InstanceRef ref;
    const auto first = spec.find(':');
    if (first == std::string::npos) {
        ref.path = spec;
    } else {
        ref.path = spec.substr(0, first);
        const auto second = spec.find(':', first + 1);
        const std::string idx = spec.substr(first + 1, second == std::string::npos
                                                           ? std::string::npos
                                                           : second - first - 1);
        ref.index = std::stoi(idx);
        if (second != std::string::npos) ref.label = spec.substr(second + 1);
    }
    if (ref.label.empty()) ref.label = default_label(ref.path, ref.index);
    return ref;
}

int run_bench(const BenchOptions& opt) {
    ExperimentSpec spec;
    if (!opt.manifest.empty()) {
        spec = experiment_spec_from_json_file(opt.manifest);
    } else {
        if (opt.instance_specs.empty())
            throw CLI::ValidationError("--instances", "at least one instance is required");
        for (const auto& s : opt.instance_specs) spec.instances.push_back(parse_instance_spec(s));
        spec.algorithms.clear();
        for (const auto& a : opt.algos) spec.algorithms.push_back(algorithm_from_name(a));
        spec.tenures = opt.tenures;
        spec.rand_tenure = opt.rand_tenure;
        spec.k_values = opt.k_values;
        spec.selection_mode =
            opt.mode == "greedy" ? SelectionMode::greedy : SelectionMode::weighted_random;
        spec.p = opt.p;
        spec.penalized = opt.penalized;
        spec.penalty_scale = opt.penalty_scale;
        spec.m = opt.m;
        spec.shots = opt.shots;
        spec.opt_evals = opt.opt_evals;
        spec.sa = SaConfig{opt.sa_temperature, opt.sa_steps, opt.sa_restarts};
        spec.max_iters = opt.max_iters;
        spec.use_best_known_targets = !opt.no_best_known;
        spec.seeds = opt.seeds;
        if (spec.seeds.empty())
            for (int s = 0; s < opt.runs; ++s) spec.seeds.push_back(static_cast<std::uint64_t>(s));
        if (!opt.targets_file.empty()) {
            std::ifstream f(opt.targets_file);
            if (!f) throw std::runtime_error("cannot open targets file " + opt.targets_file);
            const json j = json::parse(f);
            spec.extra_targets = j.get<std::map<std::string, double>>();
        }
    }

    const ExperimentResult result = run_experiment(spec, opt.out_dir);
    int done = 0;
    for (const auto& row : result.runs) {
        if (!row.error.empty()) {
            std::cerr << "cell failed: " << row.instance << " " << row.algorithm << " tt="
                      << row.tenure << " k=" << row.k << " seed=" << row.seed << ": " << row.error
                      << "\n";
            continue;
        }
        ++done;
    }
    std::cout << done << "/" << result.runs.size() << " runs completed; results in "
              << opt.out_dir << "\n";
    return result.failed_cells > 0 ? kExitPartialFailure : kExitOk;
}

struct EcdfOptions {
    std::string run_dir;
    int targets = 10;
    std::string out = "ecdf.csv";
};

int run_ecdf(const EcdfOptions& opt) {
    std::ifstream mf(fs::path(opt.run_dir) / "manifest.json");
    if (!mf) throw std::runtime_error("no manifest.json under " + opt.run_dir);
    const json manifest = json::parse(mf);
    std::ifstream sf(fs::path(opt.run_dir) / "summary.json");
    if (!sf) throw std::runtime_error("no summary.json under " + opt.run_dir);
    const json summary = json::parse(sf);

    // sense per label, for orienting best-known targets
    std::map<std::string, bool> negated;
    for (const auto& inst : manifest.at("spec").at("instances")) {
        const Qubo q = load_instance(inst.at("path").get<std::string>(),
                                     inst.at("index").get<int>());
        negated[inst.at("label").get<std::string>()] = q.sense() == Sense::maximize_negated;
    }
    std::map<std::string, double> extra =
        manifest.at("spec").at("extra_targets").get<std::map<std::string, double>>();

    std::map<std::string, ProblemTraces> problems;
    for (const auto& row : summary) {
        if (!row.at("error").get<std::string>().empty()) continue;
        const std::string label = row.at("instance").get<std::string>();
        std::ifstream tf(fs::path(opt.run_dir) / row.at("trace_file").get<std::string>());
        if (!tf) throw std::runtime_error("missing trace " +
                                          row.at("trace_file").get<std::string>());
        RunTrace trace = read_trace_csv(tf);
        if (trace.records.empty()) continue;
        auto& prob = problems[label];
        prob.label = label;
        prob.runs.push_back(std::move(trace));
    }
    if (problems.empty()) throw std::runtime_error("no usable traces in " + opt.run_dir);

    std::vector<ProblemTraces> list;
    for (auto& [label, prob] : problems) {
        if (auto t = lookup_target(label, extra)) {
            prob.optimum = negated[label] ? -*t : *t;
        } else {
            // no best-known value: normalize by the best value observed
            double best = std::numeric_limits<double>::infinity();
            for (const auto& run : prob.runs)
                best = std::min(best, run.records.back().f_best);
            prob.optimum = best;
        }
        list.push_back(std::move(prob));
    }

    const EcdfReport report = compute_ecdf(list, opt.targets);
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    write_ecdf_csv(out, report);
    std::cout << "ecdf over " << list.size() << " problems written to " << opt.out << "\n";
    return kExitOk;
}

struct EnergyDistOptions {
    std::string path;
    int index = 0;
    int k = 15;
    int tenure = 5;
    int iters = 50;
    std::uint64_t seed = 0;
    std::vector<std::string> configs = {"p1", "p1pen", "p2", "p2pen"};
    double penalty_scale = 1.0;
    int shots = 1000;
    int opt_evals = 2000;
    int draws = 100000;
    double sa_temperature = 17.5;
    int sa_steps = 100;
    int sa_restarts = 1000;
    std::string out = "energy-dist.csv";
};

int run_energy_dist(const EnergyDistOptions& opt) {
    const Qubo q = load_instance(opt.path, opt.index);
    if (opt.k > q.num_vars())
        throw std::runtime_error("k exceeds the instance size");

    TabuParams params;
    params.tenure = opt.tenure;
    params.max_iters = opt.iters;
    params.seed = opt.seed;
    const SearchResult res =
        basic_tabu_search(q, BitString(static_cast<std::size_t>(q.num_vars()), 0), params);

    // greedy selection by move values at the tabu solution
    const MoveTable table = init_move_table(q, res.x_best);
    std::mt19937_64 sel_rng(opt.seed);
    const std::vector<int> tabu(static_cast<std::size_t>(q.num_vars()), 0);
    const std::vector<int> selected =
        select_variables(table, tabu, opt.k, SelectionMode::greedy, sel_rng);
    const SubProblem sub = clamp(q, res.x_best, selected);

    std::vector<QaoaSamplerConfig> configs;
    for (const auto& name : opt.configs) {
        QaoaSamplerConfig cfg;
        if (name == "p1") {
            cfg.p = 1;
        } else if (name == "p2") {
            cfg.p = 2;
        } else if (name == "p1pen") {
            cfg.p = 1;
            cfg.penalized = true;
        } else if (name == "p2pen") {
            cfg.p = 2;
            cfg.penalized = true;
        } else {
            throw CLI::ValidationError("--configs", "unknown config '" + name + "'");
        }
        cfg.penalty_scale = opt.penalty_scale;
        cfg.shots = opt.shots;
        cfg.budget.max_evals = opt.opt_evals;
        cfg.budget.seed = opt.seed;
        configs.push_back(cfg);
    }
    const SaConfig sa{opt.sa_temperature, opt.sa_steps, opt.sa_restarts};
    const auto rows = energy_distribution_export(sub, configs, sa, opt.draws, opt.seed);
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    write_energy_dist_csv(out, rows);
    std::cout << rows.size() << " rows (k=" << opt.k << ") written to " << opt.out << "\n";
    return kExitOk;
}

struct ReduceOptions {
    std::string path;
    int count = 8;
    int per_instance = 5;
    int size = 20;
    std::uint64_t seed = 0;
    int tenure = 10;
    int iters = 2000;
    std::string out = "reduced.txt";
    std::string manifest_out;
};

int run_reduce(const ReduceOptions& opt) {
    auto instances = parse_orlib_file(opt.path);
    if (opt.count > 0 && static_cast<int>(instances.size()) > opt.count)
        instances.erase(instances.begin() + opt.count, instances.end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < instances.size(); ++i)
        labels.push_back(default_label(opt.path, static_cast<int>(i)));

    const auto suite = make_reduced_suite(instances, labels, opt.seed, opt.per_instance,
                                          opt.size, opt.tenure, opt.iters);
    std::vector<Qubo> reduced;
    for (const auto& inst : suite) reduced.push_back(inst.qubo);
    write_orlib_file(opt.out, reduced);

    if (!opt.manifest_out.empty()) {
        json entries = json::array();
        for (const auto& inst : suite) {
            std::string bits;
            for (auto b : inst.clamp_source) bits.push_back(b ? '1' : '0');
            entries.push_back({{"label", inst.parent_label},
                               {"parent_indices", inst.parent_indices},
                               {"clamp_source", bits},
                               {"offset", inst.qubo.offset()}});
        }
        json j;
        j["schema_version"] = kManifestSchemaVersion;
        j["toolkit_version"] = kVersion;
        j["seed"] = opt.seed;
        j["instances"] = std::move(entries);
        std::ofstream f(opt.manifest_out);
        if (!f) throw std::runtime_error("cannot write " + opt.manifest_out);
        f << j.dump(2) << "\n";
    }
    std::cout << suite.size() << " reduced instances written to " << opt.out
              << " (offsets live in the manifest; the text format has none)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO tabu search toolkit with pluggable neighborhood samplers"};
    app.set_version_flag("--version", std::string("tabuq ") + kVersion);
    app.require_subcommand(1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "run one search on one instance");
    solve_cmd->add_option("--instance", solve.path, "OR-LIB format instance file")->required();
    solve_cmd->add_option("--index", solve.index, "zero-based instance index in the file");
    solve_cmd->add_option("--label", solve.label, "instance label for target lookup");
    solve_cmd->add_option("--algo", solve.algo, "basic|bf|sa|qaoa")
        ->check(CLI::IsMember({"basic", "bf", "brute-force", "sa", "qaoa"}));
    solve_cmd->add_option("--tt", solve.tenure, "tabu tenure");
    solve_cmd->add_option("--rtt", solve.rand_tenure, "random tabu tenure");
    solve_cmd->add_option("--iters", solve.max_iters, "iteration budget");
    solve_cmd->add_option("--seed", solve.seed, "RNG seed");
    double target_val = 0.0;
    auto* topt = solve_cmd->add_option("--target", target_val,
                                       "stop value (file convention, i.e. maximization)");
    solve_cmd->add_flag("--no-best-known", solve.no_best_known,
                        "do not look the label up in the built-in target table");
    solve_cmd->add_option("--trace", solve.trace_out, "write the run trace CSV here");
    solve_cmd->add_option("--json", solve.json_out, "write a JSON summary here");
    int cutoff_val = 0;
    auto* copt = solve_cmd->add_option("--cutoff", cutoff_val,
                                       "stop after this many non-improving iterations");
    add_sampler_flags(solve_cmd, solve);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "run an experiment matrix");
    bench_cmd->add_option("--manifest", bench.manifest, "re-run a saved manifest.json");
    bench_cmd->add_option("--instances", bench.instance_specs,
                          "instances as path[:index[:label]]");
    bench_cmd->add_option("--algos", bench.algos, "any of basic,bf,sa,qaoa");
    bench_cmd->add_option("--tt", bench.tenures, "tabu tenure sweep");
    bench_cmd->add_option("--rtt", bench.rand_tenure, "random tabu tenure");
    bench_cmd->add_option("--k", bench.k_values, "subproblem size sweep");
    bench_cmd->add_option("--mode", bench.mode, "greedy|weighted")
        ->check(CLI::IsMember({"greedy", "weighted"}));
    bench_cmd->add_option("--p", bench.p, "QAOA depth");
    bench_cmd->add_flag("--penalized", bench.penalized, "penalized QAOA");
    bench_cmd->add_option("--A", bench.penalty_scale, "penalty scale");
    bench_cmd->add_option("--m", bench.m, "samples per iteration");
    bench_cmd->add_option("--shots", bench.shots, "shots per evaluation");
    bench_cmd->add_option("--evals", bench.opt_evals, "optimizer budget");
    bench_cmd->add_option("--sa-temp", bench.sa_temperature, "SA temperature");
    bench_cmd->add_option("--sa-steps", bench.sa_steps, "SA steps");
    bench_cmd->add_option("--sa-restarts", bench.sa_restarts, "SA restarts");
    bench_cmd->add_option("--runs", bench.runs, "number of seeded runs (seeds 0..R-1)");
    bench_cmd->add_option("--seeds", bench.seeds, "explicit seed list");
    bench_cmd->add_option("--iters", bench.max_iters, "iteration budget per run");
    bench_cmd->add_flag("--no-best-known", bench.no_best_known, "ignore the built-in targets");
    bench_cmd->add_option("--targets", bench.targets_file,
                          "JSON file of {label: maximization target}");
    bench_cmd->add_option("--out", bench.out_dir, "output directory")->required();

    EcdfOptions ecdf;
    auto* ecdf_cmd = app.add_subcommand("ecdf", "aggregate a bench run into an ECDF curve");
    ecdf_cmd->add_option("--run", ecdf.run_dir, "bench output directory")->required();
    ecdf_cmd->add_option("-T,--targets", ecdf.targets, "number of evenly spaced targets");
    ecdf_cmd->add_option("--out", ecdf.out, "output CSV");

    EnergyDistOptions edist;
    auto* edist_cmd =
        app.add_subcommand("energy-dist", "export sampler energy distributions for one subproblem");
    edist_cmd->add_option("--instance", edist.path, "OR-LIB format instance file")->required();
    edist_cmd->add_option("--index", edist.index, "instance index");
    edist_cmd->add_option("--k", edist.k, "subproblem size");
    edist_cmd->add_option("--tt", edist.tenure, "tenure of the preparatory tabu run");
    edist_cmd->add_option("--iters", edist.iters, "iterations of the preparatory tabu run");
    edist_cmd->add_option("--seed", edist.seed, "RNG seed");
    edist_cmd->add_option("--configs", edist.configs, "subset of p1,p1pen,p2,p2pen");
    edist_cmd->add_option("--A", edist.penalty_scale, "penalty scale");
    edist_cmd->add_option("--shots", edist.shots, "shots per evaluation");
    edist_cmd->add_option("--evals", edist.opt_evals, "optimizer budget");
    edist_cmd->add_option("--draws", edist.draws, "samples drawn from each optimized state");
    edist_cmd->add_option("--sa-temp", edist.sa_temperature, "SA temperature");
    edist_cmd->add_option("--sa-steps", edist.sa_steps, "SA steps per restart");
    edist_cmd->add_option("--sa-restarts", edist.sa_restarts, "SA restarts");
    edist_cmd->add_option("--out", edist.out, "output CSV");

    ReduceOptions reduce;
    auto* reduce_cmd =
        app.add_subcommand("reduce", "clamp instances down to a reduced benchmark suite");
    reduce_cmd->add_option("--instances", reduce.path, "OR-LIB format instance file")->required();
    reduce_cmd->add_option("--count", reduce.count, "use only the first N instances (0 = all)");
    reduce_cmd->add_option("--per-instance", reduce.per_instance, "reduced problems per parent");
    reduce_cmd->add_option("--size", reduce.size, "variables kept per reduced problem");
    reduce_cmd->add_option("--seed", reduce.seed, "RNG seed");
    reduce_cmd->add_option("--tt", reduce.tenure, "tenure of the preparatory tabu runs");
    reduce_cmd->add_option("--iters", reduce.iters, "iterations of the preparatory tabu runs");
    reduce_cmd->add_option("--out", reduce.out, "output instance file")->required();
    reduce_cmd->add_option("--provenance", reduce.manifest_out,
                           "JSON file recording parents, indices and offsets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*topt) solve.target = target_val;
        if (*copt) solve.cutoff = cutoff_val;
        if (solve_cmd->parsed()) return run_solve(solve);
        if (bench_cmd->parsed()) return run_bench(bench);
        if (ecdf_cmd->parsed()) return run_ecdf(ecdf);
        if (edist_cmd->parsed()) return run_energy_dist(edist);
        if (reduce_cmd->parsed()) return run_reduce(reduce);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}
