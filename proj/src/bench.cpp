// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include "json.hpp"
#include "tabuq/orlib.hpp"
#include "tabuq/version.hpp"

namespace tabuq {

namespace fs = std::filesystem;
using nlohmann::json;

const std::map<std::string, double>& best_known_table() {
    // Best maximization values reported for the public bqp set.
    static const std::map<std::string, double> table = {
        {"1d", 6333},  {"2d", 6579},   {"3d", 9261},   {"4d", 10727},  {"5d", 11626},
        {"1e", 16464}, {"2e", 23395},  {"3e", 25243},  {"4e", 35594},  {"5e", 35154},
        {"1f", 61194}, {"2f", 100161}, {"3f", 138035}, {"4f", 172771}, {"5f", 190507},
    };
    return table;
}

std::optional<double> lookup_target(const std::string& label,
                                    const std::map<std::string, double>& extra) {
    const auto& builtin = best_known_table();
    if (auto it = builtin.find(label); it != builtin.end()) return it->second;
    if (auto it = extra.find(label); it != extra.end()) return it->second;
    return std::nullopt;
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::basic: return "basic";
        case Algorithm::brute_force: return "brute-force";
        case Algorithm::sa: return "sa";
        case Algorithm::qaoa: return "qaoa";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "basic") return Algorithm::basic;
    if (name == "brute-force" || name == "bf") return Algorithm::brute_force;
    if (name == "sa") return Algorithm::sa;
    if (name == "qaoa") return Algorithm::qaoa;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

std::uint64_t sampler_stream_seed(std::uint64_t run_seed) {
    return run_seed ^ 0x53ab1eull;   // sampler stream distinct from the engine's
}

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::target: return "target";
        case StopReason::max_iters: return "max_iters";
        case StopReason::cutoff: return "cutoff";
    }
    return "?";
}

json spec_to_json_obj(const ExperimentSpec& spec) {
    json j;
    json insts = json::array();
    for (const auto& ref : spec.instances)
        insts.push_back({{"path", ref.path}, {"index", ref.index}, {"label", ref.label}});
    j["instances"] = std::move(insts);
    json algos = json::array();
    for (auto a : spec.algorithms) algos.push_back(algorithm_name(a));
    j["algorithms"] = std::move(algos);
    j["tenures"] = spec.tenures;
    j["rand_tenure"] = spec.rand_tenure;
    j["k_values"] = spec.k_values;
    j["selection_mode"] = spec.selection_mode == SelectionMode::greedy ? "greedy" : "weighted-random";
    j["p"] = spec.p;
    j["penalized"] = spec.penalized;
    j["penalty_scale"] = spec.penalty_scale;
    j["m"] = spec.m;
    j["shots"] = spec.shots;
    j["opt_evals"] = spec.opt_evals;
    j["sa"] = {{"temperature", spec.sa.temperature},
               {"steps", spec.sa.steps},
               {"restarts", spec.sa.restarts}};
    j["seeds"] = spec.seeds;
    j["max_iters"] = spec.max_iters;
    j["use_best_known_targets"] = spec.use_best_known_targets;
    j["extra_targets"] = spec.extra_targets;
    return j;
}

ExperimentSpec spec_from_json_obj(const json& j) {
    ExperimentSpec spec;
    spec.instances.clear();
    for (const auto& e : j.at("instances"))
        spec.instances.push_back({e.at("path").get<std::string>(), e.at("index").get<int>(),
                                  e.at("label").get<std::string>()});
    spec.algorithms.clear();
    for (const auto& a : j.at("algorithms"))
        spec.algorithms.push_back(algorithm_from_name(a.get<std::string>()));
    spec.tenures = j.at("tenures").get<std::vector<int>>();
    spec.rand_tenure = j.at("rand_tenure").get<int>();
    spec.k_values = j.at("k_values").get<std::vector<int>>();
    spec.selection_mode = j.at("selection_mode").get<std::string>() == "greedy"
                              ? SelectionMode::greedy
                              : SelectionMode::weighted_random;
    spec.p = j.at("p").get<int>();
    spec.penalized = j.at("penalized").get<bool>();
    spec.penalty_scale = j.at("penalty_scale").get<double>();
    spec.m = j.at("m").get<int>();
    spec.shots = j.at("shots").get<int>();
    spec.opt_evals = j.at("opt_evals").get<int>();
    spec.sa.temperature = j.at("sa").at("temperature").get<double>();
    spec.sa.steps = j.at("sa").at("steps").get<int>();
    spec.sa.restarts = j.at("sa").at("restarts").get<int>();
    spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    spec.max_iters = j.at("max_iters").get<int>();
    spec.use_best_known_targets = j.at("use_best_known_targets").get<bool>();
    spec.extra_targets = j.at("extra_targets").get<std::map<std::string, double>>();
    return spec;
}

json summary_to_json(const RunSummary& r) {
    return json{{"instance", r.instance},
                {"algorithm", r.algorithm},
                {"tenure", r.tenure},
                {"k", r.k},
                {"seed", r.seed},
                {"best_value", r.best_value},
                {"best_internal", r.best_internal},
                {"first_iter_to_target", r.first_iter_to_target},
                {"iterations", r.iterations},
                {"stop_reason", r.stop_reason},
                {"trace_file", r.trace_file},
                {"error", r.error}};
}

}  // namespace

std::string experiment_spec_to_json(const ExperimentSpec& spec) {
    return spec_to_json_obj(spec).dump(2);
}

ExperimentSpec experiment_spec_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    json j = json::parse(in);
    return spec_from_json_obj(j.contains("spec") ? j.at("spec") : j);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const std::string& out_dir) {
    if (spec.instances.empty()) throw std::invalid_argument("run_experiment: no instances");
    if (spec.seeds.empty()) throw std::invalid_argument("run_experiment: no seeds");

    fs::create_directories(fs::path(out_dir) / "traces");

    // load each file once
    std::map<std::string, std::vector<Qubo>> files;
    for (const auto& ref : spec.instances) {
        if (!files.count(ref.path)) files[ref.path] = parse_orlib_file(ref.path);
        const auto& loaded = files[ref.path];
        if (ref.index < 0 || ref.index >= static_cast<int>(loaded.size()))
            throw std::runtime_error("instance index " + std::to_string(ref.index) +
                                     " out of range for " + ref.path + " (" +
                                     std::to_string(loaded.size()) + " instances)");
    }

    ExperimentResult result;
    for (const auto& ref : spec.instances) {
        const Qubo& q = files[ref.path][static_cast<std::size_t>(ref.index)];
        std::optional<double> target_max;
        if (spec.use_best_known_targets) target_max = lookup_target(ref.label, spec.extra_targets);

        for (Algorithm algo : spec.algorithms) {
            const bool uses_sampler = algo != Algorithm::basic;
            const std::vector<int> ks = uses_sampler ? spec.k_values : std::vector<int>{0};
            for (int tenure : spec.tenures) {
                for (int k : ks) {
                    for (std::uint64_t seed : spec.seeds) {
                        RunSummary row;
                        row.instance = ref.label;
                        row.algorithm = algorithm_name(algo);
                        row.tenure = tenure;
                        row.k = k;
                        row.seed = seed;
                        try {
                            TabuParams params;
                            params.tenure = tenure;
                            params.rand_tenure = spec.rand_tenure;
                            params.max_iters = spec.max_iters;
                            params.seed = seed;
                            params.k = k;
                            params.selection_mode = spec.selection_mode;
                            if (target_max) {
                                // table values are maxima; the engine minimizes
                                params.target = q.sense() == Sense::maximize_negated
                                                    ? -*target_max
                                                    : *target_max;
                            }
                            const BitString x0(static_cast<std::size_t>(q.num_vars()), 0);

                            SearchResult sr;
                            if (algo == Algorithm::basic) {
                                sr = basic_tabu_search(q, x0, params);
                            } else {
                                std::unique_ptr<NeighborhoodSampler> sampler;
                                if (algo == Algorithm::brute_force) {
                                    sampler = std::make_unique<BruteForceSampler>();
                                } else if (algo == Algorithm::sa) {
                                    sampler = std::make_unique<SaSampler>(
                                        spec.sa, sampler_stream_seed(seed));
                                } else {
                                    QaoaSamplerConfig cfg;
                                    cfg.p = spec.p;
                                    cfg.penalized = spec.penalized;
                                    cfg.penalty_scale = spec.penalty_scale;
                                    cfg.m = spec.m;
                                    cfg.shots = spec.shots;
                                    cfg.budget.max_evals = spec.opt_evals;
                                    cfg.budget.seed = sampler_stream_seed(seed);
                                    sampler = std::make_unique<QaoaSampler>(
                                        cfg, sampler_stream_seed(seed));
                                }
                                sr = sampler_tabu_search(q, x0, params, *sampler);
                            }

                            row.best_internal = sr.f_best;
                            row.best_value = q.sense() == Sense::maximize_negated ? -sr.f_best
                                                                                  : sr.f_best;
                            row.iterations = static_cast<int>(sr.trace.records.size());
                            row.stop_reason = stop_reason_name(sr.trace.reason);
                            row.first_iter_to_target = -1;
                            if (params.target) {
                                if (sr.trace.records.empty() && sr.f_best <= *params.target) {
                                    row.first_iter_to_target = 0;   // initial solution already met it
                                } else {
                                    for (const auto& rec : sr.trace.records) {
                                        if (rec.f_best <= *params.target) {
                                            row.first_iter_to_target = rec.iteration;
                                            break;
                                        }
                                    }
                                }
                            }

                            char name[256];
                            std::snprintf(name, sizeof name, "%s__%s_tt%d_k%d_s%llu.csv",
                                          sanitize(ref.label).c_str(),
                                          sanitize(row.algorithm).c_str(), tenure, k,
                                          static_cast<unsigned long long>(seed));
                            const fs::path trace_path = fs::path(out_dir) / "traces" / name;
                            std::ofstream tf(trace_path);
                            write_trace_csv(tf, sr.trace);
                            row.trace_file = (fs::path("traces") / name).string();
                        } catch (const std::exception& e) {
                            row.error = e.what();
                            ++result.failed_cells;
                        }
                        result.runs.push_back(std::move(row));
                    }
                }
            }
        }
    }

    json summary = json::array();
    for (const auto& r : result.runs) summary.push_back(summary_to_json(r));
    std::ofstream sf(fs::path(out_dir) / "summary.json");
    sf << summary.dump(2) << "\n";

    json manifest;
    manifest["schema_version"] = kManifestSchemaVersion;
    manifest["toolkit_version"] = kVersion;
    manifest["spec"] = spec_to_json_obj(spec);
    manifest["summary_file"] = "summary.json";
    manifest["failed_cells"] = result.failed_cells;
    std::ofstream mf(fs::path(out_dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";

    return result;
}

std::vector<ReducedInstance> make_reduced_suite(const std::vector<Qubo>& instances,
                                                const std::vector<std::string>& labels,
                                                std::uint64_t seed, int per_instance, int size,
                                                int ts_tenure, int ts_iters) {
    if (!labels.empty() && labels.size() != instances.size())
        throw std::invalid_argument("make_reduced_suite: labels do not match instances");
    if (per_instance < 1 || size < 1)
        throw std::invalid_argument("make_reduced_suite: per_instance and size must be positive");

    std::vector<ReducedInstance> suite;
    std::mt19937_64 rng(seed);
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const Qubo& q = instances[idx];
        const int n = q.num_vars();
        if (n < size)
            throw std::invalid_argument("make_reduced_suite: instance " + std::to_string(idx) +
                                        " has n=" + std::to_string(n) + " < size=" +
                                        std::to_string(size));
        TabuParams params;
        params.tenure = ts_tenure;
        params.max_iters = ts_iters;
        params.seed = rng();
        const BitString x0(static_cast<std::size_t>(n), 0);
        const SearchResult sr = basic_tabu_search(q, x0, params);

        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        for (int r = 0; r < per_instance; ++r) {
            std::vector<int> pool = all;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> selected(pool.begin(), pool.begin() + size);
            std::sort(selected.begin(), selected.end());
            SubProblem sub = clamp(q, sr.x_best, selected);
            const std::string parent =
                labels.empty() ? ("instance" + std::to_string(idx)) : labels[idx];
            suite.push_back({std::move(sub.reduced), parent + "#r" + std::to_string(r),
                             std::move(sub.parent_indices), sr.x_best});
        }
    }
    return suite;
}

EcdfReport compute_ecdf(const std::vector<ProblemTraces>& problems, int target_count) {
    if (target_count < 2) throw std::invalid_argument("compute_ecdf: need T >= 2");
    if (problems.empty()) throw std::invalid_argument("compute_ecdf: empty traces");

    EcdfReport report;
    report.target_count = target_count;

    struct Pair {
        int success_iteration;   // INT_MAX when never satisfied
    };
    std::vector<Pair> pairs;
    int horizon = 0;

    for (const auto& prob : problems) {
        std::vector<const RunTrace*> runs;
        for (const auto& run : prob.runs)
            if (!run.records.empty()) runs.push_back(&run);
        if (runs.empty())
            throw std::invalid_argument("compute_ecdf: problem '" + prob.label +
                                        "' has no nonempty traces");
        double vmin = std::numeric_limits<double>::infinity();
        double vmax = -std::numeric_limits<double>::infinity();
        for (const auto* run : runs) {
            for (const auto& rec : run->records) {
                vmin = std::min(vmin, rec.f_best);
                vmax = std::max(vmax, rec.f_best);
            }
            horizon = std::max(horizon, run->records.back().iteration);
        }
        std::vector<double> targets(static_cast<std::size_t>(target_count));
        for (int t = 0; t < target_count; ++t)
            targets[static_cast<std::size_t>(t)] =
                vmin + (vmax - vmin) * static_cast<double>(t) /
                           static_cast<double>(target_count - 1);
        std::vector<double> norm(targets);
        if (prob.optimum != 0.0)
            for (auto& v : norm) v /= prob.optimum;
        report.targets.push_back(targets);
        report.normalized_targets.push_back(std::move(norm));

        for (const auto* run : runs) {
            for (double target : targets) {
                int hit = std::numeric_limits<int>::max();
                for (const auto& rec : run->records) {
                    if (rec.f_best <= target) {
                        hit = rec.iteration;
                        break;
                    }
                }
                pairs.push_back({hit});
            }
        }
    }

    report.proportion.assign(static_cast<std::size_t>(horizon), 0.0);
    for (const auto& pair : pairs) {
        if (pair.success_iteration == std::numeric_limits<int>::max()) continue;
        for (int t = std::max(1, pair.success_iteration); t <= horizon; ++t)
            report.proportion[static_cast<std::size_t>(t - 1)] += 1.0;
    }
    const double total = static_cast<double>(pairs.size());
    for (auto& v : report.proportion) v /= total;
    return report;
}

void write_ecdf_csv(std::ostream& out, const EcdfReport& report) {
    out << "iteration,proportion\n";
    char buf[64];
    for (std::size_t t = 0; t < report.proportion.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", t + 1, report.proportion[t]);
        out << buf;
    }
}

std::string qaoa_config_label(const QaoaSamplerConfig& cfg) {
    std::string label = "p" + std::to_string(cfg.p);
    if (cfg.penalized) {
        label += "pen";
        if (cfg.penalty_scale != 1.0) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "-A%g", cfg.penalty_scale);
            label += buf;
        }
    }
    return label;
}

std::vector<EnergyDistRow> energy_distribution_export(const SubProblem& sub,
                                                      const std::vector<QaoaSamplerConfig>& configs,
                                                      const SaConfig& sa, int draws,
                                                      std::uint64_t seed) {
    if (draws < 1) throw std::invalid_argument("energy_distribution_export: draws must be >= 1");
    const int k = sub.k();
    if (k > kMaxQaoaQubits)
        throw std::invalid_argument("energy_distribution_export: k too large");

    const BitString reference = sub.base_restricted();
    const BitString ref_local = reference;
    const MoveTable ref_table = init_move_table(sub.reduced, ref_local);
    std::vector<EnergyDistRow> rows;

    for (const auto& cfg : configs) {
        const std::string label = qaoa_config_label(cfg);
        std::mt19937_64 rng(seed);
        const SamplerContext ctx{ref_table.delta, reference};
        const OptimizedQaoa opt = optimize_qaoa_state(sub, cfg, ctx, rng);
        for (const auto& shot : sample(opt.state, draws, rng))
            rows.push_back({label, "sample", shot.energy,
                            hamming_distance(shot.bits, reference), 0.0});
        if (k <= 20) {
            for (std::size_t b = 0; b < opt.state.amplitudes.size(); ++b)
                rows.push_back({label, "exact", opt.state.energies[b],
                                hamming_distance(index_to_bits(b, k), reference),
                                std::norm(opt.state.amplitudes[b])});
        }
    }

    std::mt19937_64 rng(seed ^ 0xa5a5ull);
    for (const auto& shot : sa_chain_bests(sub, sa, rng))
        rows.push_back({"sa", "sa", shot.energy, hamming_distance(shot.bits, reference), 0.0});
    return rows;
}

void write_energy_dist_csv(std::ostream& out, const std::vector<EnergyDistRow>& rows) {
    out << "config,kind,energy,hamming,probability\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%d,%.17g\n", r.config.c_str(), r.kind.c_str(),
                      r.energy, r.hamming, r.probability);
        out << buf;
    }
}

}  // namespace tabuq
