// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabuq/qubo.hpp"
#include "tabuq/samplers.hpp"
#include "tabuq/tabu.hpp"

namespace tabuq {

/// Best-known maximization values for the public bqp instance set, keyed by
/// the conventional instance labels. Used as stop targets, not asserted
/// optima.
const std::map<std::string, double>& best_known_table();

/// First-found target for a label: the built-in table, then `extra`.
std::optional<double> lookup_target(const std::string& label,
                                    const std::map<std::string, double>& extra);

struct InstanceRef {
    std::string path;
    int index = 0;            // zero-based within the file
    std::string label;        // defaults to "<stem>:<index>"
};

enum class Algorithm { basic, brute_force, sa, qaoa };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentSpec {
    std::vector<InstanceRef> instances;
    std::vector<Algorithm> algorithms = {Algorithm::basic};
    std::vector<int> tenures = {5};
    int rand_tenure = 0;
    std::vector<int> k_values = {10};          // sampler algorithms only
    SelectionMode selection_mode = SelectionMode::greedy;
    int p = 1;
    bool penalized = false;
    double penalty_scale = 1.0;
    int m = 10;
    int shots = 1000;
    int opt_evals = 2000;
    SaConfig sa;
    std::vector<std::uint64_t> seeds = {0};
    int max_iters = 1000;
    bool use_best_known_targets = true;
    std::map<std::string, double> extra_targets;   // label -> maximization value
};

struct RunSummary {
    std::string instance;
    std::string algorithm;
    int tenure = 0;
    int k = 0;                         // 0 for the basic algorithm
    std::uint64_t seed = 0;
    double best_value = 0.0;           // re-negated for maximization provenance
    double best_internal = 0.0;        // minimization objective
    int first_iter_to_target = -1;     // -1 when no target or never reached
    int iterations = 0;
    std::string stop_reason;
    std::string trace_file;
    std::string error;                 // nonempty when the cell failed
};

struct ExperimentResult {
    std::vector<RunSummary> runs;
    int failed_cells = 0;
};

/// Executes the full matrix (instances x algorithms x tenures x k x seeds),
/// writing one trace CSV per run plus summary.json and manifest.json under
/// out_dir. Per-cell failures are recorded without aborting the matrix.
ExperimentResult run_experiment(const ExperimentSpec& spec, const std::string& out_dir);

/// Serializes spec to the manifest JSON schema / loads it back, so a
/// manifest re-run reproduces byte-identical summary values.
std::string experiment_spec_to_json(const ExperimentSpec& spec);
ExperimentSpec experiment_spec_from_json_file(const std::string& path);

struct ReducedInstance {
    Qubo qubo;
    std::string parent_label;
    std::vector<int> parent_indices;
    BitString clamp_source;
};

/// The small-instance suite: per parent instance, run the one-flip tabu
/// search, then `per_instance` times select `size` variables uniformly at
/// random and clamp the rest from that solution.
std::vector<ReducedInstance> make_reduced_suite(const std::vector<Qubo>& instances,
                                                const std::vector<std::string>& labels,
                                                std::uint64_t seed, int per_instance = 5,
                                                int size = 20, int ts_tenure = 10,
                                                int ts_iters = 2000);

struct ProblemTraces {
    std::string label;
    double optimum = 0.0;              // normalization reference (minimization sign)
    std::vector<RunTrace> runs;
};

struct EcdfReport {
    int target_count = 0;
    std::vector<std::vector<double>> targets;              // per problem
    std::vector<std::vector<double>> normalized_targets;   // targets / optimum
    std::vector<double> proportion;                        // index t-1 = iterations t
};

/// Proportion of (run, target) pairs satisfied as a function of iterations.
/// Per problem, T targets are evenly spaced between the smallest and largest
/// best-so-far values observed across its runs; a pair succeeds at the first
/// iteration whose f_best reaches the target.
EcdfReport compute_ecdf(const std::vector<ProblemTraces>& problems, int target_count);

void write_ecdf_csv(std::ostream& out, const EcdfReport& report);

struct EnergyDistRow {
    std::string config;
    std::string kind;      // "sample", "exact" or "sa"
    double energy = 0.0;
    int hamming = 0;       // distance to the reference solution
    double probability = 0.0;   // exact rows only
};

/// Samples the optimized QAOA state of each config `draws` times and lists
/// the exact outcome probabilities (k <= 20); SA rows give the best-of-chain
/// energy per restart.
std::vector<EnergyDistRow> energy_distribution_export(const SubProblem& sub,
                                                      const std::vector<QaoaSamplerConfig>& configs,
                                                      const SaConfig& sa, int draws,
                                                      std::uint64_t seed);

void write_energy_dist_csv(std::ostream& out, const std::vector<EnergyDistRow>& rows);

std::string qaoa_config_label(const QaoaSamplerConfig& cfg);

}  // namespace tabuq
