// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tabuq/qubo.hpp"
#include "tabuq/samplers.hpp"

namespace tabuq {

/// Raised when parameters make the search impossible (e.g. every variable
/// tabu, or fewer non-tabu variables than the subproblem size).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SelectionMode { greedy, weighted_random };

struct TabuParams {
    int tenure = 10;                           // TT
    int rand_tenure = 0;                       // rTT; Random(0) contributes 0
    int max_iters = 1000;
    std::optional<int> improvement_cutoff;     // consecutive iterations without a new best
    std::optional<double> target;              // stop once f_best <= target
    std::uint64_t seed = 0;
    int k = 0;                                 // subproblem size (sampler search only)
    SelectionMode selection_mode = SelectionMode::greedy;
};

enum class StopReason { target, max_iters, cutoff };

struct TraceRecord {
    int iteration = 0;            // 1-based
    double f_ts = 0.0;
    double f_best = 0.0;
    std::vector<int> flipped;     // parent indices flipped this iteration
    bool sampler_accepted = false;
};

struct RunTrace {
    std::vector<TraceRecord> records;
    StopReason reason = StopReason::max_iters;
};

/// Line-oriented CSV: iteration,f_ts,f_best,n_flipped,accepted.
void write_trace_csv(std::ostream& out, const RunTrace& trace);
RunTrace read_trace_csv(std::istream& in);

struct SearchResult {
    BitString x_best;
    double f_best = 0.0;
    RunTrace trace;
};

/// Search state shared by both algorithms: current and best solution, tabu
/// counters and the incrementally maintained move table.
struct TabuState {
    BitString x_ts;
    BitString x_best;
    double f_ts = 0.0;
    double f_best = 0.0;
    std::vector<int> tabu;
    int iteration = 0;
    MoveTable move_table;
};

/// One-bit-flip tabu search. Each iteration flips the non-tabu variable with
/// the smallest move value (ties to the lowest index), decrements positive
/// tabu counters, then gives the flipped variable tenure TT + Random(rTT),
/// or 0 when the move produced a new best (aspiration).
SearchResult basic_tabu_search(const Qubo& q, const BitString& x0, const TabuParams& params);

/// Tabu search with a neighborhood sampler: per iteration the best one-flip
/// candidate is formed, k non-tabu variables are selected and clamped into a
/// subproblem, and the sampler's best candidate replaces the one-flip move
/// only when strictly better. Tabu tenure is applied to the variables that
/// actually flipped.
SearchResult sampler_tabu_search(const Qubo& q, const BitString& x0, const TabuParams& params,
                                 NeighborhoodSampler& sampler);

/// k non-tabu indices: greedy takes the smallest move values (ties to the
/// lowest index); weighted-random draws without replacement with weight
/// proportional to the rank of -delta among non-tabu variables, so better
/// moves are more likely but every non-tabu variable stays reachable.
std::vector<int> select_variables(const MoveTable& table, const std::vector<int>& tabu, int k,
                                  SelectionMode mode, std::mt19937_64& rng);

}  // namespace tabuq
