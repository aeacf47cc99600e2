// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/tabu.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tabuq {

namespace {

void validate_common(const Qubo& q, const BitString& x0, const TabuParams& params) {
    if (static_cast<int>(x0.size()) != q.num_vars())
        throw std::invalid_argument("tabu search: initial solution length mismatch");
    if (params.max_iters < 1) throw ConfigError("tabu search: max_iters must be >= 1");
    if (params.tenure < 0 || params.rand_tenure < 0)
        throw ConfigError("tabu search: tenures must be nonnegative");
}

int random_tenure(int rand_tenure, std::mt19937_64& rng) {
    if (rand_tenure == 0) return 0;   // Random(0) contributes nothing
    return std::uniform_int_distribution<int>(1, rand_tenure)(rng);
}

/// Non-tabu index with the smallest move value, ties to the lowest index;
/// -1 when every variable is tabu.
int best_one_flip(const MoveTable& table, const std::vector<int>& tabu) {
    int j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < table.delta.size(); ++i) {
        if (tabu[i] > 0) continue;
        if (j < 0 || table.delta[i] < best) {
            j = static_cast<int>(i);
            best = table.delta[i];
        }
    }
    return j;
}

void decrement_tabu(std::vector<int>& tabu) {
    for (auto& t : tabu)
        if (t > 0) --t;
}

struct StopCheck {
    const TabuParams& params;
    int since_improvement = 0;

    // returns true when the search must stop after the current iteration
    bool operator()(const TabuState& state, bool improved, StopReason& reason) {
        since_improvement = improved ? 0 : since_improvement + 1;
        if (params.target && state.f_best <= *params.target) {
            reason = StopReason::target;
            return true;
        }
        if (params.improvement_cutoff && since_improvement >= *params.improvement_cutoff) {
            reason = StopReason::cutoff;
            return true;
        }
        if (state.iteration >= params.max_iters) {
            reason = StopReason::max_iters;
            return true;
        }
        return false;
    }
};

SearchResult finish(TabuState&& state, RunTrace&& trace) {
    return SearchResult{std::move(state.x_best), state.f_best, std::move(trace)};
}

TabuState make_state(const Qubo& q, const BitString& x0) {
    TabuState state;
    state.x_ts = x0;
    state.x_best = x0;
    state.f_ts = q.evaluate(x0);
    state.f_best = state.f_ts;
    state.tabu.assign(static_cast<std::size_t>(q.num_vars()), 0);
    state.move_table = init_move_table(q, x0);
    return state;
}

}  // namespace

SearchResult basic_tabu_search(const Qubo& q, const BitString& x0, const TabuParams& params) {
    validate_common(q, x0, params);
    std::mt19937_64 rng(params.seed);
    TabuState state = make_state(q, x0);
    RunTrace trace;
    trace.reason = StopReason::max_iters;

    if (params.target && state.f_best <= *params.target) {
        trace.reason = StopReason::target;
        return finish(std::move(state), std::move(trace));
    }

    StopCheck stop{params};
    while (true) {
        const int j = best_one_flip(state.move_table, state.tabu);
        if (j < 0)
            throw ConfigError("basic_tabu_search: every variable is tabu at iteration " +
                              std::to_string(state.iteration + 1) +
                              " (tenure too large for n=" + std::to_string(q.num_vars()) + ")");
        state.f_ts += state.move_table.delta[static_cast<std::size_t>(j)];
        apply_flip(q, state.x_ts, state.move_table, j);
        ++state.iteration;

        const bool improved = state.f_ts < state.f_best;
        if (improved) {
            state.x_best = state.x_ts;
            state.f_best = state.f_ts;
        }
        decrement_tabu(state.tabu);
        state.tabu[static_cast<std::size_t>(j)] =
            improved ? 0 : params.tenure + random_tenure(params.rand_tenure, rng);

        trace.records.push_back({state.iteration, state.f_ts, state.f_best, {j}, false});
        if (stop(state, improved, trace.reason)) break;
    }
    return finish(std::move(state), std::move(trace));
}

SearchResult sampler_tabu_search(const Qubo& q, const BitString& x0, const TabuParams& params,
                                 NeighborhoodSampler& sampler) {
    validate_common(q, x0, params);
    const int n = q.num_vars();
    if (params.k < 1 || params.k > n)
        throw ConfigError("sampler_tabu_search: k must be in [1, n], got " +
                          std::to_string(params.k));
    std::mt19937_64 rng(params.seed);
    TabuState state = make_state(q, x0);
    RunTrace trace;
    trace.reason = StopReason::max_iters;

    if (params.target && state.f_best <= *params.target) {
        trace.reason = StopReason::target;
        return finish(std::move(state), std::move(trace));
    }

    StopCheck stop{params};
    while (true) {
        const int j = best_one_flip(state.move_table, state.tabu);
        if (j < 0)
            throw ConfigError("sampler_tabu_search: every variable is tabu at iteration " +
                              std::to_string(state.iteration + 1));
        const double f_one_flip =
            state.f_ts + state.move_table.delta[static_cast<std::size_t>(j)];

        const std::vector<int> selected =
            select_variables(state.move_table, state.tabu, params.k, params.selection_mode, rng);
        const SubProblem sub = clamp(q, state.x_ts, selected);

        std::vector<double> restricted_delta(selected.size());
        for (std::size_t t = 0; t < selected.size(); ++t)
            restricted_delta[t] = state.move_table.delta[static_cast<std::size_t>(selected[t])];
        const SamplerContext ctx{restricted_delta, sub.base_restricted()};

        BitString candidate;
        try {
            candidate = sampler.sample_best(sub, ctx);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("sampler failed at iteration " +
                                     std::to_string(state.iteration + 1) + ": " + e.what());
        }
        if (candidate.size() != selected.size())
            throw std::runtime_error("sampler returned a candidate of length " +
                                     std::to_string(candidate.size()) + ", expected k=" +
                                     std::to_string(selected.size()));
        const double f_candidate = sub.reduced.evaluate(candidate);

        std::vector<int> flips;
        const bool accepted = f_candidate < f_one_flip;
        if (accepted) {
            for (std::size_t t = 0; t < selected.size(); ++t)
                if (candidate[t] != state.x_ts[static_cast<std::size_t>(selected[t])])
                    flips.push_back(selected[t]);
        } else {
            flips.push_back(j);
        }
        for (int idx : flips) {
            state.f_ts += state.move_table.delta[static_cast<std::size_t>(idx)];
            apply_flip(q, state.x_ts, state.move_table, idx);
        }
        ++state.iteration;

        const bool improved = state.f_ts < state.f_best;
        if (improved) {
            state.x_best = state.x_ts;
            state.f_best = state.f_ts;
        }
        decrement_tabu(state.tabu);
        for (int idx : flips)
            state.tabu[static_cast<std::size_t>(idx)] =
                improved ? 0 : params.tenure + random_tenure(params.rand_tenure, rng);

        trace.records.push_back({state.iteration, state.f_ts, state.f_best, flips, accepted});
        if (stop(state, improved, trace.reason)) break;
    }
    return finish(std::move(state), std::move(trace));
}

std::vector<int> select_variables(const MoveTable& table, const std::vector<int>& tabu, int k,
                                  SelectionMode mode, std::mt19937_64& rng) {
    if (k < 1) throw ConfigError("select_variables: k must be >= 1");
    std::vector<int> free_vars;
    for (std::size_t i = 0; i < table.delta.size(); ++i)
        if (tabu[i] == 0) free_vars.push_back(static_cast<int>(i));
    if (static_cast<int>(free_vars.size()) < k)
        throw ConfigError("select_variables: only " + std::to_string(free_vars.size()) +
                          " non-tabu variables for k=" + std::to_string(k) +
                          " (tenure/k misconfiguration)");

    std::vector<int> chosen;
    if (mode == SelectionMode::greedy) {
        std::sort(free_vars.begin(), free_vars.end(), [&](int a, int b) {
            const double da = table.delta[static_cast<std::size_t>(a)];
            const double db = table.delta[static_cast<std::size_t>(b)];
            return da < db || (da == db && a < b);
        });
        chosen.assign(free_vars.begin(), free_vars.begin() + k);
    } else {
        // rank weights: worst move gets weight 1, best non-tabu move gets
        // weight M; raw gains can be negative so ranks replace them
        std::sort(free_vars.begin(), free_vars.end(), [&](int a, int b) {
            const double da = table.delta[static_cast<std::size_t>(a)];
            const double db = table.delta[static_cast<std::size_t>(b)];
            return da > db || (da == db && a > b);
        });
        std::vector<double> weight(free_vars.size());
        for (std::size_t r = 0; r < free_vars.size(); ++r) weight[r] = static_cast<double>(r + 1);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int draw = 0; draw < k; ++draw) {
            const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
            double u = unif(rng) * total;
            std::size_t pick = weight.size() - 1;
            for (std::size_t r = 0; r < weight.size(); ++r) {
                if (weight[r] <= 0.0) continue;
                u -= weight[r];
                if (u < 0.0) {
                    pick = r;
                    break;
                }
            }
            chosen.push_back(free_vars[pick]);
            weight[pick] = 0.0;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
    out << "iteration,f_ts,f_best,n_flipped,accepted\n";
    char buf[128];
    for (const auto& r : trace.records) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%zu,%d\n", r.iteration, r.f_ts, r.f_best,
                      r.flipped.size(), r.sampler_accepted ? 1 : 0);
        out << buf;
    }
}

RunTrace read_trace_csv(std::istream& in) {
    RunTrace trace;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trace CSV: empty input");
    if (line.rfind("iteration,", 0) != 0)
        throw std::runtime_error("trace CSV: unexpected header '" + line + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TraceRecord r;
        int n_flipped = 0, accepted = 0;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf,%d,%d", &r.iteration, &r.f_ts, &r.f_best,
                        &n_flipped, &accepted) != 5)
            throw std::runtime_error("trace CSV: malformed row '" + line + "'");
        // flip indices are not part of the schema; only the count survives
        r.flipped.assign(static_cast<std::size_t>(n_flipped), -1);
        r.sampler_accepted = accepted != 0;
        trace.records.push_back(std::move(r));
    }
    return trace;
}

}  // namespace tabuq
