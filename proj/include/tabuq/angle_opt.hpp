// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tabuq/qubo.hpp"

namespace tabuq {

enum class RestartStrategy { none, doubling_population };

struct OptBudget {
    int max_evals = 2000;
    RestartStrategy restarts = RestartStrategy::doubling_population;
    std::uint64_t seed = 0;
    // Initial sampling box per angle kind; angles wrap by periodicity
    // (gamma mod 2pi, beta mod pi) before every evaluation.
    double gamma_low = 0.0, gamma_high = 6.283185307179586;
    double beta_low = 0.0, beta_high = 3.141592653589793;
};

struct Evaluation {
    std::vector<double> angles;   // gamma_1..gamma_p, beta_1..beta_p
    double value = 0.0;
};

struct OptResult {
    std::vector<double> best_angles;
    double best_value = 0.0;
    int evals_used = 0;
    std::vector<Evaluation> history;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Budgeted derivative-free search over the 2p angles: a (mu, lambda)
/// evolution strategy with per-coordinate log-normal step-size
/// self-adaptation and doubling-population restarts. The all-zero angle
/// vector is always the first point evaluated, so the uniform state is a
/// floor on the result. Deterministic given the seed; the objective is
/// invoked strictly sequentially.
OptResult optimize_angles(const Objective& objective, int p, const OptBudget& budget);

/// Optional history dump: CSV of (eval, angles..., value).
void write_history_csv(std::ostream& out, const OptResult& result);

/// Normalized solution quality in (0, 1], 1.0 meaning the subproblem optimum
/// was reached. Both values are shifted positive before dividing; degenerate
/// all-equal spectra define the ratio as 1.0. Requires k <= 24 (brute force).
double subproblem_quality_ratio(const SubProblem& sub, double sampler_best);

}  // namespace tabuq
