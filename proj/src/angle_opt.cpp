// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/angle_opt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "tabuq/samplers.hpp"

namespace tabuq {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kPi = 3.141592653589793;

struct Individual {
    std::vector<double> theta;
    std::vector<double> sigma;
    double value = 0.0;
};

std::vector<double> wrap_angles(std::vector<double> angles, int p) {
    for (int c = 0; c < 2 * p; ++c) {
        const double period = c < p ? kTwoPi : kPi;
        double v = std::fmod(angles[static_cast<std::size_t>(c)], period);
        if (v < 0.0) v += period;
        angles[static_cast<std::size_t>(c)] = v;
    }
    return angles;
}

std::string angles_to_string(const std::vector<double>& angles) {
    std::string s = "[";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", angles[i]);
        s += buf;
        if (i + 1 < angles.size()) s += ", ";
    }
    return s + "]";
}

}  // namespace

OptResult optimize_angles(const Objective& objective, int p, const OptBudget& budget) {
    if (p < 1) throw std::invalid_argument("optimize_angles: p must be >= 1");
    if (budget.max_evals < 1) throw std::invalid_argument("optimize_angles: max_evals must be >= 1");

    const int d = 2 * p;
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const double tau_global = 1.0 / std::sqrt(2.0 * d);
    const double tau_coord = 1.0 / std::sqrt(2.0 * std::sqrt(static_cast<double>(d)));

    auto coord_range = [&](int c) {
        return c < p ? budget.gamma_high - budget.gamma_low : budget.beta_high - budget.beta_low;
    };
    auto coord_low = [&](int c) { return c < p ? budget.gamma_low : budget.beta_low; };

    OptResult result;
    result.history.reserve(static_cast<std::size_t>(budget.max_evals));
    result.best_value = std::numeric_limits<double>::infinity();

    auto evaluate = [&](std::vector<double> theta) -> double {
        theta = wrap_angles(std::move(theta), p);
        const double v = objective(theta);
        if (!std::isfinite(v))
            throw std::runtime_error("optimize_angles: objective returned non-finite value at " +
                                     angles_to_string(theta));
        result.history.push_back({theta, v});
        ++result.evals_used;
        if (v < result.best_value) {
            result.best_value = v;
            result.best_angles = std::move(theta);
        }
        return v;
    };

    int lambda = 4 + static_cast<int>(std::floor(3.0 * std::log(static_cast<double>(d))));
    lambda = std::max(lambda, 4);
    bool first_restart = true;

    while (result.evals_used < budget.max_evals) {
        const int mu = std::max(1, lambda / 2);
        const int stall_limit = 10 + d;

        std::vector<Individual> parents;
        double run_best = std::numeric_limits<double>::infinity();
        int stall = 0;
        bool out_of_budget = false;

        for (int generation = 0; !out_of_budget; ++generation) {
            std::vector<Individual> offspring;
            offspring.reserve(static_cast<std::size_t>(lambda));
            for (int l = 0; l < lambda; ++l) {
                if (result.evals_used >= budget.max_evals) {
                    out_of_budget = true;
                    break;
                }
                Individual child;
                child.theta.resize(static_cast<std::size_t>(d));
                child.sigma.resize(static_cast<std::size_t>(d));
                if (first_restart && generation == 0 && l == 0) {
                    // the uniform-state angles are always tried first
                    std::fill(child.theta.begin(), child.theta.end(), 0.0);
                    for (int c = 0; c < d; ++c)
                        child.sigma[static_cast<std::size_t>(c)] = coord_range(c) / 4.0;
                } else if (parents.empty()) {
                    for (int c = 0; c < d; ++c) {
                        child.theta[static_cast<std::size_t>(c)] =
                            coord_low(c) + unif(rng) * coord_range(c);
                        child.sigma[static_cast<std::size_t>(c)] = coord_range(c) / 4.0;
                    }
                } else {
                    const auto& parent =
                        parents[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(parents.size()))];
                    const double g_global = gauss(rng);
                    for (int c = 0; c < d; ++c) {
                        double s = parent.sigma[static_cast<std::size_t>(c)] *
                                   std::exp(tau_global * g_global + tau_coord * gauss(rng));
                        s = std::clamp(s, 1e-8, coord_range(c));
                        child.sigma[static_cast<std::size_t>(c)] = s;
                        child.theta[static_cast<std::size_t>(c)] =
                            parent.theta[static_cast<std::size_t>(c)] + s * gauss(rng);
                    }
                }
                child.value = evaluate(child.theta);
                offspring.push_back(std::move(child));
            }
            if (offspring.empty()) break;

            std::sort(offspring.begin(), offspring.end(),
                      [](const Individual& a, const Individual& b) { return a.value < b.value; });
            if (offspring.front().value < run_best) {
                run_best = offspring.front().value;
                stall = 0;
            } else {
                ++stall;
            }
            const int take = std::min<int>(mu, static_cast<int>(offspring.size()));
            parents.assign(offspring.begin(), offspring.begin() + take);

            if (budget.restarts == RestartStrategy::doubling_population && stall >= stall_limit)
                break;
        }

        first_restart = false;
        if (budget.restarts == RestartStrategy::doubling_population) lambda *= 2;
    }

    return result;
}

void write_history_csv(std::ostream& out, const OptResult& result) {
    if (result.history.empty()) return;
    const std::size_t d = result.history.front().angles.size();
    out << "eval";
    for (std::size_t c = 0; c < d / 2; ++c) out << ",gamma" << (c + 1);
    for (std::size_t c = 0; c < d / 2; ++c) out << ",beta" << (c + 1);
    out << ",value\n";
    char buf[64];
    for (std::size_t e = 0; e < result.history.size(); ++e) {
        out << (e + 1);
        for (double a : result.history[e].angles) {
            std::snprintf(buf, sizeof buf, ",%.17g", a);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g\n", result.history[e].value);
        out << buf;
    }
}

double subproblem_quality_ratio(const SubProblem& sub, double sampler_best) {
    // Shift both values by |optimum| plus the spectrum range so the shifted
    // optimum stays strictly positive, then divide:
    //   ratio = (opt + shift) / (value + shift),  shift = |opt| + (worst - opt).
    // This is 1.0 exactly at the optimum, stays in (0, 1], and decreases
    // monotonically as the sampled value degrades.
    const BitString best = brute_force_best(sub);
    const double opt = sub.reduced.evaluate(best);
    // spectrum maximum via the minimizer of the negated subproblem
    std::vector<QuboTerm> neg;
    neg.reserve(sub.reduced.terms().size());
    for (const auto& t : sub.reduced.terms()) neg.push_back({t.i, t.j, -t.value});
    SubProblem negated{sub.parent_indices,
                       Qubo(sub.k(), std::move(neg), -sub.reduced.offset(), sub.reduced.sense()),
                       sub.base};
    const double worst = -negated.reduced.evaluate(brute_force_best(negated));
    const double range = worst - opt;
    if (range == 0.0) return 1.0;   // degenerate all-equal spectrum
    const double shift = std::abs(opt) + range;
    return (opt + shift) / (sampler_best + shift);
}

}  // namespace tabuq
