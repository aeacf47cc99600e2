// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/samplers.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tabuq {

BitString brute_force_best(const SubProblem& sub) {
    const int k = sub.k();
    if (k > kMaxQaoaQubits)
        throw std::invalid_argument("brute_force_best: k=" + std::to_string(k) + " too large");
    // Gray-code walk: each step flips exactly one bit and updates the move
    // table, so the full scan costs O(2^k * deg) instead of O(2^k * k^2).
    BitString x(static_cast<std::size_t>(k), 0);
    MoveTable table = init_move_table(sub.reduced, x);
    double energy = sub.reduced.evaluate(x);

    std::size_t best_index = 0;
    double best_energy = energy;
    std::size_t gray = 0;
    const std::size_t count = std::size_t{1} << k;
    for (std::size_t step = 1; step < count; ++step) {
        const int bit = std::countr_zero(step);   // standard reflected Gray order
        energy += table.delta[static_cast<std::size_t>(bit)];
        apply_flip(sub.reduced, x, table, bit);
        gray ^= std::size_t{1} << bit;
        if (energy < best_energy || (energy == best_energy && gray < best_index)) {
            best_energy = energy;
            best_index = gray;
        }
    }
    return index_to_bits(best_index, k);
}

std::vector<Shot> sa_chain_bests(const SubProblem& sub, const SaConfig& cfg,
                                 std::mt19937_64& rng) {
    if (cfg.temperature <= 0.0 || cfg.steps <= 0 || cfg.restarts <= 0)
        throw std::invalid_argument("sa_best: temperature, steps and restarts must be positive");
    const int k = sub.k();
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<Shot> bests;
    bests.reserve(static_cast<std::size_t>(cfg.restarts));
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        BitString x(static_cast<std::size_t>(k));
        for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1u);
        MoveTable table = init_move_table(sub.reduced, x);
        double energy = sub.reduced.evaluate(x);
        BitString best = x;
        double best_energy = energy;
        for (int step = 0; step < cfg.steps; ++step) {
            const int bit = step % k;
            const double delta = table.delta[static_cast<std::size_t>(bit)];
            bool accept = delta <= 0.0;
            if (!accept) accept = unif(rng) < std::exp(-delta / cfg.temperature);
            if (!accept) continue;
            energy += delta;
            apply_flip(sub.reduced, x, table, bit);
            if (energy < best_energy) {
                best_energy = energy;
                best = x;
            }
        }
        bests.push_back({std::move(best), best_energy});
    }
    return bests;
}

BitString sa_best(const SubProblem& sub, const SaConfig& cfg, std::mt19937_64& rng) {
    const auto bests = sa_chain_bests(sub, cfg, rng);
    std::size_t winner = 0;
    for (std::size_t r = 1; r < bests.size(); ++r)
        if (bests[r].energy < bests[winner].energy) winner = r;
    return bests[winner].bits;
}

OptimizedQaoa optimize_qaoa_state(const SubProblem& sub, const QaoaSamplerConfig& cfg,
                                  const SamplerContext& ctx, std::mt19937_64& rng) {
    const int k = sub.k();

    QaoaParams params;
    params.p = cfg.p;
    params.shots = cfg.shots;
    if (cfg.penalized) {
        if (static_cast<int>(ctx.move_values.size()) != k ||
            static_cast<int>(ctx.reference.size()) != k)
            throw std::invalid_argument("qaoa sampler: penalty context does not match k");
        PenaltySpec pen;
        pen.weights.assign(ctx.move_values.begin(), ctx.move_values.end());
        pen.reference = ctx.reference;
        pen.scale = cfg.penalty_scale;
        params.penalty = std::move(pen);
    }

    OptimizedQaoa out;
    out.history_best_energy = std::numeric_limits<double>::infinity();

    const Objective objective = [&](const std::vector<double>& angles) {
        params.gammas.assign(angles.begin(), angles.begin() + cfg.p);
        params.betas.assign(angles.begin() + cfg.p, angles.end());
        const QaoaState state = evolve(sub, params);
        const auto shots = sample(state, cfg.shots, rng);
        double mean = 0.0;
        for (const auto& s : shots) {
            mean += s.energy;
            if (s.energy < out.history_best_energy) {
                out.history_best_energy = s.energy;
                out.history_best_index = bits_to_index(s.bits);
            }
        }
        return mean / static_cast<double>(shots.size());
    };

    out.opt = optimize_angles(objective, cfg.p, cfg.budget);
    params.gammas.assign(out.opt.best_angles.begin(), out.opt.best_angles.begin() + cfg.p);
    params.betas.assign(out.opt.best_angles.begin() + cfg.p, out.opt.best_angles.end());
    out.state = evolve(sub, params);
    return out;
}

BitString qaoa_best(const SubProblem& sub, const QaoaSamplerConfig& cfg, const SamplerContext& ctx,
                    std::mt19937_64& rng) {
    if (cfg.m < 1) throw std::invalid_argument("qaoa_best: m must be >= 1");
    const OptimizedQaoa opt = optimize_qaoa_state(sub, cfg, ctx, rng);

    std::size_t best = 0;
    double best_energy = std::numeric_limits<double>::infinity();
    for (const auto& s : sample(opt.state, cfg.m, rng)) {
        const std::size_t b = bits_to_index(s.bits);
        if (s.energy < best_energy || (s.energy == best_energy && b < best)) {
            best_energy = s.energy;
            best = b;
        }
    }
    if (cfg.use_optimizer_history && opt.history_best_energy < best_energy) {
        best = opt.history_best_index;
        best_energy = opt.history_best_energy;
    }
    return index_to_bits(best, sub.k());
}

double improvement_probability(const QaoaState& state, double f_ref) {
    double p = 0.0;
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b)
        if (state.energies[b] < f_ref) p += std::norm(state.amplitudes[b]);
    return p;
}

}  // namespace tabuq
