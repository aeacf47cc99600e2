// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tabuq/angle_opt.hpp"
#include "tabuq/qaoa.hpp"
#include "tabuq/qubo.hpp"

namespace tabuq {

/// Search-state context handed to samplers: the parent move values and the
/// current tabu solution, both restricted to the selected variables, taken
/// before any flip this iteration.
struct SamplerContext {
    std::span<const double> move_values;
    BitString reference;
};

/// Neighborhood sampler contract: return a k-variable candidate for the
/// subproblem. Implementations own their RNG stream, so a fresh instance
/// with the same seed reproduces the same call sequence exactly.
class NeighborhoodSampler {
public:
    virtual ~NeighborhoodSampler() = default;
    virtual BitString sample_best(const SubProblem& sub, const SamplerContext& ctx) = 0;
};

/// Minimizer over all 2^k assignments, ties broken by lowest index.
BitString brute_force_best(const SubProblem& sub);

struct SaConfig {
    double temperature = 17.5;
    int steps = 100;
    int restarts = 1;
};

/// Best state visited by fixed-temperature single-flip Metropolis chains,
/// one chain per restart, each from a uniform random start. Step t of a
/// chain proposes bit (t mod k).
BitString sa_best(const SubProblem& sub, const SaConfig& cfg, std::mt19937_64& rng);

/// Best state visited by each restart's chain, in restart order.
std::vector<Shot> sa_chain_bests(const SubProblem& sub, const SaConfig& cfg,
                                 std::mt19937_64& rng);

struct QaoaSamplerConfig {
    int p = 1;
    bool penalized = false;
    double penalty_scale = 1.0;        // A
    int m = 10;                        // samples drawn from the final state
    bool use_optimizer_history = false;
    OptBudget budget;
    int shots = 1000;                  // per objective evaluation
};

/// Optimizes the 2p angles against the shot-based expectation, then draws m
/// samples from the optimized state and returns the lowest-energy one (by
/// the exact diagonal). With use_optimizer_history, every bitstring sampled
/// during optimization competes as well.
BitString qaoa_best(const SubProblem& sub, const QaoaSamplerConfig& cfg, const SamplerContext& ctx,
                    std::mt19937_64& rng);

struct OptimizedQaoa {
    QaoaState state;               // evolved at the best angles found
    OptResult opt;
    std::size_t history_best_index = 0;
    double history_best_energy = 0.0;   // +inf when nothing was sampled
};

/// The angle-optimization phase of qaoa_best, exposed for analyses that need
/// the optimized state itself rather than one candidate.
OptimizedQaoa optimize_qaoa_state(const SubProblem& sub, const QaoaSamplerConfig& cfg,
                                  const SamplerContext& ctx, std::mt19937_64& rng);

/// Probability mass on outcomes strictly below f_ref.
double improvement_probability(const QaoaState& state, double f_ref);

class BruteForceSampler : public NeighborhoodSampler {
public:
    BitString sample_best(const SubProblem& sub, const SamplerContext&) override {
        return brute_force_best(sub);
    }
};

class SaSampler : public NeighborhoodSampler {
public:
    SaSampler(SaConfig cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}
    BitString sample_best(const SubProblem& sub, const SamplerContext&) override {
        return sa_best(sub, cfg_, rng_);
    }

private:
    SaConfig cfg_;
    std::mt19937_64 rng_;
};

class QaoaSampler : public NeighborhoodSampler {
public:
    QaoaSampler(QaoaSamplerConfig cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}
    BitString sample_best(const SubProblem& sub, const SamplerContext& ctx) override {
        return qaoa_best(sub, cfg_, ctx, rng_);
    }
    const QaoaSamplerConfig& config() const { return cfg_; }

private:
    QaoaSamplerConfig cfg_;
    std::mt19937_64 rng_;
};

}  // namespace tabuq
