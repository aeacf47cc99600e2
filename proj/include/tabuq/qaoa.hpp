// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tabuq/qubo.hpp"

namespace tabuq {

using Amplitude = std::complex<double>;

/// Largest subproblem the dense simulator accepts (2^24 amplitudes).
inline constexpr int kMaxQaoaQubits = 24;

/// Diagonal phase layer biasing the state towards (or away from) bitstrings
/// near a reference solution, weighted by per-variable flip gains:
/// diag(b) = -scale/2 * sum_j weights[j] * (-1)^{reference_j} * s_j(b),
/// with s_j(b) = +1 when bit j of b is 0.
struct PenaltySpec {
    std::vector<double> weights;   // one per subproblem variable
    BitString reference;           // x_ts restricted to the subproblem
    double scale = 1.0;            // A >= 0
};

struct QaoaParams {
    int p = 1;
    std::vector<double> gammas;    // radians, one per layer
    std::vector<double> betas;     // radians, one per layer
    std::optional<PenaltySpec> penalty;
    int shots = 1000;
};

/// Dense statevector over 2^k basis states; bit j of the index is
/// subproblem variable j (ascending parent order). `energies` is the
/// diagonal of the cost Hamiltonian including the subproblem offset.
struct QaoaState {
    std::vector<Amplitude> amplitudes;
    std::vector<double> energies;

    int num_qubits() const;
    double norm_squared() const;
};

/// energies[b] = sub.reduced.evaluate(bits(b)) for every index b.
std::vector<double> diagonal_energies(const SubProblem& sub);

/// The penalty layer's diagonal over all 2^k indices.
std::vector<double> penalty_diagonal(const PenaltySpec& spec);

/// amps[b] *= exp(-i * angle * diag[b]).
void apply_phase(std::vector<Amplitude>& amps, std::span<const double> diag, double angle);

/// Independent exp(-i * beta * sigma_x) on every qubit.
void apply_mixer(std::vector<Amplitude>& amps, double beta);

/// One QAOA layer: cost phase, optional penalty phase (same gamma), mixer.
void apply_layer(QaoaState& state, double gamma, double beta, const PenaltySpec* penalty);

/// p-layer QAOA state from the uniform superposition.
QaoaState evolve(const SubProblem& sub, const QaoaParams& params);

/// Energy expectation against the unpenalized diagonal.
double exact_expectation(const QaoaState& state);

/// Variance of the energy under the measurement distribution.
double energy_variance(const QaoaState& state);

struct Shot {
    BitString bits;
    double energy;
};

/// m independent draws from the |amplitude|^2 distribution.
std::vector<Shot> sample(const QaoaState& state, int m, std::mt19937_64& rng);

/// Mean energy over m draws; the shot-noise objective used for angle
/// optimization.
double shot_expectation(const QaoaState& state, int m, std::mt19937_64& rng);

BitString index_to_bits(std::size_t index, int k);
std::size_t bits_to_index(const BitString& bits);

/// Debug dump: CSV of (index, re, im, energy); guarded to k <= 10.
void dump_state_csv(std::ostream& out, const QaoaState& state);

}  // namespace tabuq
