// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tabuq {

namespace {

void check_qubit_count(int k) {
    if (k < 1) throw std::invalid_argument("statevector: need at least one qubit");
    if (k > kMaxQaoaQubits)
        throw std::invalid_argument("statevector: k=" + std::to_string(k) + " exceeds the " +
                                    std::to_string(kMaxQaoaQubits) + "-qubit guard");
}

}  // namespace

int QaoaState::num_qubits() const {
    int k = 0;
    while ((std::size_t{1} << k) < amplitudes.size()) ++k;
    return k;
}

double QaoaState::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

std::vector<double> diagonal_energies(const SubProblem& sub) {
    const int k = sub.k();
    check_qubit_count(k);
    const Qubo& q = sub.reduced;
    const std::size_t size = std::size_t{1} << k;
    // Build by doubling: energies over the first t variables extend to t+1
    // by adding the cost of setting variable t against each prefix.
    std::vector<double> e(size, 0.0);
    e[0] = q.offset();
    for (int t = 0; t < k; ++t) {
        const std::size_t half = std::size_t{1} << t;
        const double diag = q.diagonal(t);
        for (std::size_t b = 0; b < half; ++b) {
            double add = diag;
            for (const auto& nb : q.neighbors(t)) {
                if (nb.index >= t) break;   // sorted; higher variables not set yet
                if ((b >> nb.index) & 1u) add += nb.value;
            }
            e[b | half] = e[b] + add;
        }
    }
    return e;
}

std::vector<double> penalty_diagonal(const PenaltySpec& spec) {
    const int k = static_cast<int>(spec.weights.size());
    check_qubit_count(k);
    if (spec.reference.size() != spec.weights.size())
        throw std::invalid_argument("penalty_diagonal: reference length mismatch");
    const std::size_t size = std::size_t{1} << k;
    // signed[j] = -scale/2 * w_j * (-1)^{ref_j}; entry(b) = sum_j signed[j]*s_j(b)
    std::vector<double> signed_w(spec.weights.size());
    for (std::size_t j = 0; j < spec.weights.size(); ++j) {
        const double sign = spec.reference[j] ? -1.0 : 1.0;
        signed_w[j] = -0.5 * spec.scale * spec.weights[j] * sign;
    }
    std::vector<double> d(size, 0.0);
    double base = 0.0;
    for (double w : signed_w) base += w;   // all spins +1 at b = 0
    d[0] = base;
    for (int t = 0; t < k; ++t) {
        const std::size_t half = std::size_t{1} << t;
        for (std::size_t b = 0; b < half; ++b) d[b | half] = d[b] - 2.0 * signed_w[static_cast<std::size_t>(t)];
    }
    return d;
}

void apply_phase(std::vector<Amplitude>& amps, std::span<const double> diag, double angle) {
    if (amps.size() != diag.size())
        throw std::invalid_argument("apply_phase: diagonal size mismatch");
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const double phi = -angle * diag[b];
        amps[b] *= Amplitude(std::cos(phi), std::sin(phi));
    }
}

void apply_mixer(std::vector<Amplitude>& amps, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const Amplitude off(0.0, -s);   // exp(-i beta sigma_x) = cos(beta) I - i sin(beta) sigma_x
    const std::size_t size = amps.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t lo = 0; lo < size; ++lo) {
            if (lo & bit) continue;
            const std::size_t hi = lo | bit;
            const Amplitude a0 = amps[lo];
            const Amplitude a1 = amps[hi];
            amps[lo] = c * a0 + off * a1;
            amps[hi] = off * a0 + c * a1;
        }
    }
}

void apply_layer(QaoaState& state, double gamma, double beta, const PenaltySpec* penalty) {
    apply_phase(state.amplitudes, state.energies, gamma);
    if (penalty != nullptr) {
        const auto pdiag = penalty_diagonal(*penalty);
        apply_phase(state.amplitudes, pdiag, gamma);
    }
    apply_mixer(state.amplitudes, beta);
}

QaoaState evolve(const SubProblem& sub, const QaoaParams& params) {
    const int k = sub.k();
    check_qubit_count(k);
    if (params.p < 1) throw std::invalid_argument("evolve: depth must be >= 1");
    if (static_cast<int>(params.gammas.size()) != params.p ||
        static_cast<int>(params.betas.size()) != params.p)
        throw std::invalid_argument("evolve: expected " + std::to_string(params.p) +
                                    " gammas and betas");
    if (params.penalty && static_cast<int>(params.penalty->weights.size()) != k)
        throw std::invalid_argument("evolve: penalty weight count != k");

    QaoaState state;
    state.energies = diagonal_energies(sub);
    const std::size_t size = std::size_t{1} << k;
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(size));
    state.amplitudes.assign(size, Amplitude(amp0, 0.0));
    const PenaltySpec* pen = params.penalty ? &*params.penalty : nullptr;
    for (int layer = 0; layer < params.p; ++layer)
        apply_layer(state, params.gammas[static_cast<std::size_t>(layer)],
                    params.betas[static_cast<std::size_t>(layer)], pen);
    return state;
}

double exact_expectation(const QaoaState& state) {
    double e = 0.0;
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b)
        e += std::norm(state.amplitudes[b]) * state.energies[b];
    return e;
}

double energy_variance(const QaoaState& state) {
    const double mean = exact_expectation(state);
    double v = 0.0;
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
        const double d = state.energies[b] - mean;
        v += std::norm(state.amplitudes[b]) * d * d;
    }
    return v;
}

namespace {

std::vector<double> cumulative_probabilities(const QaoaState& state) {
    std::vector<double> cdf(state.amplitudes.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
        acc += std::norm(state.amplitudes[b]);
        cdf[b] = acc;
    }
    cdf.back() = std::max(cdf.back(), 1.0);   // absorb rounding in the tail
    return cdf;
}

}  // namespace

std::vector<Shot> sample(const QaoaState& state, int m, std::mt19937_64& rng) {
    if (m < 1) throw std::invalid_argument("sample: need m >= 1");
    const int k = state.num_qubits();
    const auto cdf = cumulative_probabilities(state);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Shot> shots;
    shots.reserve(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) {
        const double u = unif(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t b = std::min(static_cast<std::size_t>(it - cdf.begin()),
                                       state.amplitudes.size() - 1);
        shots.push_back({index_to_bits(b, k), state.energies[b]});
    }
    return shots;
}

double shot_expectation(const QaoaState& state, int m, std::mt19937_64& rng) {
    const auto shots = sample(state, m, rng);
    double s = 0.0;
    for (const auto& shot : shots) s += shot.energy;
    return s / static_cast<double>(shots.size());
}

BitString index_to_bits(std::size_t index, int k) {
    BitString bits(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) bits[static_cast<std::size_t>(j)] = (index >> j) & 1u;
    return bits;
}

std::size_t bits_to_index(const BitString& bits) {
    std::size_t b = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) b |= std::size_t{1} << j;
    return b;
}

void dump_state_csv(std::ostream& out, const QaoaState& state) {
    if (state.num_qubits() > 10)
        throw std::invalid_argument("dump_state_csv: guarded to k <= 10");
    out << "index,re,im,energy\n";
    char buf[128];
    for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", b, state.amplitudes[b].real(),
                      state.amplitudes[b].imag(), state.energies[b]);
        out << buf;
    }
}

}  // namespace tabuq
