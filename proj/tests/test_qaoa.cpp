// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "support/test_util.hpp"
#include "tabuq/qaoa.hpp"

using namespace tabuq;
using namespace tabuq::testutil;

namespace {

SubProblem whole_problem(const Qubo& q) {
    std::vector<int> all(static_cast<std::size_t>(q.num_vars()));
    for (int i = 0; i < q.num_vars(); ++i) all[static_cast<std::size_t>(i)] = i;
    return clamp(q, BitString(static_cast<std::size_t>(q.num_vars()), 0), all);
}

// 2x2 single-qubit oracle: multiply the explicit unitaries onto |+>.
std::array<Amplitude, 2> single_qubit_oracle(double c, double gamma, double beta) {
    std::array<Amplitude, 2> psi{Amplitude(1.0 / std::sqrt(2.0), 0.0),
                                 Amplitude(1.0 / std::sqrt(2.0), 0.0)};
    // phase exp(-i gamma diag(0, c))
    psi[1] *= std::exp(Amplitude(0.0, -gamma * c));
    // mixer exp(-i beta sigma_x)
    const Amplitude cb(std::cos(beta), 0.0);
    const Amplitude sb(0.0, -std::sin(beta));
    return {cb * psi[0] + sb * psi[1], sb * psi[0] + cb * psi[1]};
}

}  // namespace

TEST_CASE("diagonal energies of a single linear term") {
    const SubProblem sub = whole_problem(Qubo(1, {{0, 0, 2.5}}));
    const auto e = diagonal_energies(sub);
    CHECK(e == std::vector<double>{0.0, 2.5});
}

TEST_CASE("diagonal energies of the zero qubo are the offset") {
    const SubProblem sub = whole_problem(Qubo(3, {}, 4.0));
    for (double v : diagonal_energies(sub)) CHECK(v == 4.0);
}

TEST_CASE("diagonal energies match direct evaluation exhaustively") {
    std::mt19937_64 rng(17);
    SUBCASE("integer coefficients are exact") {
        for (int trial = 0; trial < 20; ++trial) {
            const SubProblem sub = random_subproblem(9, 4, rng, 0.8, true);
            const auto e = diagonal_energies(sub);
            for (std::size_t b = 0; b < 16; ++b)
                REQUIRE(e[b] == oracle_evaluate(sub.reduced, index_to_bits(b, 4)));
        }
    }
    SUBCASE("real coefficients to 1e-12") {
        for (int trial = 0; trial < 20; ++trial) {
            const SubProblem sub = random_subproblem(10, 6, rng, 0.8, false);
            const auto e = diagonal_energies(sub);
            for (std::size_t b = 0; b < 64; ++b)
                REQUIRE(close(e[b], oracle_evaluate(sub.reduced, index_to_bits(b, 6)), 1e-12));
        }
    }
}

TEST_CASE("qubit guard rejects oversized subproblems") {
    std::vector<int> sel(25);
    for (int i = 0; i < 25; ++i) sel[static_cast<std::size_t>(i)] = i;
    const SubProblem sub = clamp(Qubo(25), BitString(25, 0), sel);
    CHECK_THROWS_AS(diagonal_energies(sub), std::invalid_argument);
}

TEST_CASE("penalty diagonal with zero scale vanishes") {
    PenaltySpec spec;
    spec.weights = {1.0, -2.0, 3.0};
    spec.reference = {0, 1, 0};
    spec.scale = 0.0;
    for (double v : penalty_diagonal(spec)) CHECK(v == 0.0);
}

TEST_CASE("single-variable penalty costs exactly the move value") {
    const double delta = 1.75;
    PenaltySpec spec;
    spec.weights = {delta};
    spec.reference = {0};
    spec.scale = 1.0;
    const auto d = penalty_diagonal(spec);
    CHECK(d[0] == -delta / 2.0);
    CHECK(d[1] == delta / 2.0);
    CHECK(d[1] - d[0] == delta);
}

TEST_CASE("penalty difference identity: flipping j costs A*w_j") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        PenaltySpec spec;
        spec.scale = 0.25 + std::abs(coeff(rng));
        spec.reference = random_bits(k, rng);
        for (int j = 0; j < k; ++j) spec.weights.push_back(coeff(rng));
        const auto d = penalty_diagonal(spec);
        const std::size_t ref = bits_to_index(spec.reference);
        for (std::size_t b = 0; b < d.size(); ++b) {
            double expected = 0.0;
            for (int j = 0; j < k; ++j)
                if (((b >> j) & 1u) != ((ref >> j) & 1u))
                    expected += spec.scale * spec.weights[static_cast<std::size_t>(j)];
            REQUIRE(std::abs((d[b] - d[ref]) - expected) < 1e-12);
        }
    }
}

TEST_CASE("uniform penalty weights reproduce scaled Hamming distance") {
    PenaltySpec spec;
    spec.weights = {1.0, 1.0, 1.0, 1.0};
    spec.reference = {1, 0, 1, 1};
    spec.scale = 2.5;
    const auto d = penalty_diagonal(spec);
    const std::size_t ref = bits_to_index(spec.reference);
    for (std::size_t b = 0; b < d.size(); ++b) {
        const int dist = hamming_distance(index_to_bits(b, 4), spec.reference);
        REQUIRE(d[b] - d[ref] == spec.scale * static_cast<double>(dist));
    }
}

TEST_CASE("zero angles leave the uniform distribution") {
    std::mt19937_64 rng(8);
    const SubProblem sub = random_subproblem(8, 3, rng);
    QaoaParams params;
    params.p = 2;
    params.gammas = {0.0, 0.0};
    params.betas = {0.0, 0.0};
    const QaoaState state = evolve(sub, params);
    for (const auto& a : state.amplitudes)
        REQUIRE(std::abs(std::norm(a) - 1.0 / 8.0) < 1e-14);
}

TEST_CASE("single-qubit depth-1 state matches the 2x2 oracle and closed form") {
    const double c = -1.3;
    const SubProblem sub = whole_problem(Qubo(1, {{0, 0, c}}));
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(0.0, 3.1);
    for (int trial = 0; trial < 40; ++trial) {
        const double gamma = angle(rng);
        const double beta = angle(rng);
        QaoaParams params;
        params.p = 1;
        params.gammas = {gamma};
        params.betas = {beta};
        const QaoaState state = evolve(sub, params);
        const auto oracle = single_qubit_oracle(c, gamma, beta);
        for (int b = 0; b < 2; ++b)
            REQUIRE(std::abs(std::norm(state.amplitudes[static_cast<std::size_t>(b)]) -
                             std::norm(oracle[static_cast<std::size_t>(b)])) < 1e-10);
        // <sigma_z> = P(0) - P(1) = -sin(2 beta) sin(gamma c)
        const double sz = std::norm(state.amplitudes[0]) - std::norm(state.amplitudes[1]);
        REQUIRE(std::abs(sz - (-std::sin(2.0 * beta) * std::sin(gamma * c))) < 1e-10);
        // <E> = c/2 + (c/2) sin(2 beta) sin(gamma c)
        const double expected_e = c / 2.0 + (c / 2.0) * std::sin(2.0 * beta) * std::sin(gamma * c);
        REQUIRE(std::abs(exact_expectation(state) - expected_e) < 1e-10);
    }
}

TEST_CASE("penalty with zero scale leaves amplitudes unchanged") {
    std::mt19937_64 rng(12);
    const SubProblem sub = random_subproblem(9, 4, rng);
    QaoaParams params;
    params.p = 2;
    params.gammas = {0.7, 0.3};
    params.betas = {0.4, 0.9};
    const QaoaState plain = evolve(sub, params);
    PenaltySpec pen;
    pen.weights = {0.5, -1.0, 2.0, 0.25};
    pen.reference = {1, 0, 0, 1};
    pen.scale = 0.0;
    params.penalty = pen;
    const QaoaState penalized = evolve(sub, params);
    for (std::size_t b = 0; b < plain.amplitudes.size(); ++b)
        REQUIRE(std::abs(plain.amplitudes[b] - penalized.amplitudes[b]) < 1e-12);
}

TEST_CASE("normalization holds for random evolutions") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 9);
        const SubProblem sub = random_subproblem(k + 3, k, rng);
        QaoaParams params;
        params.p = 1 + static_cast<int>(rng() % 4);
        for (int layer = 0; layer < params.p; ++layer) {
            params.gammas.push_back(angle(rng));
            params.betas.push_back(angle(rng));
        }
        if (rng() % 2 == 0) {
            PenaltySpec pen;
            pen.reference = random_bits(k, rng);
            for (int j = 0; j < k; ++j) pen.weights.push_back(angle(rng));
            pen.scale = 1.0;
            params.penalty = pen;
        }
        const QaoaState state = evolve(sub, params);
        REQUIRE(std::abs(state.norm_squared() - 1.0) < 1e-10);
    }
}

TEST_CASE("diagonal layers commute") {
    std::mt19937_64 rng(61);
    const SubProblem sub = random_subproblem(8, 5, rng);
    const auto energies = diagonal_energies(sub);
    PenaltySpec pen;
    pen.reference = random_bits(5, rng);
    pen.weights = {0.3, -0.7, 1.1, 0.0, 2.0};
    pen.scale = 1.5;
    const auto pdiag = penalty_diagonal(pen);

    std::vector<Amplitude> a(32), b(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < 32; ++i) a[i] = b[i] = Amplitude(u(rng), u(rng));
    apply_phase(a, energies, 0.8);
    apply_phase(a, pdiag, 0.8);
    apply_phase(b, pdiag, 0.8);
    apply_phase(b, energies, 0.8);
    for (std::size_t i = 0; i < 32; ++i) REQUIRE(std::abs(a[i] - b[i]) < 1e-12);
}

TEST_CASE("p layers equal p successive single-layer applications") {
    std::mt19937_64 rng(71);
    const SubProblem sub = random_subproblem(9, 4, rng);
    QaoaParams params;
    params.p = 3;
    params.gammas = {0.2, 0.5, 0.9};
    params.betas = {0.8, 0.1, 0.3};
    const QaoaState direct = evolve(sub, params);

    QaoaState manual;
    manual.energies = diagonal_energies(sub);
    manual.amplitudes.assign(16, Amplitude(0.25, 0.0));
    for (int layer = 0; layer < 3; ++layer)
        apply_layer(manual, params.gammas[static_cast<std::size_t>(layer)],
                    params.betas[static_cast<std::size_t>(layer)], nullptr);
    for (std::size_t b = 0; b < 16; ++b)
        REQUIRE(std::abs(direct.amplitudes[b] - manual.amplitudes[b]) < 1e-12);
}

TEST_CASE("exact expectation of the uniform state is the mean energy") {
    std::mt19937_64 rng(81);
    const SubProblem sub = random_subproblem(9, 4, rng);
    QaoaParams params;
    params.p = 1;
    params.gammas = {0.0};
    params.betas = {0.0};
    const QaoaState state = evolve(sub, params);
    double mean = 0.0;
    for (double e : state.energies) mean += e;
    mean /= static_cast<double>(state.energies.size());
    CHECK(close(exact_expectation(state), mean, 1e-12));
}

TEST_CASE("exact expectation of a basis state is its energy") {
    QaoaState state;
    state.energies = {3.0, -1.0, 4.0, 1.5};
    state.amplitudes = {0, 0, Amplitude(1.0, 0.0), 0};
    CHECK(exact_expectation(state) == 4.0);
}

TEST_CASE("exact expectation matches a direct weighted sum") {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    QaoaState state;
    state.amplitudes.resize(8);
    state.energies.resize(8);
    double norm = 0.0;
    for (std::size_t b = 0; b < 8; ++b) {
        state.amplitudes[b] = Amplitude(u(rng), u(rng));
        state.energies[b] = 10.0 * u(rng);
        norm += std::norm(state.amplitudes[b]);
    }
    for (auto& a : state.amplitudes) a /= std::sqrt(norm);
    double expected = 0.0;
    for (std::size_t b = 0; b < 8; ++b) expected += std::norm(state.amplitudes[b]) * state.energies[b];
    CHECK(close(exact_expectation(state), expected, 1e-12));
}

TEST_CASE("sampling a basis state always returns it") {
    QaoaState state;
    state.energies = {0.0, 1.0, 2.0, 3.0};
    state.amplitudes = {0, 0, 0, Amplitude(0.0, 1.0)};
    std::mt19937_64 rng(1);
    for (const auto& shot : sample(state, 25, rng)) {
        CHECK(shot.bits == BitString{1, 1});
        CHECK(shot.energy == 3.0);
    }
}

TEST_CASE("uniform-state sample frequencies stay within 5 sigma") {
    const SubProblem sub = whole_problem(Qubo(2, {{0, 0, 1.0}, {0, 1, -2.0}}));
    QaoaParams params;
    params.p = 1;
    params.gammas = {0.0};
    params.betas = {0.0};
    const QaoaState state = evolve(sub, params);
    std::mt19937_64 rng(7);
    const int m = 100000;
    std::array<int, 4> counts{};
    for (const auto& shot : sample(state, m, rng)) ++counts[bits_to_index(shot.bits)];
    const double p = 0.25;
    const double sigma = std::sqrt(m * p * (1.0 - p));
    for (int c : counts) CHECK(std::abs(c - m * p) < 5.0 * sigma);
}

TEST_CASE("empirical mean energy is within 5 sigma of the exact expectation") {
    std::mt19937_64 rng(13);
    const SubProblem sub = random_subproblem(10, 5, rng);
    QaoaParams params;
    params.p = 1;
    params.gammas = {0.6};
    params.betas = {0.4};
    const QaoaState state = evolve(sub, params);
    const int m = 100000;
    std::mt19937_64 shot_rng(2);
    const double mean = shot_expectation(state, m, shot_rng);
    const double sigma = std::sqrt(energy_variance(state) / static_cast<double>(m));
    CHECK(std::abs(mean - exact_expectation(state)) < 5.0 * sigma);
}

TEST_CASE("shot expectation of a basis state is exact for any m") {
    QaoaState state;
    state.energies = {2.0, -7.0};
    state.amplitudes = {0, Amplitude(1.0, 0.0)};
    std::mt19937_64 rng(0);
    CHECK(shot_expectation(state, 1, rng) == -7.0);
    CHECK(shot_expectation(state, 513, rng) == -7.0);
}

TEST_CASE("shot expectation is reproducible for a fixed seed") {
    std::mt19937_64 rng(19);
    const SubProblem sub = random_subproblem(9, 4, rng);
    QaoaParams params;
    params.p = 1;
    params.gammas = {1.1};
    params.betas = {0.2};
    const QaoaState state = evolve(sub, params);
    std::mt19937_64 r1(33), r2(33);
    CHECK(shot_expectation(state, 1000, r1) == shot_expectation(state, 1000, r2));
}

TEST_CASE("state dump golden output") {
    const SubProblem sub = whole_problem(Qubo(1, {{0, 0, 1.0}}));
    QaoaParams params;
    params.p = 1;
    params.gammas = {0.0};
    params.betas = {0.0};
    const QaoaState state = evolve(sub, params);
    std::ostringstream out;
    dump_state_csv(out, state);
    CHECK(out.str() ==
          "index,re,im,energy\n"
          "0,0.70710678118654746,0,0\n"
          "1,0.70710678118654746,0,1\n");
}

TEST_CASE("evolve validates parameters") {
    std::mt19937_64 rng(23);
    const SubProblem sub = random_subproblem(6, 3, rng);
    QaoaParams params;
    params.p = 2;
    params.gammas = {0.1};
    params.betas = {0.2, 0.3};
    CHECK_THROWS_AS(evolve(sub, params), std::invalid_argument);
}
