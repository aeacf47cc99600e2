# Copyright (c) 2026 tabuq contributors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python extension module."""

import math

import pytest

import tabuq


def small_qubo():
    return tabuq.Qubo(2, [(0, 0, 2.0), (0, 1, -3.0), (1, 1, 1.0)])


def test_version():
    assert tabuq.__version__


def test_evaluate():
    q = small_qubo()
    assert q.evaluate([0, 0]) == 0.0
    assert q.evaluate([1, 1]) == 0.0
    assert q.evaluate([1, 0]) == 2.0


def test_parse_and_sense():
    qs = tabuq.parse_orlib("1\n2 2\n1 1 2\n1 2 -3\n")
    assert len(qs) == 1
    assert qs[0].n == 2
    assert qs[0].sense == tabuq.Sense.maximize_negated
    assert qs[0].diagonal(0) == -2.0
    assert qs[0].pair_coefficient(0, 1) == 3.0


def test_orlib_round_trip():
    qs = tabuq.parse_orlib("1\n3 2\n1 2 5\n3 3 -4\n")
    text = tabuq.write_orlib(qs)
    back = tabuq.parse_orlib(text)
    assert [(t.i, t.j, t.value) for t in back[0].terms] == [
        (t.i, t.j, t.value) for t in qs[0].terms
    ]


def test_move_table_round_trip():
    q = small_qubo()
    table = tabuq.init_move_table(q, [0, 0])
    assert table.delta == [2.0, 1.0]
    x, table = tabuq.apply_flip(q, [0, 0], table, 0)
    assert x == [1, 0]
    assert table.delta == [-2.0, -2.0]


def test_basic_search_reaches_optimum():
    q = tabuq.Qubo(2, [(0, 0, -1.0), (1, 1, -1.0)])
    params = tabuq.TabuParams()
    params.tenure = 1
    params.max_iters = 10
    params.target = -2.0
    res = tabuq.basic_tabu_search(q, [0, 0], params)
    assert res.f_best == -2.0
    assert res.x_best == [1, 1]
    assert res.trace.reason == tabuq.StopReason.target
    assert res.trace.to_csv().startswith("iteration,f_ts,f_best,n_flipped,accepted")


def test_sampler_search_with_brute_force():
    q = tabuq.Qubo(4, [(0, 0, -1.0), (1, 1, 2.0), (0, 3, -3.0), (2, 2, -1.0), (3, 3, 1.0)])
    params = tabuq.TabuParams()
    params.tenure = 2
    params.max_iters = 4
    params.k = 4
    res = tabuq.sampler_tabu_search(q, [0, 0, 0, 0], params, tabuq.BruteForceSampler())
    # exhaustive check in python
    best = min(
        q.evaluate([b >> i & 1 for i in range(4)]) for b in range(16)
    )
    assert res.f_best == best


def test_python_defined_sampler():
    class FixedSampler(tabuq.NeighborhoodSampler):
        def sample_best(self, sub, ctx):
            return [1] * sub.k

    q = tabuq.Qubo(3, [(0, 0, -1.0), (1, 1, -1.0), (2, 2, -1.0)])
    params = tabuq.TabuParams()
    params.tenure = 1
    params.max_iters = 1
    params.k = 3
    res = tabuq.sampler_tabu_search(q, [0, 0, 0], params, FixedSampler())
    assert res.f_best == -3.0
    assert res.trace.records[0].sampler_accepted


def test_clamp_and_embed():
    q = small_qubo()
    sub = tabuq.clamp(q, [0, 1], [0])
    assert sub.k == 1
    assert sub.reduced.evaluate([1]) == q.evaluate(sub.embed([1]))


def test_qaoa_uniform_state():
    q = tabuq.Qubo(3, [(0, 0, 1.0), (1, 2, -2.0)])
    sub = tabuq.clamp(q, [0, 0, 0], [0, 1, 2])
    params = tabuq.QaoaParams()
    params.p = 1
    params.gammas = [0.0]
    params.betas = [0.0]
    state = tabuq.evolve(sub, params)
    assert abs(state.norm_squared() - 1.0) < 1e-10
    for amp in state.amplitudes:
        assert abs(abs(amp) ** 2 - 1.0 / 8.0) < 1e-12
    mean = sum(state.energies) / len(state.energies)
    assert abs(tabuq.exact_expectation(state) - mean) < 1e-12
    assert tabuq.shot_expectation(state, 100, seed=1) == tabuq.shot_expectation(
        state, 100, seed=1
    )


def test_penalty_hamming_identity():
    spec = tabuq.PenaltySpec()
    spec.weights = [1.0, 1.0, 1.0]
    spec.reference = [1, 0, 1]
    spec.scale = 2.0
    diag = tabuq.penalty_diagonal(spec)
    ref_index = 1 + 4  # bits 0 and 2 set
    for b in range(8):
        dist = bin(b ^ ref_index).count("1")
        assert diag[b] - diag[ref_index] == pytest.approx(2.0 * dist, abs=1e-12)


def test_optimize_angles_bowl():
    budget = tabuq.OptBudget()
    budget.max_evals = 400
    budget.seed = 7
    res = tabuq.optimize_angles(lambda a: sum((x - 1.0) ** 2 for x in a), 1, budget)
    assert res.evals_used <= 400
    assert res.best_value < 0.05
    assert len(res.history) == res.evals_used


def test_brute_force_and_sa_and_qaoa_best():
    q = tabuq.Qubo(6, [(i, i, (-1.0) ** i * (i + 1)) for i in range(6)])
    sub = tabuq.clamp(q, [0] * 6, list(range(6)))
    expected = [1, 0, 1, 0, 1, 0]
    assert tabuq.brute_force_best(sub) == expected

    cfg = tabuq.SaConfig()
    cfg.temperature = 1e-9
    cfg.steps = 6
    cfg.restarts = 3
    assert tabuq.sa_best(sub, cfg, seed=5) == expected

    qcfg = tabuq.QaoaSamplerConfig()
    qcfg.p = 1
    qcfg.m = 256
    qcfg.shots = 50
    qcfg.budget.max_evals = 20
    qcfg.use_optimizer_history = True
    assert tabuq.qaoa_best(sub, qcfg, seed=3) == expected


def test_improvement_probability():
    q = tabuq.Qubo(2, [(0, 0, 1.0), (1, 1, 2.0)])
    sub = tabuq.clamp(q, [0, 0], [0, 1])
    params = tabuq.QaoaParams()
    params.p = 1
    params.gammas = [0.0]
    params.betas = [0.0]
    state = tabuq.evolve(sub, params)
    assert tabuq.improvement_probability(state, -0.5) == 0.0
    assert tabuq.improvement_probability(state, 100.0) == pytest.approx(1.0)
    assert tabuq.improvement_probability(state, 1.5) == pytest.approx(0.5)


def test_compute_ecdf():
    def trace(values):
        q = tabuq.Qubo(1, [(0, 0, -1.0)])
        params = tabuq.TabuParams()
        params.tenure = 1
        params.max_iters = len(values)
        # build a real trace then check the curve make sense structurally
        return tabuq.basic_tabu_search(q, [0], params).trace

    prob = tabuq.ProblemTraces()
    prob.label = "p"
    prob.optimum = -1.0
    prob.runs = [trace([0.0]), trace([0.0])]
    rep = tabuq.compute_ecdf([prob], 5)
    assert rep.target_count == 5
    prev = 0.0
    for v in rep.proportion:
        assert 0.0 <= v <= 1.0
        assert v >= prev
        prev = v


def test_best_known_table():
    table = tabuq.best_known_table()
    assert table["1d"] == 6333
    assert table["5f"] == 190507


def test_make_reduced_suite():
    qs = tabuq.parse_orlib("1\n25 2\n1 2 5\n3 25 -4\n")
    suite = tabuq.make_reduced_suite(qs, ["a"], seed=3, per_instance=2, size=20)
    assert len(suite) == 2
    assert all(inst.qubo.n == 20 for inst in suite)


def test_math_consistency_with_ising():
    q = small_qubo()
    m = tabuq.to_ising(q)
    for b in range(4):
        x = [b & 1, b >> 1]
        assert m.energy(tabuq.spins_of(x)) + m.offset == pytest.approx(q.evaluate(x))
