"""Identity verifier: local equations exactly, global sums with certified tails."""

import random
from fractions import Fraction as F

import pytest

from spinhl.exact import DegenerateVandermonde, DimensionMismatch, ModelParams, NotAdmissible
from spinhl.identities import (
    cauchy_kernel,
    check_cauchy_closed_form,
    check_intertwining,
    check_intertwining_star,
    check_r_stochastic,
    check_reflection,
    check_refined_cauchy,
    check_refined_littlewood,
    check_skew_cauchy,
    check_skew_littlewood,
    det_exact,
    intertwining_sides,
    intertwining_star_sides,
    pfaffian_exact,
    reflection_sides,
    run_suite,
)


X = F(1, 4)
Y = F(1, 5)


def test_intertwining_conservation_and_trivial_case(params):
    # net conservation violated (2 paths in, none out): both sides vanish
    lhs, rhs = intertwining_sides(2, 0, 0, 0, 0, 0, X, Y, params)
    assert lhs == rhs == 0
    # all-zero boundary with I=J=0: single empty configuration each side
    lhs, rhs = intertwining_sides(0, 0, 0, 0, 0, 0, X, Y, params)
    expect = (Y - params.s) / (1 - params.s * Y)
    assert lhs == rhs == expect


def test_intertwining_sweeps(all_points):
    for params in all_points:
        assert check_intertwining(params, X, Y, max_occ=6).passed
        assert check_intertwining_star(params, X, Y, max_occ=6).passed


def test_intertwining_star_trivial(params):
    lhs, rhs = intertwining_star_sides(0, 0, 0, 0, 0, 0, X, Y, params)
    assert lhs == rhs == 1
    # conservation-violating boundary vanishes on both sides
    lhs, rhs = intertwining_star_sides(1, 0, 0, 0, 0, 1, X, Y, params)
    assert lhs == rhs == 0


def test_reflection(all_points):
    for params in all_points:
        assert check_reflection(params, X, max_occ=8).passed
    params = all_points[0]
    # parity-infeasible labels: both sides vanish
    lhs, rhs = reflection_sides(0, 0, 0, X, params)
    assert lhs == rhs == 0
    # the single-term K=0 case with a passing path
    lhs, rhs = reflection_sides(0, 1, 0, X, params)
    assert lhs == rhs == 1


def test_r_stochasticity(all_points):
    for params in all_points:
        assert check_r_stochastic(params, X, Y).passed


def test_cauchy_closed_form(all_points):
    for params in all_points:
        rep = check_cauchy_closed_form(X, Y, params)
        assert rep.mode == "exact" and rep.passed


def test_skew_cauchy_empty(params):
    rep = check_skew_cauchy((), (), X, Y, 40, params)
    assert rep.passed
    assert rep.tail_bound < F(1, 10**6)


def test_skew_cauchy_small_shapes(params):
    for lam, mu in [((1,), ()), ((2, 1), (1, 1)), ((3, 1), (2, 2)), ((2,), (3, 1))]:
        rep = check_skew_cauchy(lam, mu, X, Y, 30, params)
        assert rep.passed, (lam, mu, rep)


def test_skew_cauchy_monotone_certificate(params):
    # increasing the cap never turns pass into fail, and the bound shrinks
    prev = None
    for cap in (12, 16, 20, 24):
        rep = check_skew_cauchy((1,), (), X, Y, cap, params)
        assert rep.passed
        if prev is not None:
            assert rep.tail_bound < prev
        prev = rep.tail_bound


def test_skew_cauchy_requires_admissible():
    bad = ModelParams.make("1/3", "-1/2")
    with pytest.raises(NotAdmissible):
        check_skew_cauchy((), (), F(1), F(1), 10, bad)


def test_skew_littlewood_one_variable(params):
    rep = check_skew_littlewood((4, 4, 4, 3, 2, 2, 1), (X,), 0, params)
    assert rep.mode == "exact" and rep.passed
    rep = check_skew_littlewood((), (X,), 0, params)
    assert rep.passed and rep.lhs == rep.rhs == 1


def test_skew_littlewood_two_variables(params):
    rep = check_skew_littlewood((), (X, Y), 25, params)
    assert rep.passed
    # empty shape: right side reduces to the closed kernel
    assert rep.rhs == cauchy_kernel(X, Y, params)
    rep = check_skew_littlewood((2, 1), (X, Y), 25, params)
    assert rep.passed


def test_refined_cauchy_n1_closed_form(params):
    u, q = params.u, params.q
    rep = check_refined_cauchy((X,), (Y,), u, 25, params)
    assert rep.passed
    assert rep.rhs == (1 - u * q + (u - 1) * q * X * Y) / (1 - X * Y)


def test_refined_cauchy_n2(params):
    xs = (params.x[0], params.x[2])
    ys = (params.x[1], params.x[3])
    for u in (params.u, F(1)):
        rep = check_refined_cauchy(xs, ys, u, 25, params)
        assert rep.passed, rep.to_json()
        assert rep.tail_bound <= F(1, 10**5)


def test_refined_cauchy_rejects_degenerate(params):
    with pytest.raises(DegenerateVandermonde):
        check_refined_cauchy((X, X), (Y, params.x[2]), params.u, 10, params)


def test_refined_littlewood_2n2(params):
    u, q = params.u, params.q
    rep = check_refined_littlewood((X, Y), u, 25, params)
    assert rep.passed
    assert rep.rhs == (1 - u * q + (u - 1) * q * X * Y) / (1 - X * Y)
    # the empty partition contributes (1 - uq): check it is present in the lhs
    assert rep.lhs - (1 - u * q) > 0


def test_pfaffian_and_determinant():
    assert det_exact([[F(1), F(0)], [F(0), F(1)]]) == 1
    assert det_exact([]) == 1
    a = F(5, 3)
    assert pfaffian_exact([[F(0), a], [-a, F(0)]]) == a
    rng = random.Random(17)
    for _ in range(10):
        m = [[F(0)] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                v = F(rng.randint(-9, 9), rng.randint(1, 9))
                m[i][j], m[j][i] = v, -v
        assert pfaffian_exact(m) ** 2 == det_exact(m)
    with pytest.raises(DimensionMismatch):
        pfaffian_exact([[F(0)] * 3 for _ in range(3)])
    with pytest.raises(DimensionMismatch):
        pfaffian_exact([[F(1), F(2)], [F(3), F(4)]])


def test_det_exact_against_cofactor_oracle():
    def cofactor_det(m):
        n = len(m)
        if n == 0:
            return F(1)
        if n == 1:
            return m[0][0]
        total = F(0)
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * cofactor_det(minor)
            total += term if j % 2 == 0 else -term
        return total

    rng = random.Random(23)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = [[F(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
        assert det_exact(m) == cofactor_det(m)


def test_run_suite_and_corrupt_hook():
    reports = run_suite(cap=16)
    assert reports and all(r.passed for r in reports)
    bad = run_suite(cap=16, corrupt=True)
    assert any(not r.passed for r in bad)
    only = run_suite(cap=16, only="reflection")
    assert only and all("reflection" in r.name for r in only)
