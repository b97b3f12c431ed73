"""Transition operators: local couplings, normalization, reversibility, projections."""

from fractions import Fraction as F

import pytest

from spinhl.exact import ModelParams, NotAdmissible, RandomSource, ZeroSector
from spinhl.identities import cauchy_kernel, intertwining_star_sides
from spinhl.partitions import (
    enumerate_partitions,
    even_core,
    even_cover,
    even_pair_coefficient,
    interlaces,
    interlacing_above,
)
from spinhl.sshl import f_one_row, g_one_row, tail_weight
from spinhl.transitions import (
    INF,
    backward_prob,
    boundary_backward,
    boundary_forward,
    boundary_forward_distribution,
    bulk_backward,
    bulk_forward,
    forward_distribution,
    forward_prob,
    length_transition,
    p_bwd,
    p_fwd,
    weight_a,
    weight_b,
)


X = F(1, 4)
Y = F(1, 5)


def test_column0_coupling_is_the_forced_one(params):
    q = params.q
    den = 1 - q * X * Y
    tbl = p_fwd(INF, INF, 1, 0, 0, 0, X, Y, params).as_dict()
    assert tbl == {(0, 0, INF): (1 - X * Y) / den, (1, 1, INF): (1 - q) * X * Y / den}
    tbl = p_fwd(INF, INF, 1, 0, 1, 1, X, Y, params).as_dict()
    assert tbl == {(0, 0, INF): (1 - q) / den, (1, 1, INF): q * (1 - X * Y) / den}
    for k0, l0 in [(0, 1), (1, 0)]:
        tbl = p_fwd(INF, INF, 1, 0, k0, l0, X, Y, params).as_dict()
        assert list(tbl.values()) == [1]
    # the backward move at column 0 is deterministic
    for k0, l0 in [(0, 0), (1, 1), (0, 1), (1, 0)]:
        tbl = p_bwd(INF, INF, 1, 0, k0, l0, X, Y, params)
        assert tbl.outcomes == ((1, 0, INF),) and tbl.probs == (F(1),)


def test_per_column_mass_balance(params):
    # sum of A-weights equals sum of B-weights for every small context;
    # cross-checked against the starred exchange relation checker
    for I in range(4):
        for J in range(4):
            for bits in range(16):
                ip, jp, k, l = (bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1
                wa = sum(
                    weight_a(I, J, ip, jp, k, l, kp, lp, X, Y, params)[0]
                    for kp in (0, 1) for lp in (0, 1)
                )
                wb = sum(
                    weight_b(I, J, ip, jp, k, l, ih, jh, X, Y, params)[0]
                    for ih in (0, 1) for jh in (0, 1)
                )
                assert wa == wb
                lhs, rhs = intertwining_star_sides(I, J, ip, jp, k, l, X, Y, params)
                assert wa == lhs and wb == rhs


def test_zero_sector_raises(params):
    with pytest.raises(ZeroSector):
        p_fwd(0, 0, 1, 0, 0, 0, X, Y, params)  # mixed carry with nothing to do


def test_emitted_tables_normalize(params):
    for I in range(3):
        for J in range(3):
            for bits in range(16):
                ip, jp, k, l = (bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1
                for maker in (p_fwd, p_bwd):
                    try:
                        tbl = maker(I, J, ip, jp, k, l, X, Y, params)
                    except ZeroSector:
                        continue
                    assert sum(tbl.probs, F(0)) == 1
                    assert all(p >= 0 for p in tbl.probs)


def test_forward_distribution_accounts_for_all_mass(params):
    for kappa, lam, mu in [((), (), ()), ((1,), (2, 1), (1, 1)), ((2,), (2, 1), (3,))]:
        dist, overflow = forward_distribution(kappa, lam, mu, X, Y, params, part_cap=25)
        assert sum(dist.values(), F(0)) + overflow == 1
        assert overflow < F(1, 10**6)
        for nu in dist:
            assert interlaces(lam, nu) and interlaces(mu, nu)


def test_forward_law_from_empty_corner(params):
    dist, _ = forward_distribution((), (), (), X, Y, params, part_cap=30)
    kern = cauchy_kernel(X, Y, params)
    assert dist[()] == (1 - X * Y) / (1 - params.q * X * Y)
    for k in range(1, 25):
        expect = f_one_row((), (k,), X, params) * g_one_row((), (k,), Y, params) / kern
        assert dist[(k,)] == expect


def test_exact_reversibility_enumerated(params):
    # U_fwd(kappa->nu) Pi f_{lam/kappa}(x) g_{mu/kappa}(y)
    #   == U_bwd(nu->kappa) f_{nu/mu}(x) g_{nu/lam}(y), parts <= 4
    kern = cauchy_kernel(X, Y, params)
    checked = 0
    for kappa in enumerate_partitions(2, 2):
        for lam in interlacing_above(kappa, cap_part=3):
            for mu in interlacing_above(kappa, cap_part=3):
                for nu in interlacing_above(lam, cap_part=4):
                    if not interlaces(mu, nu):
                        continue
                    lhs = forward_prob(kappa, lam, mu, nu, X, Y, params) * kern \
                        * f_one_row(kappa, lam, X, params) * g_one_row(kappa, mu, Y, params)
                    rhs = backward_prob(nu, lam, mu, kappa, X, Y, params) \
                        * f_one_row(mu, nu, X, params) * g_one_row(lam, nu, Y, params)
                    assert lhs == rhs, (kappa, lam, mu, nu)
                    checked += 1
    assert checked > 1000


def test_boundary_reversibility_with_tail_weights(params):
    # U_fwd(kappa->nu|mu) Pi g_{mu/kappa}(y) G_kappa(x)
    #   == U_bwd(nu->kappa|mu) f_{nu/mu}(x) G_nu(y)
    kern = cauchy_kernel(X, Y, params)
    checked = 0
    for kappa in enumerate_partitions(3, 3):
        lam = even_cover(kappa)
        for mu in interlacing_above(kappa, cap_part=4):
            for nu in interlacing_above(lam, cap_part=4):
                if not interlaces(mu, nu):
                    continue
                assert even_core(nu) == lam  # uniqueness of the even sandwich
                lhs = forward_prob(kappa, lam, mu, nu, X, Y, params) * kern \
                    * g_one_row(kappa, mu, Y, params) * tail_weight(kappa, X, params)
                rhs = backward_prob(nu, lam, mu, kappa, X, Y, params) \
                    * f_one_row(mu, nu, X, params) * tail_weight(nu, Y, params)
                assert lhs == rhs, (kappa, mu, nu)
                checked += 1
    assert checked > 300


def test_backward_trivial_case(params):
    # everything empty: the backward move returns the empty corner surely
    assert backward_prob((), (), (), (), X, Y, params) == 1
    rng = RandomSource(0, 5)
    assert bulk_backward((), (), (), X, Y, rng, params) == ()


def test_backward_row_stochastic_on_support(params):
    # summing the backward law over reachable kappa gives exactly one
    lam, mu = (2, 1), (1, 1)
    for nu in [(2, 1), (3, 1), (2, 1, 1), (2, 2, 1)]:
        if not (interlaces(lam, nu) and interlaces(mu, nu)):
            continue
        total = F(0)
        for kappa in enumerate_partitions(3, 3):
            if interlaces(kappa, lam) and interlaces(kappa, mu):
                total += backward_prob(nu, lam, mu, kappa, X, Y, params)
        assert total == 1, nu


def test_length_projection_matches_column0(params):
    # the conditional law of len(nu) is the column-0 coupling pushed forward
    q = params.q
    den = 1 - q * X * Y
    for lk in range(3):
        for da in (0, 1):
            for db in (0, 1):
                ll, lm = lk + da, lk + db
                tbl = length_transition("bulk", (lk, ll, lm), X, Y, params).as_dict()
                col0 = p_fwd(INF, INF, 1, 0, db, da, X, Y, params)
                pushed = {}
                for (i0, j0, _), p in zip(col0.outcomes, col0.probs):
                    # i0 = len(nu) - len(lam), j0 = len(nu) - len(mu)
                    assert ll + i0 == lm + j0
                    pushed[ll + i0] = pushed.get(ll + i0, F(0)) + p
                assert pushed == tbl, (lk, ll, lm)


def test_length_tables_frozen_values(params):
    q = params.q
    den = 1 - q * X * Y
    assert length_transition("bulk", (2, 3, 3), X, Y, params).as_dict() == {
        3: (1 - q) / den, 4: q * (1 - X * Y) / den,
    }
    assert length_transition("boundary", (2, 2), X, Y, params).as_dict() == {
        2: (1 - X * Y) / den, 3: (1 - q) * X * Y / den,
    }
    assert length_transition("boundary", (3, 3), X, Y, params).as_dict() == {4: F(1)}
    assert length_transition("boundary", (3, 4), X, Y, params).as_dict() == {
        4: (1 - q) / den, 5: q * (1 - X * Y) / den,
    }
    assert length_transition("bulk", (1, 1, 2), X, Y, params).as_dict() == {2: F(1)}


def test_boundary_length_projection(params):
    # boundary tables equal the exact length marginals of the boundary operator
    for kappa in [(), (1,), (2, 1), (1, 1), (3, 2, 1)]:
        for mu in interlacing_above(kappa, cap_part=4):
            dist, overflow = boundary_forward_distribution(kappa, mu, X, Y, params, 35)
            bylen = {}
            for nu, p in dist.items():
                bylen[len(nu)] = bylen.get(len(nu), F(0)) + p
            tbl = length_transition("boundary", (len(kappa), len(mu)), X, Y, params).as_dict()
            for ln, p in tbl.items():
                assert abs(bylen.get(ln, F(0)) - p) <= overflow


def test_sampler_agrees_with_exact_law(params):
    # frequency check of bulk_forward against its exact distribution
    kappa, lam, mu = (1,), (2, 1), (1, 1)
    dist, _ = forward_distribution(kappa, lam, mu, X, Y, params, part_cap=30)
    rng = RandomSource(123, 9)
    n = 20_000
    counts = {}
    for _ in range(n):
        nu = bulk_forward(kappa, lam, mu, X, Y, rng, params)
        counts[nu] = counts.get(nu, 0) + 1
    for nu, p in sorted(dist.items(), key=lambda kv: -kv[1])[:6]:
        pf = float(p)
        assert abs(counts.get(nu, 0) - n * pf) < 5 * max((n * pf * (1 - pf)) ** 0.5, 1.0)


def test_forward_backward_round_trip_support(params):
    rng = RandomSource(3, 2)
    for _ in range(50):
        nu = bulk_forward((1,), (1, 1), (2,), X, Y, rng, params)
        assert interlaces((1, 1), nu) and interlaces((2,), nu)
        kappa = bulk_backward(nu, (1, 1), (2,), X, Y, rng, params)
        assert interlaces(kappa, (1, 1)) and interlaces(kappa, (2,))
    nu = boundary_forward((2, 1), (2, 2), X, Y, rng, params)
    assert interlaces(even_cover((2, 1)), nu)
    kap = boundary_backward(nu, (2, 2), X, Y, rng, params)
    assert interlaces(kap, even_core(nu))


def test_preconditions(params):
    rng = RandomSource(0, 0)
    with pytest.raises(ValueError):
        bulk_forward((3,), (1,), (1,), X, Y, rng, params)
    bad = ModelParams.make("1/3", "-1/2")
    with pytest.raises(NotAdmissible):
        bulk_forward((), (), (), F(1), F(1), rng, bad)
