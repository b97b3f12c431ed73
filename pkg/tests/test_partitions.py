"""Partition combinatorics against brute-force oracles."""

import math
import random

from spinhl.partitions import (
    conjugate,
    contains,
    enumerate_partitions,
    even_core,
    even_cover,
    even_pair_coefficient,
    format_partition,
    interlaces,
    interlacing_above,
    interlacing_below,
    is_conjugate_even,
    mult,
    parse_partition,
)


def random_partition(rng, max_part=8, max_len=6):
    parts = sorted((rng.randint(1, max_part) for _ in range(rng.randint(0, max_len))),
                   reverse=True)
    return tuple(parts)


def test_interlaces_examples():
    assert interlaces((), ())
    assert interlaces((3, 1), (4, 2, 1))  # chain 1<=1<=2<=3<=4
    assert not interlaces((3, 3), (5, 1))  # mu_2=3 > lam_2=1


def test_interlaces_is_horizontal_strip():
    # oracle: containment with at most one box added per column
    def strip(mu, lam):
        if not contains(mu, lam):
            return False
        cl, cm = conjugate(lam), conjugate(mu)
        cm = cm + (0,) * (len(cl) - len(cm))
        return all(a - b in (0, 1) for a, b in zip(cl, cm))

    ps = enumerate_partitions(4, 4)
    for mu in ps:
        for lam in ps:
            assert interlaces(mu, lam) == strip(mu, lam), (mu, lam)


def test_interlaces_length_gap():
    ps = enumerate_partitions(4, 4)
    for mu in ps:
        for lam in ps:
            if interlaces(mu, lam):
                assert len(lam) - len(mu) in (0, 1)


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)
    rng = random.Random(3)
    for _ in range(500):
        lam = random_partition(rng)
        assert conjugate(conjugate(lam)) == lam


def test_conjugate_even_examples():
    assert is_conjugate_even(())
    assert is_conjugate_even((4, 4, 3, 3, 2, 2))
    assert not is_conjugate_even((4, 3))  # conjugate (2,2,2,1) has an odd part
    rng = random.Random(4)
    for _ in range(300):
        lam = random_partition(rng)
        assert is_conjugate_even(lam) == all(v % 2 == 0 for v in conjugate(lam))


def test_even_pair_coefficient(params):
    q, s = params.q, params.s
    assert even_pair_coefficient((), params) == 1
    assert even_pair_coefficient((2, 2), params) == (1 - q) / (1 - s * s * q)
    assert even_pair_coefficient((4, 4, 3, 3, 2, 2), params) == ((1 - q) / (1 - s * s * q)) ** 3
    # quadruple multiplicity brings the k=2 factor
    assert even_pair_coefficient((1, 1, 1, 1), params) == (
        (1 - q) / (1 - s * s * q) * (1 - q**3) / (1 - s * s * q**3)
    )


def test_even_cover_core_examples():
    assert even_cover((4, 4, 4, 3, 2, 2, 1)) == (4, 4, 4, 4, 2, 2, 1, 1)
    assert even_core((4, 4, 4, 3, 2, 2, 1)) == (4, 4, 3, 3, 2, 2)
    assert even_cover(()) == ()
    assert even_core(()) == ()


def test_even_cover_core_unique_by_enumeration():
    # oracle: among all conjugate-even partitions in a box, exactly one
    # interlaces kappa from above and exactly one from below
    box = [p for p in enumerate_partitions(5, 7) if is_conjugate_even(p)]
    for kappa in enumerate_partitions(5, 5):
        above = [lam for lam in box if interlaces(kappa, lam)]
        below = [tau for tau in box if interlaces(tau, kappa)]
        assert above == [even_cover(kappa)] or (len(above) == 1 and above[0] == even_cover(kappa))
        assert len(below) == 1 and below[0] == even_core(kappa)


def test_even_cover_core_sandwich_and_length():
    rng = random.Random(5)
    for _ in range(300):
        kappa = random_partition(rng, 6, 6)
        lo, hi = even_core(kappa), even_cover(kappa)
        assert is_conjugate_even(lo) and is_conjugate_even(hi)
        assert interlaces(lo, kappa) and interlaces(kappa, hi)
        expect = len(kappa) if len(kappa) % 2 == 0 else len(kappa) + 1
        assert len(hi) == expect


def test_enumerate_partitions():
    assert enumerate_partitions(0, 0) == [()]
    assert enumerate_partitions(2, 2) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    for p, l in [(2, 3), (3, 3), (4, 2), (5, 1)]:
        assert len(enumerate_partitions(p, l)) == math.comb(p + l, l)


def test_interlacing_enumerators_match_predicate():
    ps = enumerate_partitions(4, 3)
    for mu in enumerate_partitions(3, 2):
        above = set(interlacing_above(mu, cap_part=4))
        assert above == {lam for lam in ps if interlaces(mu, lam) and (not lam or lam[0] <= 4)}
    for lam in enumerate_partitions(3, 3):
        below = set(interlacing_below(lam))
        assert below == {mu for mu in ps if interlaces(mu, lam)}


def test_mult_and_text_forms():
    lam = (4, 4, 3, 1)
    assert mult(lam, 4) == 2 and mult(lam, 2) == 0
    assert format_partition(lam) == "4,4,3,1"
    assert format_partition(()) == "∅"
    assert parse_partition("4,4,3,1") == lam
    assert parse_partition("∅") == ()
