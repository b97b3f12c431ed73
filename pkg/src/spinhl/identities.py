"""Exact verification of the local equations and global summation identities.

Local equations (exchange relations, reflection, stochasticity) are finite
sums of rational weights and are checked for exact equality.  Global
identities (Cauchy / Littlewood and their refined determinant / Pfaffian
forms) have one infinite side; that side is truncated by largest part and
accompanied by a certified rational tail bound, so a pass means
|lhs - rhs| <= tail_bound with everything exact.

Two tail-bound constructions are used:

* one-largest-part sums (skew Cauchy with one x and one y, skew Littlewood
  with one or two variables): increments at consecutive caps are exactly
  geometric with the pairwise convergence ratio once the cap clears the
  fixed parts; the code verifies that exact recursion on the retained
  increments and then sums the geometric tail in closed form;

* refined sums: the u-dependent coefficients lie in [0, 1] for u in [0, 1]
  in probabilistic mode, so the tail is dominated by the tail of the plain
  (unrefined) identity, whose total is a known closed form; the bound is
  closed_form - retained_plain_sum, an exact rational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DegenerateVandermonde,
    DimensionMismatch,
    InvalidParams,
    ModelParams,
    NotAdmissible,
    ONE,
    ZERO,
    admissible,
    convergence_ratio,
    frac,
)
from .partitions import (
    enumerate_partitions,
    even_core,
    even_cover,
    even_pair_coefficient,
    is_conjugate_even,
)
from .sshl import f_one_row, f_skew, g_one_row, g_skew
from .weights import L, M, Mstar, R, Rstar


def cauchy_kernel(x, y, params):
    """Pi(x; y) = (1 - qxy)/(1 - xy), the single-cell Cauchy normalization."""
    q = params.q
    den = ONE - x * y
    if den == 0:
        raise InvalidParams("1 - x y vanished in Cauchy kernel")
    return (ONE - q * x * y) / den


@dataclass
class CheckReport:
    name: str
    mode: str  # "exact" | "truncated"
    lhs: Fraction
    rhs: Fraction
    passed: bool
    tail_bound: Fraction = ZERO
    detail: str = ""

    def to_json(self):
        out = {
            "name": self.name,
            "mode": self.mode,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "passed": self.passed,
        }
        if self.mode == "truncated":
            out["lhs_float"] = float(self.lhs)
            out["rhs_float"] = float(self.rhs)
            out["tail_bound"] = str(self.tail_bound)
            out["tail_bound_float"] = float(self.tail_bound)
        if self.detail:
            out["detail"] = self.detail
        return json.dumps(out)


def _exact_report(name, lhs, rhs, detail=""):
    return CheckReport(name, "exact", lhs, rhs, lhs == rhs, detail=detail)


def _truncated_report(name, lhs, rhs, tail, detail=""):
    return CheckReport(name, "truncated", lhs, rhs, abs(lhs - rhs) <= tail, tail, detail)


# ---------------------------------------------------------------------------
# local equations
# ---------------------------------------------------------------------------

def intertwining_sides(I, J, i1, i3, j1, j3, x, y, params):
    """Both sides of the exchange relation moving an R crossing through an (M, L) column pair.

    Left: crossing first, then the column with M (spectral y) below L
    (spectral x).  Right: column first (L below M), then the crossing.
    The middle occupancy is pinned by conservation, so the sums are finite.
    """
    lhs = ZERO
    for k1 in (0, 1):
        for k3 in (0, 1):
            K = I + k1 - j1
            if K < 0 or K != J + j3 - k3:
                continue
            lhs += (
                R(i3, i1, k3, k1, x, y, params)
                * M(I, k1, K, j1, y, params)
                * L(K, k3, J, j3, x, params)
            )
    rhs = ZERO
    for k1 in (0, 1):
        for k3 in (0, 1):
            K = I + i3 - k3
            if K < 0 or K != J + k1 - i1:
                continue
            rhs += (
                L(I, i3, K, k3, x, params)
                * M(K, i1, J, k1, y, params)
                * R(k3, k1, j3, j1, x, y, params)
            )
    return lhs, rhs


def check_intertwining(params, x, y, max_occ=6):
    """Exact equality of the exchange relation for all boundary bits and occupancies <= max_occ."""
    bad = []
    for I in range(max_occ + 1):
        for J in range(max_occ + 1):
            for bits in range(16):
                i1, i3, j1, j3 = (bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1
                lhs, rhs = intertwining_sides(I, J, i1, i3, j1, j3, x, y, params)
                if lhs != rhs:
                    bad.append((I, J, i1, i3, j1, j3, lhs, rhs))
    total = (max_occ + 1) ** 2 * 16
    return CheckReport(
        "intertwining", "exact", frac(total - len(bad)), frac(total),
        not bad, detail=f"{total} labelled cases; first failure: {bad[0] if bad else None}",
    )


def intertwining_star_sides(I, J, i_in, j_in, k_out, l_out, x, y, params):
    """Both sides of the starred exchange relation on an (MSTAR, L) column pair.

    Left: RSTAR crossing with inputs (i_in, j_in), then MSTAR (spectral x)
    below L (spectral y).  Right: the swapped column (L below MSTAR), then
    the crossing with outputs (k_out, l_out).
    """
    lhs = ZERO
    for k_p in (0, 1):
        for l_p in (0, 1):
            K = J + k_out - k_p
            if K < 0 or K != I + l_out - l_p:
                continue
            lhs += (
                Rstar(i_in, j_in, k_p, l_p, x, y, params)
                * Mstar(I, l_p, K, l_out, x, params)
                * L(K, k_p, J, k_out, y, params)
            )
    rhs = ZERO
    for i_h in (0, 1):
        for j_h in (0, 1):
            Mv = I + i_in - i_h
            if Mv < 0 or Mv != J + j_in - j_h:
                continue
            rhs += (
                L(I, i_in, Mv, i_h, y, params)
                * Mstar(Mv, j_in, J, j_h, x, params)
                * Rstar(i_h, j_h, k_out, l_out, x, y, params)
            )
    return lhs, rhs


def check_intertwining_star(params, x, y, max_occ=6):
    bad = []
    for I in range(max_occ + 1):
        for J in range(max_occ + 1):
            for bits in range(16):
                i_in, j_in, k_out, l_out = (
                    (bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1,
                )
                lhs, rhs = intertwining_star_sides(I, J, i_in, j_in, k_out, l_out, x, y, params)
                if lhs != rhs:
                    bad.append((I, J, i_in, j_in, k_out, l_out, lhs, rhs))
    total = (max_occ + 1) ** 2 * 16
    return CheckReport(
        "intertwining-star", "exact", frac(total - len(bad)), frac(total),
        not bad, detail=f"{total} labelled cases; first failure: {bad[0] if bad else None}",
    )


def reflection_prefactor(I, params):
    """prod_{k=1}^{I} (1-q^{2k-1})/(1-s^2 q^{2k-1})."""
    q, s = params.q, params.s
    out = ONE
    for k in range(1, I + 1):
        den = ONE - s * s * q ** (2 * k - 1)
        if den == 0:
            raise InvalidParams("reflection prefactor denominator vanished")
        out *= (ONE - q ** (2 * k - 1)) / den
    return out


def reflection_sides(K, j, l, x, params):
    """Both sides of the boundary reflection relation at top occupancy K.

    The left side flips the incoming horizontal state of an L vertex with
    even bottom occupancy 2I; the right side flips the outgoing state of
    an M vertex.  Conservation pins I on each side, so each side is at
    most a single term.
    """
    lhs = ZERO
    two_i = K + l + j - 1  # L(2I, 1-j; K, l) needs 2I + (1-j) = K + l
    if two_i >= 0 and two_i % 2 == 0:
        I = two_i // 2
        lhs = reflection_prefactor(I, params) * L(2 * I, 1 - j, K, l, x, params)
    rhs = ZERO
    two_i = K + 1 - l - j  # M(2I, j; K, 1-l) needs 2I + j = K + (1-l)
    if two_i >= 0 and two_i % 2 == 0:
        I = two_i // 2
        rhs = reflection_prefactor(I, params) * M(2 * I, j, K, 1 - l, x, params)
    return lhs, rhs


def check_reflection(params, x, max_occ=8):
    bad = []
    for K in range(max_occ + 1):
        for j in (0, 1):
            for l in (0, 1):
                lhs, rhs = reflection_sides(K, j, l, x, params)
                if lhs != rhs:
                    bad.append((K, j, l, lhs, rhs))
    total = (max_occ + 1) * 4
    return CheckReport(
        "reflection", "exact", frac(total - len(bad)), frac(total),
        not bad, detail=f"{total} cases; first failure: {bad[0] if bad else None}",
    )


def check_r_stochastic(params, x, y):
    """Row sums of the R table equal one exactly for each input pair."""
    bad = []
    for i in (0, 1):
        for j in (0, 1):
            total = sum(R(i, j, k, l, x, y, params) for k in (0, 1) for l in (0, 1))
            if total != ONE:
                bad.append((i, j, total))
    return CheckReport(
        "r-stochastic", "exact", frac(4 - len(bad)), frac(4),
        not bad, detail=f"failures: {bad}" if bad else "4 input states",
    )


# ---------------------------------------------------------------------------
# exact determinant / Pfaffian kernels
# ---------------------------------------------------------------------------

def det_exact(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return ONE
    a = [[frac(v) for v in r] for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = ZERO
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def pfaffian_exact(rows):
    """Exact Pfaffian of an antisymmetric even-dimensional matrix (recursive expansion)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("pfaffian needs a square matrix")
    if n % 2 != 0:
        raise DimensionMismatch("pfaffian needs even dimension")
    a = [[frac(v) for v in r] for r in rows]
    for i in range(n):
        for j in range(n):
            if a[i][j] != -a[j][i]:
                raise DimensionMismatch("matrix is not antisymmetric")

    def rec(idx):
        if not idx:
            return ONE
        i0 = idx[0]
        total = ZERO
        for pos in range(1, len(idx)):
            j = idx[pos]
            if a[i0][j] == 0:
                continue
            rest = idx[1:pos] + idx[pos + 1:]
            term = a[i0][j] * rec(rest)
            total += term if pos % 2 == 1 else -term
        return total

    return rec(tuple(range(n)))


# ---------------------------------------------------------------------------
# tail machinery
# ---------------------------------------------------------------------------

def geometric_tail(increments, ratio, name):
    """Certified tail for a one-largest-part sum truncated at cap.

    increments[c] must be the exact mass added when the largest-part cap
    moves from c-1 to c.  Beyond the fixed parts the recursion
    increments[c+1] == ratio * increments[c] holds exactly; we verify it
    on the last retained steps and return increments[cap] * r / (1 - r).
    """
    if not ZERO <= ratio < ONE:
        raise NotAdmissible(f"{name}: convergence ratio {ratio} not in [0, 1)")
    caps = sorted(increments)
    if len(caps) < 3:
        raise InvalidParams(f"{name}: cap too small to certify the geometric tail")
    c = caps[-1]
    for cc in (c - 1, c):
        if increments[cc] != ratio * increments[cc - 1]:
            raise InvalidParams(
                f"{name}: increment at cap {cc} is not yet geometric; raise cap"
            )
    return increments[c] * ratio / (ONE - ratio)


# ---------------------------------------------------------------------------
# global identities
# ---------------------------------------------------------------------------

def check_cauchy_closed_form(x, y, params):
    """Exact resummation of the one-variable Cauchy identity.

    The terms f_(k)(x) g_(k)(y) are exactly geometric; summing the series
    in closed form must reproduce Pi(x; y) - no truncation error.  The
    geometric recursion itself is verified on the first terms.
    """
    if not admissible(x, y, params):
        raise NotAdmissible(f"({x}, {y}) not admissible")
    r = convergence_ratio(x, y, params)
    first = f_one_row((), (1,), x, params) * g_one_row((), (1,), y, params)
    for k in range(1, 8):
        tk = f_one_row((), (k,), x, params) * g_one_row((), (k,), y, params)
        tk1 = f_one_row((), (k + 1,), x, params) * g_one_row((), (k + 1,), y, params)
        if tk1 != r * tk:
            return _exact_report("cauchy-closed-form", tk1, r * tk,
                                 detail=f"geometric recursion broke at k={k}")
    lhs = ONE + first / (ONE - r)
    rhs = cauchy_kernel(x, y, params)
    return _exact_report("cauchy-closed-form", lhs, rhs)


def _outer_sum_increments(lam, mu, x, y, cap, params):
    """Partial sums and per-cap increments of sum_{kappa} g_{kappa/lam}(y) f_{kappa/mu}(x).

    Terms are grouped by the largest part of kappa; the increments beyond
    max(lam_1, mu_1) feed the geometric tail certificate.
    """
    from .partitions import interlacing_above

    above_lam = set(interlacing_above(lam, cap_part=cap))
    by_top = {c: ZERO for c in range(cap + 1)}
    for kappa in interlacing_above(mu, cap_part=cap):
        if kappa not in above_lam:
            continue
        top = kappa[0] if kappa else 0
        by_top[top] += g_one_row(lam, kappa, y, params) * f_one_row(mu, kappa, x, params)
    lo = max(lam[0] if lam else 0, mu[0] if mu else 0)
    running = ZERO
    series = {}
    inc = {}
    for c in range(cap + 1):
        running += by_top[c]
        series[c] = running
        if c > lo:
            inc[c] = by_top[c]
    return series, inc


def check_skew_cauchy(lam, mu, x, y, cap, params):
    """Skew Cauchy identity with one x and one y variable, truncated at parts <= cap.

    (1/Pi) * sum over outer kappa of g_{kappa/lam}(y) f_{kappa/mu}(x)
    equals the finite sum over inner nu of f_{lam/nu}(x) g_{mu/nu}(y);
    the outer side carries the certified geometric tail.
    """
    if not admissible(x, y, params):
        raise NotAdmissible(f"({x}, {y}) not admissible")
    pre = ONE / cauchy_kernel(x, y, params)
    series, inc = _outer_sum_increments(lam, mu, x, y, cap, params)
    lhs = pre * series[cap]
    from .partitions import interlacing_below

    below_lam = set(interlacing_below(lam))
    rhs = ZERO
    for nu in interlacing_below(mu):
        if nu in below_lam:
            rhs += f_one_row(nu, lam, x, params) * g_one_row(nu, mu, y, params)
    r = convergence_ratio(x, y, params)
    tail = pre * geometric_tail(inc, r, "skew-cauchy")
    return _truncated_report(
        f"skew-cauchy[{lam}/{mu}]", lhs, rhs, tail,
        detail=f"cap={cap}",
    )


def check_skew_littlewood(mu, xs, cap, params):
    """Skew Littlewood identity; exact for one variable, truncated for two.

    One variable: both conjugate-even sums collapse to single terms
    (the even cover above, the even core below); exact equality.
    Two variables: the cover side is an infinite sum over conjugate-even
    lam truncated by largest part with a certified geometric tail.
    """
    xs = tuple(xs)
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if not admissible(xs[a], xs[b], params):
                raise NotAdmissible(f"({xs[a]}, {xs[b]}) not admissible")
    if len(xs) == 1:
        lam = even_cover(mu)
        tau = even_core(mu)
        lhs = even_pair_coefficient(lam, params) * f_one_row(mu, lam, xs[0], params)
        rhs = even_pair_coefficient(tau, params) * g_one_row(tau, mu, xs[0], params)
        return _exact_report(f"skew-littlewood-1var[{mu}]", lhs, rhs)
    if len(xs) != 2:
        raise InvalidParams("truncated skew Littlewood implemented for one or two variables")
    x1, x2 = xs
    pre = ONE
    pre *= cauchy_kernel(x1, x2, params)
    # left side: sum over conjugate-even lam above mu, truncated by largest part
    inc = {}
    series = {}
    s = ZERO
    lo = mu[0] if mu else 0
    for c in range(0, cap + 1):
        tot = ZERO
        for lam in _even_partitions_with_top(c, max_len=len(mu) + 2):
            w = f_skew(mu, lam, xs, params)
            if w != 0:
                tot += even_pair_coefficient(lam, params) * w
        s += tot
        series[c] = s
        if c > lo:
            inc[c] = tot
    lhs = series[cap]
    # right side: finite sum over conjugate-even nu reachable below mu
    rhs = ZERO
    for nu in sorted(_even_below(mu)):
        w = g_skew(nu, mu, xs, params)
        if w != 0:
            rhs += even_pair_coefficient(nu, params) * w
    rhs *= pre
    r = convergence_ratio(x1, x2, params)
    tail = geometric_tail(inc, r, "skew-littlewood")
    return _truncated_report(f"skew-littlewood-2var[{mu}]", lhs, rhs, tail, detail=f"cap={cap}")


def _even_partitions_with_top(c, max_len):
    """Conjugate-even partitions whose largest part is exactly c (0 -> just the empty one)."""
    if c == 0:
        return [()]
    if max_len < 2:
        return []
    out = []
    for rest in enumerate_partitions(c, max_len - 2):
        lam = (c, c) + rest
        if is_conjugate_even(lam):
            out.append(lam)
    return out


def _even_below(mu):
    """Conjugate-even partitions reachable below mu by up to two interlacing steps."""
    from .partitions import interlacing_below

    found = set()
    for nu in interlacing_below(mu):
        for nu2 in interlacing_below(nu):
            if is_conjugate_even(nu2):
                found.add(nu2)
    return found


def refined_cauchy_rhs(xs, ys, u, params):
    """Determinant closed form of the refined Cauchy identity."""
    n = len(xs)
    q = params.q
    num = ONE
    for xi in xs:
        for yj in ys:
            num *= ONE - q * xi * yj
    den = ONE
    for i in range(n):
        for j in range(i + 1, n):
            den *= (xs[i] - xs[j]) * (ys[i] - ys[j])
    if den == 0:
        raise DegenerateVandermonde("repeated x or y value")
    mat = []
    for xi in xs:
        row = []
        for yj in ys:
            cell_den = (ONE - xi * yj) * (ONE - q * xi * yj)
            if cell_den == 0:
                raise InvalidParams("determinant cell denominator vanished")
            row.append((ONE - u * q + (u - ONE) * q * xi * yj) / cell_den)
        mat.append(row)
    return num / den * det_exact(mat)


def check_refined_cauchy(xs, ys, u, cap, params):
    """Refined Cauchy identity for n x-variables against n y-variables, truncated.

    Left: sum over partitions with at most n parts, largest part <= cap,
    weighted by prod_{i=1}^{n-len(lam)} (1 - u q^i).  Tail bound: with
    u in [0, 1] and probabilistic parameters the dropped terms are
    dominated by the plain Cauchy tail, whose total is the closed form
    prod Pi(x_i; y_j).
    """
    xs, ys = tuple(xs), tuple(ys)
    n = len(xs)
    if len(ys) != n:
        raise InvalidParams("refined Cauchy needs equally many x and y variables")
    if not (ZERO <= u <= ONE):
        raise InvalidParams("certified tail needs u in [0, 1]")
    params.require_probabilistic()
    for xi in xs:
        for yj in ys:
            if not admissible(xi, yj, params):
                raise NotAdmissible(f"({xi}, {yj}) not admissible")
    q = params.q
    lhs = ZERO
    plain = ZERO
    for lam in enumerate_partitions(cap, n):
        fw = f_skew((), lam, xs, params)
        if fw == 0:
            continue
        gw = g_skew((), lam, ys, params)
        term = fw * gw
        plain += term
        coeff = ONE
        for i in range(1, n - len(lam) + 1):
            coeff *= ONE - u * q**i
        lhs += coeff * term
    rhs = refined_cauchy_rhs(xs, ys, u, params)
    closed = ONE
    for xi in xs:
        for yj in ys:
            closed *= cauchy_kernel(xi, yj, params)
    tail = closed - plain
    if tail < 0:
        raise InvalidParams("plain Cauchy partial sum exceeded its closed form")
    return _truncated_report(
        f"refined-cauchy[n={n},u={u}]", lhs, rhs, tail, detail=f"cap={cap}",
    )


def refined_littlewood_rhs(xs, u, params):
    """Pfaffian closed form of the refined Littlewood identity (even variable count)."""
    q = params.q
    n = len(xs)
    pre = ONE
    for i in range(n):
        for j in range(i + 1, n):
            d = xs[i] - xs[j]
            if d == 0:
                raise DegenerateVandermonde("repeated x value")
            pre *= (ONE - q * xs[i] * xs[j]) / d
    mat = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            cell_den = (ONE - xs[i] * xs[j]) * (ONE - q * xs[i] * xs[j])
            if cell_den == 0:
                raise InvalidParams("Pfaffian cell denominator vanished")
            mat[i][j] = (xs[i] - xs[j]) * (ONE - u * q + (u - ONE) * q * xs[i] * xs[j]) / cell_den
    return pre * pfaffian_exact(mat)


def check_refined_littlewood(xs, u, cap, params):
    """Refined Littlewood identity for an even number of variables, truncated.

    Left: sum over partitions with all multiplicities even (so parts pair
    up and the length is even), largest part <= cap.  Tail bound by the
    plain Littlewood closed form prod_{i<j} Pi(x_i; x_j), valid for
    u in [0, 1] in probabilistic mode.
    """
    xs = tuple(xs)
    if len(xs) % 2 != 0:
        raise InvalidParams("refined Littlewood needs an even number of variables")
    if not (ZERO <= u <= ONE):
        raise InvalidParams("certified tail needs u in [0, 1]")
    params.require_probabilistic()
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if not admissible(xs[a], xs[b], params):
                raise NotAdmissible(f"({xs[a]}, {xs[b]}) not admissible")
    q = params.q
    n2 = len(xs)
    lhs = ZERO
    plain = ZERO
    for lam in enumerate_partitions(cap, n2):
        if not is_conjugate_even(lam):
            continue
        fw = f_skew((), lam, xs, params)
        if fw == 0:
            continue
        b = even_pair_coefficient(lam, params)
        plain += b * fw
        m0 = n2 - len(lam)
        coeff = ONE
        for k in range(1, m0 // 2 + 1):
            coeff *= ONE - u * q ** (2 * k - 1)
        lhs += coeff * b * fw
    rhs = refined_littlewood_rhs(xs, u, params)
    closed = ONE
    for a in range(len(xs)):
        for b_ in range(a + 1, len(xs)):
            closed *= cauchy_kernel(xs[a], xs[b_], params)
    tail = closed - plain
    if tail < 0:
        raise InvalidParams("plain Littlewood partial sum exceeded its closed form")
    return _truncated_report(
        f"refined-littlewood[2n={n2},u={u}]", lhs, rhs, tail, detail=f"cap={cap}",
    )


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

FIXTURE_POINTS = (
    ModelParams.make("1/3", "-1/2", "1/2", ("1/4", "1/5", "1/6", "1/7")),
    ModelParams.make("2/5", "-1/3", "1/2", ("1/4", "1/5", "1/6", "1/7")),
    ModelParams.make("1/7", "-3/5", "1/2", ("1/4", "1/5", "1/6", "1/7")),
)


def run_suite(points=FIXTURE_POINTS, cap=30, only=None, corrupt=False):
    """Run every check at the given parameter points; returns a list of CheckReport.

    `only` filters by substring of the check name.  `corrupt` is a test
    hook that deliberately perturbs one reported value so the failure path
    of downstream tooling can be exercised.
    """
    reports = []
    for idx, params in enumerate(points):
        x, y = params.x[0], params.x[1]
        named = [
            ("intertwining", lambda p=params, x=x, y=y: check_intertwining(p, x, y)),
            ("intertwining-star", lambda p=params, x=x, y=y: check_intertwining_star(p, x, y)),
            ("reflection", lambda p=params, x=x, y=y: check_reflection(p, x)),
            ("r-stochastic", lambda p=params, x=x, y=y: check_r_stochastic(p, x, y)),
            ("cauchy-closed-form", lambda p=params, x=x, y=y: check_cauchy_closed_form(x, y, p)),
            ("skew-cauchy",
             lambda p=params, x=x, y=y: check_skew_cauchy((), (), x, y, max(cap, 12), p)),
            ("skew-cauchy",
             lambda p=params, x=x, y=y: check_skew_cauchy((1,), (), x, y, max(cap, 12), p)),
            ("skew-littlewood",
             lambda p=params, x=x, y=y: check_skew_littlewood((3, 1), (x,), cap, p)),
            ("skew-littlewood",
             lambda p=params, x=x, y=y: check_skew_littlewood((), (x, y), cap, p)),
            ("refined-cauchy",
             lambda p=params, x=x, y=y: check_refined_cauchy((x,), (y,), p.u, cap, p)),
            ("refined-cauchy", lambda p=params, x=x, y=y: check_refined_cauchy(
                (p.x[0], p.x[2]), (p.x[1], p.x[3]), p.u, max(cap, 25), p)),
            ("refined-littlewood",
             lambda p=params, x=x, y=y: check_refined_littlewood((x, y), p.u, cap, p)),
        ]
        for name, thunk in named:
            if only and only not in name:
                continue
            rep = thunk()
            rep.detail = (f"point={idx} " + rep.detail).strip()
            reports.append(rep)
    if corrupt and reports:
        reports[0] = CheckReport(
            reports[0].name, reports[0].mode, reports[0].lhs + 1, reports[0].rhs,
            False, detail="deliberately corrupted (test hook)",
        )
    return reports
