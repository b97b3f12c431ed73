"""Dynamic stochastic six-vertex model in a half-quadrant, and its particle dual.

The model is a random height function h(i, j) on 0 <= i <= j <= T with
h(0, j) = 0, grown along anti-diagonals.  Bulk sites use the two-outcome
bulk length tables; diagonal sites use the boundary tables, whose branch
depends on the parity of the height at the previous diagonal point - that
parity dependence is what makes the model "dynamic".  Every height
increment is 0 or 1 in both lattice directions, so a height field encodes
an ensemble of up-right paths, recoverable explicitly.

Reading the rows of the complemented path ensemble as time slices gives a
discrete-time particle system on the half-line with an open boundary:
site i at time t is occupied iff the height does not grow across column
t - i + 1 at level t + 1/2.  One time step resolves particles from right
to left: a particle may hop right one site (bulk coefficient c), or fly
left over holes (factors b per hole) until it parks (factor 1 - b), is
forced to park next to the previous particle, or reaches the corner,
where the parity of t - N(t) decides between parking at site 1 and
leaving the system.  When no flight reaches the corner, an even corner
injects a new particle at site 1 with probability c.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .exact import (
    InconsistentHeights,
    InvalidParams,
    ONE,
    _sample_from_cumulative,
    cumulative_boundaries,
)
from .transitions import length_patterns


def b_c_coeffs(i, j, params):
    """Bulk jump coefficients (b_ij, c_ij) of the vertex at (i, j), 1 <= i <= j.

    b = q(1 - x_{i-1} x_j)/(1 - q x_{i-1} x_j), c = (1 - x_{i-1} x_j)/(1 - q x_{i-1} x_j).
    """
    if not 1 <= i <= j:
        raise InvalidParams(f"need 1 <= i <= j, got ({i}, {j})")
    q = params.q
    xx = params.spectral(i - 1) * params.spectral(j)
    den = ONE - q * xx
    if den == 0:
        raise InvalidParams("1 - q x_{i-1} x_j vanished")
    return q * (ONE - xx) / den, (ONE - xx) / den


def ds6v_sample(T, rng, params, per_cell_streams=True):
    """Sample the height field {(i, j): h} for 0 <= i <= j <= T.

    With per_cell_streams (the default) every cell draws from its own
    substream keyed (i, j), making the result independent of evaluation
    order; per_cell_streams=False draws sequentially in sweep order from
    `rng`, which is faster and fine for bulk Monte Carlo.
    """
    params.require_probabilistic()
    h = {(0, j): 0 for j in range(T + 1)}
    pats = {}
    for total in range(2, 2 * T + 1):
        for i in range(1, total // 2 + 1):
            j = total - i
            if j > T:
                continue
            cell_rng = rng.substream(i, j) if per_cell_streams else rng
            key = (i - 1, j)
            pat = pats.get(key)
            if pat is None:
                pat = _length_pattern_tables(params.spectral(i - 1), params.spectral(j), params)
                pats[key] = pat
            if i < j:
                base = h[(i - 1, j - 1)]
                da, db = h[(i, j - 1)] - base, h[(i - 1, j)] - base
            else:
                base = h[(i - 1, i - 1)]
                da, db = base % 2, h[(i - 1, i)] - base
            deltas, cum = pat[(da, db)]
            h[(i, j)] = base + deltas[_sample_from_cumulative(cum, cell_rng)]
    return h


@lru_cache(maxsize=None)
def _length_pattern_tables(x, y, params):
    """length_patterns with precomputed exact cumulative boundaries."""
    return {
        pat: (deltas, cumulative_boundaries(probs))
        for pat, (deltas, probs) in length_patterns(x, y, params).items()
    }


def check_heights(h):
    """Monotone 0/1 increments in both directions and a zero pinned column."""
    for (i, j), v in h.items():
        if i == 0 and v != 0:
            raise InconsistentHeights(f"h(0, {j}) = {v} != 0")
        if (i, j + 1) in h and h[(i, j + 1)] - v not in (0, 1):
            raise InconsistentHeights(f"bad vertical step at {(i, j)}")
        if (i + 1, j) in h and h[(i + 1, j)] - v not in (0, 1):
            raise InconsistentHeights(f"bad horizontal step at {(i, j)}")
    return True


def paths_from_heights(h):
    """Recover the up-right path ensemble: occupied vertical and horizontal edges.

    The vertical edge (i, j) -> (i, j+1) is occupied iff h(i, j) - h(i-1, j) = 1.
    Horizontal occupancies follow by conservation at each bulk vertex; a
    new path enters at every (1, j).  Diagonal vertices may absorb or emit
    paths, so conservation is only enforced strictly above the diagonal.
    Returns (vertical, horizontal): sets of edge-origin lattice points,
    where horizontal (i, j) means the edge (i, j) -> (i+1, j).
    """
    check_heights(h)
    T = max(j for (_, j) in h)
    vert = set()
    for (i, j), v in h.items():
        if i >= 1 and (i - 1, j) in h:
            if v - h[(i - 1, j)] == 1:
                vert.add((i, j))
    horiz = set()
    # horizontal edge west of (i, j) for i >= 1: occupied iff a path is mid-flight,
    # i.e. h(i-1, j) == h(i-1, j-1) fails to account ... recover by conservation:
    # left(i,j) = 1 - (h(i-1,j) - h(i-1,j-1)) for i >= 2; left(1,j) = 1 (boundary inflow)
    for j in range(1, T + 1):
        for i in range(1, j + 1):
            if i == 1:
                left = 1
            else:
                left = 1 - (h[(i - 1, j)] - h[(i - 1, j - 1)])
            if left:
                horiz.add((i - 1, j))
            bottom = (h[(i, j - 1)] - h[(i - 1, j - 1)]) if (i, j - 1) in h else 0
            top = h[(i, j)] - h[(i - 1, j)]
            right = left + bottom - top
            if i < j and right not in (0, 1):
                raise InconsistentHeights(f"conservation fails at vertex {(i, j)}")
    return vert, horiz


def heights_from_paths(vert, T):
    """Rebuild the height field from vertical edge occupancies (round-trip inverse)."""
    h = {(0, j): 0 for j in range(T + 1)}
    for j in range(1, T + 1):
        for i in range(1, j + 1):
            h[(i, j)] = h[(i - 1, j)] + (1 if (i, j) in vert else 0)
    return h


@dataclass(frozen=True)
class ParticleState:
    """Occupied sites at one time slice, rightmost first: positions[0] > positions[1] > ..."""

    t: int
    positions: tuple

    def occupancy(self, i):
        return 1 if i in self.positions else 0

    def count(self):
        return len(self.positions)

    def current(self, x):
        """N_x(t): number of particles at sites >= x."""
        return sum(1 for y in self.positions if y >= x)


def particles_from_heights(h, t):
    """Particle state at time t: site i occupied iff h(t-i+1, t) - h(t-i, t) = 0."""
    pos = []
    for i in range(1, t + 1):
        c = t - i + 1
        if h[(c, t)] - h[(c - 1, t)] == 0:
            pos.append(i)
    pos.sort(reverse=True)
    return ParticleState(t, tuple(pos))


def particle_step(state, rng, params):
    """One time step t -> t+1 of the dual particle system, resolved right to left.

    Implements the jump rules with exact probabilities: right hops with
    coefficient c, left flights with b factors, forced parking next to an
    updated right neighbour, corner parity (of t - N(t)) choosing between
    parking at site 1 and ejection, and corner creation when no flight
    reaches it.  The law coincides with reading two consecutive rows of
    the height field (which tests verify exactly).
    """
    t = state.t
    corner_parity_even = (t - state.count()) % 2 == 0
    old = list(state.positions)  # descending
    occupied_old = set(old)
    new_positions = []
    prev_new = None  # position of the already-updated right neighbour
    corner_used = False
    for idx, ypos in enumerate(old):
        col0 = t - ypos + 1
        blocked = prev_new is not None and prev_new == ypos + 1
        landed = None
        if not blocked:
            _, c = b_c_coeffs(col0, t + 1, params)
            if _bernoulli(c, rng):
                landed = ypos + 1  # right hop
        if landed is None:
            # leftward flight over columns col0+1, col0+2, ...
            c_col = col0 + 1
            while True:
                site_scanned = t - c_col + 1  # old site the flight is passing
                if c_col == t + 1:
                    # the corner: park at site 1 or leave the system
                    corner_used = True
                    if corner_parity_even:
                        landed = 1
                    else:
                        b, _ = b_c_coeffs(t + 1, t + 1, params)
                        landed = None if _bernoulli(b, rng) else 1
                    break
                if site_scanned in occupied_old:
                    landed = site_scanned + 1  # forced to park next to the blocker
                    break
                b, _ = b_c_coeffs(c_col, t + 1, params)
                if not _bernoulli(b, rng):
                    landed = site_scanned + 1  # parks: site one right of the hole
                    break
                c_col += 1
        if landed is not None:
            new_positions.append(landed)
            prev_new = landed
        # ejected particles leave prev_new untouched (only the leftmost can eject)
    if not corner_used:
        if corner_parity_even:
            _, c = b_c_coeffs(t + 1, t + 1, params)
            if _bernoulli(c, rng):
                new_positions.append(1)
        # odd corner with no incoming flight never creates
    return ParticleState(t + 1, tuple(sorted(new_positions, reverse=True)))


@lru_cache(maxsize=None)
def _bernoulli_cum(p):
    return cumulative_boundaries((p, ONE - p))


def _bernoulli(p, rng):
    return _sample_from_cumulative(_bernoulli_cum(p), rng) == 0


def particle_trajectory(T, rng, params):
    """Run the particle system from the empty state through time T (sequential draws)."""
    states = [ParticleState(0, ())]
    for _ in range(T):
        states.append(particle_step(states[-1], rng, params))
    return states


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def heights_to_csv(h):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["i", "j", "h"])
    for (i, j), v in sorted(h.items()):
        w.writerow([i, j, v])
    return buf.getvalue()


def heights_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["i", "j", "h"]:
        raise InconsistentHeights("bad CSV header")
    return {(int(i), int(j)): int(v) for i, j, v in rows[1:]}


def particles_to_csv(states):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["t", "site", "occupied"])
    for st in states:
        top = max([st.t] + list(st.positions))
        for site in range(1, top + 1):
            w.writerow([st.t, site, st.occupancy(site)])
    return buf.getvalue()


def particles_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["t", "site", "occupied"]:
        raise InvalidParams("bad CSV header")
    by_t = {}
    for t, site, occ in rows[1:]:
        by_t.setdefault(int(t), [])
        if int(occ):
            by_t[int(t)].append(int(site))
    states = [] if 0 in by_t else [ParticleState(0, ())]
    for t in sorted(by_t):
        states.append(ParticleState(t, tuple(sorted(by_t[t], reverse=True))))
    return states


def currents_to_json(states):
    out = []
    for st in states:
        top = max([1] + [y for y in st.positions])
        out.append({
            "t": st.t,
            "N": st.count(),
            "N_x": {str(xx): st.current(xx) for xx in range(1, top + 1)},
        })
    return json.dumps(out)
