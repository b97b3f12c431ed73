"""The half-space random field of partitions and its zigzag-path marginals.

The field lives on lattice points (i, j) with 0 <= i <= j <= T.  Column
i = 0 is pinned to the empty partition; everything else is grown along
anti-diagonals by the forward transition operators: bulk moves strictly
above the diagonal, boundary moves on it.  Edge (i,j) -> (i+1,j) carries
the spectral parameter x_i, edge (i,j-1) -> (i,j) carries x_j, and the
diagonal step into (n,n) carries x_n; hence the cell at (i,j) mixes
(x_{i-1}, x_j).

The joint law along a caudate zigzag path (an up-left path from a diagonal
anchor (n,n) to the column i = 0) factorizes into one-row f/g weights plus
the diagonal tail weight; ``path_measure`` evaluates that product and
``normalization`` computes its partition function by contracting the path
cell by cell, each contraction exchanging one corner for one Cauchy kernel
factor.
"""

from __future__ import annotations

import json

from .exact import InvalidPath, ONE, ZERO
from .identities import cauchy_kernel
from .partitions import interlaces
from .sshl import f_one_row, g_one_row, tail_weight
from .transitions import boundary_forward, bulk_forward, cell_sampler


def sample_field(T, rng, params, per_cell_streams=True):
    """Sample the half-space field up to level T; returns {(i, j): partition}.

    With per_cell_streams (the default) each cell draws from its own
    deterministic substream of `rng`, so the result depends only on
    (seed, stream, T) and not on evaluation order; per_cell_streams=False
    draws sequentially in sweep order, which is faster for Monte Carlo.
    """
    params.require_probabilistic()
    field = {}
    for j in range(T + 1):
        field[(0, j)] = ()
    ctxs = {}
    for total in range(2, 2 * T + 1):
        for i in range(1, total // 2 + 1):
            j = total - i
            if j > T:
                continue
            cell_rng = rng.substream(i, j) if per_cell_streams else rng
            ctx = ctxs.get((i - 1, j))
            if ctx is None:
                ctx = cell_sampler(params.spectral(i - 1), params.spectral(j), params)
                ctxs[(i - 1, j)] = ctx
            if i < j:
                field[(i, j)] = bulk_forward(
                    field[(i - 1, j - 1)], field[(i, j - 1)], field[(i - 1, j)],
                    params.spectral(i - 1), params.spectral(j), cell_rng, params, _ctx=ctx,
                )
            else:
                field[(i, i)] = boundary_forward(
                    field[(i - 1, i - 1)], field[(i - 1, i)],
                    params.spectral(i - 1), params.spectral(i), cell_rng, params, _ctx=ctx,
                )
    return field


def check_field_invariants(field):
    """Interlacing in both directions and the empty pinned column; raises on violation."""
    for (i, j), lam in field.items():
        if i == 0 and lam != ():
            raise ValueError(f"boundary column not empty at {(i, j)}")
        if (i, j + 1) in field and not interlaces(lam, field[(i, j + 1)]):
            raise ValueError(f"vertical interlacing fails at {(i, j)}")
        if (i + 1, j) in field and not interlaces(lam, field[(i + 1, j)]):
            raise ValueError(f"horizontal interlacing fails at {(i, j)}")
    return True


def field_to_json(field):
    cells = [
        {"i": i, "j": j, "parts": list(lam)}
        for (i, j), lam in sorted(field.items())
    ]
    return json.dumps({"cells": cells}, indent=0)


def field_from_json(text):
    data = json.loads(text)
    return {(c["i"], c["j"]): tuple(c["parts"]) for c in data["cells"]}


# ---------------------------------------------------------------------------
# caudate zigzag paths
# ---------------------------------------------------------------------------

def validate_path(vertices):
    """A caudate zigzag path: starts on the diagonal, steps -e1 or +e2, ends at i = 0."""
    vs = [tuple(v) for v in vertices]
    if not vs:
        raise InvalidPath("empty path")
    n, j0 = vs[0]
    if n != j0 or n < 0:
        raise InvalidPath(f"path must start on the diagonal, got {vs[0]}")
    for (a, b), (c, d) in zip(vs, vs[1:]):
        if not (0 <= a <= b):
            raise InvalidPath(f"vertex {(a, b)} outside the half-space")
        step = (c - a, d - b)
        if step not in ((-1, 0), (0, 1)):
            raise InvalidPath(f"illegal step {step} at {(a, b)}")
    if vs[-1][0] != 0:
        raise InvalidPath(f"path must end on the column i = 0, got {vs[-1]}")
    if not (0 <= vs[-1][0] <= vs[-1][1]):
        raise InvalidPath("endpoint outside the half-space")
    return vs


def path_measure(vertices, assignments, params, normalize=True):
    """Probability weight of the given partitions along a caudate zigzag path.

    `assignments` maps each path vertex to a partition (the endpoint at
    i = 0 must carry the empty one).  The weight is the diagonal tail
    weight at the anchor times g factors on +e2 steps (variable x_{j+1})
    and f factors on -e1 steps (variable x_{i-1}), divided by the
    contraction normalization unless normalize=False.
    """
    vs = validate_path(vertices)
    lam = {tuple(k): tuple(v) for k, v in assignments.items()}
    missing = [v for v in vs if v not in lam]
    if missing:
        raise InvalidPath(f"no partition assigned at {missing[0]}")
    if lam[vs[-1]] != ():
        raise InvalidPath("the i = 0 endpoint must carry the empty partition")
    n = vs[0][0]
    w = tail_weight(lam[vs[0]], params.spectral(n), params) if n > 0 else (
        ONE if lam[vs[0]] == () else ZERO
    )
    for (a, b), (c, d) in zip(vs, vs[1:]):
        cur, nxt = lam[(a, b)], lam[(c, d)]
        if c == a - 1:  # -e1 step: the partition shrinks; f factor on edge x_{a-1}
            w *= f_one_row(nxt, cur, params.spectral(c), params)
        else:  # +e2 step: the partition grows; g factor on edge x_{b+1}
            w *= g_one_row(cur, nxt, params.spectral(d), params)
        if w == 0:
            return ZERO
    if normalize:
        w /= normalization(vertices, params)
    return w


def normalization(vertices, params):
    """Partition function of a caudate zigzag path by corner contraction.

    Two moves, each multiplying the accumulated factor by a Cauchy kernel:
    (a) an up-then-left corner at (i, j) retracts to (i-1, j-1), giving
    Pi(x_{i-1}; x_j); (b) a leading left step off the diagonal anchor
    (n, n) retracts the anchor to (n-1, n-1), giving Pi(x_{n-1}; x_n).
    The order of moves does not matter (tested), and the all-vertical
    path on column 0 has partition function one.
    """
    vs = validate_path(vertices)
    z = ONE
    while True:
        if len(vs) == 1 or vs[0][0] == 0:
            return z
        # move (b): path leaves the diagonal anchor leftwards
        (n, _), (c, d) = vs[0], vs[1]
        if c == n - 1:
            z *= cauchy_kernel(params.spectral(n - 1), params.spectral(n), params)
            vs = [(n - 1, n - 1)] + vs[1:]
            continue
        # move (a): first up-then-left corner
        done = False
        for idx in range(1, len(vs) - 1):
            (a0, b0), (a1, b1), (a2, b2) = vs[idx - 1], vs[idx], vs[idx + 1]
            if b1 == b0 + 1 and a2 == a1 - 1:
                z *= cauchy_kernel(params.spectral(a1 - 1), params.spectral(b1), params)
                vs = vs[:idx] + [(a1 - 1, b1 - 1)] + vs[idx + 1:]
                done = True
                break
        if not done:
            raise InvalidPath(f"no contraction applies to {vs}")
