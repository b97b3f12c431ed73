"""Growing the half-space random field and checking a zigzag marginal.

The field assigns a partition to every lattice point (i, j), 0 <= i <= j,
with the column i = 0 pinned empty.  It grows along anti-diagonals: bulk
points use the forward bulk operator conditioned on the west and south
neighbours, diagonal points use the boundary operator, whose hidden
conditioning partition is the conjugate-even cover of the corner.

Run:  python demos/field_growth.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fractions import Fraction as F

from spinhl.exact import ModelParams, RandomSource
from spinhl.field import check_field_invariants, normalization, path_measure, sample_field
from spinhl.partitions import format_partition
from spinhl.transitions import boundary_forward_distribution

# livelier spectral values make growth visible at small sizes
params = ModelParams.make("1/2", "-1/2", "1/2", [f"6/{10 + i}" for i in range(10)])

# --- one sampled field ------------------------------------------------------
rng = RandomSource(seed=20240817, stream=0)
field = sample_field(6, rng, params)
check_field_invariants(field)

print("sampled field (rows j top-down, columns i left-right):")
for j in range(6, -1, -1):
    row = "  ".join(f"{format_partition(field[(i, j)]):>10}" for i in range(0, j + 1))
    print(f"  j={j}: {row}")

# Every cell interlaces its west and south neighbours; re-sampling with the
# same seed reproduces the field bit for bit because each cell draws from
# its own substream keyed (i, j).
again = sample_field(6, RandomSource(seed=20240817, stream=0), params)
print("reproducible:", again == field)

# --- the zigzag path marginal ----------------------------------------------
# The law of the partitions along an up-left path from the diagonal is an
# explicit product of one-row weights over the path normalization, which
# the contraction principle computes cell by cell.
hook = [(1, 1), (0, 1)]
print("Z over the single diagonal cell:", normalization(hook, params))
law, _ = boundary_forward_distribution((), (), params.x[0], params.x[1], params, 20)
for lam in [(), (1,), (2,), (3,)]:
    pm = path_measure(hook, {(1, 1): lam, (0, 1): ()}, params)
    print(f"  P(corner = {format_partition(lam):>3}) = {pm}  (sampler law: {law[lam]})")

total = sum(
    path_measure(hook, {(1, 1): lam, (0, 1): ()}, params)
    for lam in [(k,) for k in range(1, 25)] + [()]
)
print("mass of the first 25 shapes:", float(total))
