"""The dual particle system: discrete time, half line, open boundary.

Complementing the six-vertex path ensemble and reading rows as time
slices gives particles that hop right by one, fly left over holes, and
interact with a reservoir at the origin whose behaviour alternates with
the parity of t - N(t).  The particle count always satisfies
N(t) = t - h(t, t).

Run:  python demos/particle_dynamics.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from spinhl.exact import ModelParams, RandomSource
from spinhl.ds6v import ds6v_sample, particle_trajectory, particles_from_heights

# livelier spectral values make growth visible at small sizes
params = ModelParams.make("1/2", "-1/2", "1/2", [f"6/{10 + i}" for i in range(20)])

# --- a trajectory from the rule-based sampler ---------------------------------
states = particle_trajectory(16, RandomSource(seed=9, stream=2), params)
width = max((max(s.positions) if s.positions else 1) for s in states)
print("rule-based trajectory (o = particle):")
for st in states:
    row = "".join("o" if st.occupancy(i) else "." for i in range(1, width + 1))
    print(f"  t={st.t:2d}  {row}  N={st.count()}")

# --- the same law extracted from a height field --------------------------------
h = ds6v_sample(16, RandomSource(seed=9, stream=3), params)
print("\nheight-extracted trajectory of an independent field:")
for t in range(17):
    st = particles_from_heights(h, t)
    row = "".join("o" if st.occupancy(i) else "." for i in range(1, width + 1))
    ok = st.count() == t - h[(t, t)]
    print(f"  t={st.t:2d}  {row}  N={st.count()}  N==t-h(t,t): {ok}")

# --- currents -------------------------------------------------------------------
last = states[-1]
print("\ncurrents N_x(T) of the rule-based run:",
      [last.current(x) for x in range(1, width + 1)])
