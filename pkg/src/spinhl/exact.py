"""Exact rational arithmetic, model parameters and reproducible randomness.

Every weight and probability in this package is a ``fractions.Fraction``.
The stdlib type already maintains the invariants we need (reduced form,
positive denominator, exact field arithmetic), so we use it directly and
only add parsing helpers on top.

Randomness is explicit: a :class:`RandomSource` wraps a counter-style
numpy bit generator keyed by ``(seed, stream)``.  Identical keys replay
identical bit sequences; distinct stream ids give independent streams
(numpy's ``SeedSequence`` spawn-key guarantee).  Categorical sampling is
done by lazy binary refinement of a uniform dyadic interval against exact
rational cumulative weights, so sampled laws are exactly the requested
ones, with no float rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

Frac = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InvalidParams(ValueError):
    """Parameter combination makes a required denominator vanish or a mode check fail."""


class NonStochastic(ValueError):
    """A would-be probability vector does not sum exactly to one."""


class NotAdmissible(ValueError):
    """Spectral parameter pair violates the admissibility inequality."""


class ZeroSector(ValueError):
    """All candidate weights in a sampling step vanish."""


class ScanCapExceeded(RuntimeError):
    """A column scan ran past its safety cap (inadmissible parameters?)."""


class InconsistentHeights(ValueError):
    """Height data violates monotonicity or path conservation."""


class DegenerateVandermonde(ValueError):
    """Repeated spectral values where distinctness is required."""


class DimensionMismatch(ValueError):
    """Matrix shape unsuitable for the requested exact kernel."""


class InvalidPath(ValueError):
    """Not a caudate zigzag path, or data inconsistent with one."""


class ConfigError(ValueError):
    """Bad run configuration."""


def frac(value, den=None):
    """Coerce to an exact Fraction.  Accepts ints, Fractions and strings like '-1/2'."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise InvalidParams(f"refusing float {value!r}; pass a string or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class ModelParams:
    """Global parameters: quantization q, spin s, refinement u, spectral sequence x.

    Two usage modes.  In *identity mode* any rationals are allowed as long
    as the weight denominators stay nonzero (checked where they are
    computed).  In *probabilistic mode* the samplers additionally require
    q in (0,1), s in (-1,0) and every x_i in [0,1), which makes all
    one-row weights non-negative.
    """

    q: Fraction
    s: Fraction
    u: Fraction = ONE
    x: tuple = ()

    @staticmethod
    def make(q, s, u=1, x=()):
        return ModelParams(frac(q), frac(s), frac(u), tuple(frac(v) for v in x))

    def spectral(self, i):
        if i >= len(self.x):
            raise InvalidParams(f"spectral parameter x_{i} not supplied (have {len(self.x)})")
        return self.x[i]

    def is_probabilistic(self):
        return (
            ZERO < self.q < ONE
            and -ONE < self.s < ZERO
            and all(ZERO <= v < ONE for v in self.x)
        )

    def require_probabilistic(self):
        if not self.is_probabilistic():
            raise InvalidParams(
                "probabilistic mode needs q in (0,1), s in (-1,0), x_i in [0,1); "
                f"got q={self.q}, s={self.s}, x={self.x}"
            )


def default_spectral(n):
    """Deterministic default spectral sequence x_0..x_{n-1}: small rationals in (0, 1/2)."""
    return tuple(Fraction(1, i + 4) for i in range(n))


def admissible(x, y, params):
    """True iff (x-s)(y-s) < (1-sx)(1-sy); the pairwise condition every Cauchy-type sum needs."""
    s = params.s
    return (x - s) * (y - s) < (ONE - s * x) * (ONE - s * y)


def convergence_ratio(x, y, params):
    """Geometric ratio (x-s)(y-s)/((1-sx)(1-sy)) governing one-variable Cauchy tails.

    Raises InvalidParams on a vanishing denominator.  Admissibility of
    (x, y) is exactly the statement that this ratio is < 1.
    """
    s = params.s
    den = (ONE - s * x) * (ONE - s * y)
    if den == 0:
        raise InvalidParams("(1-sx)(1-sy) vanished in convergence ratio")
    return (x - s) * (y - s) / den


@dataclass
class RandomSource:
    """Reproducible bit source keyed by (seed, stream).

    substream(*key) derives an independent deterministic child source;
    simulation modules use substream(i, j) per lattice cell so results do
    not depend on evaluation order.
    """

    seed: int
    stream: int = 0
    _key: tuple = field(default=(), repr=False)
    _gen: object = field(default=None, repr=False)
    _buf: int = field(default=0, repr=False)
    _nbits: int = field(default=0, repr=False)

    def _generator(self):
        if self._gen is None:
            ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream, *self._key))
            self._gen = np.random.Generator(np.random.PCG64(ss))
        return self._gen

    def substream(self, *key):
        return RandomSource(self.seed, self.stream, _key=self._key + tuple(key))

    def bit(self):
        if self._nbits == 0:
            self._buf = int(self._generator().integers(0, 1 << 63, dtype=np.uint64))
            self._nbits = 63
        b = self._buf & 1
        self._buf >>= 1
        self._nbits -= 1
        return b

    def integers(self, low, high):
        """Uniform integer in [low, high); convenience passthrough (not used by exact sampling)."""
        return int(self._generator().integers(low, high))


def sample_categorical(probs, rng):
    """Exact draw of an index with the given Fraction probabilities.

    probs must be non-negative Fractions summing exactly to 1
    (NonStochastic otherwise).  A uniform variate is refined bit by bit as
    a dyadic interval [a, a+1)/2^k and compared against the exact
    cumulative boundaries; the draw resolves once the interval sits inside
    a single cell, so the output law is exactly `probs`.
    """
    cum = cumulative_boundaries(probs)
    return _sample_from_cumulative(cum, rng)


def cumulative_boundaries(probs):
    """Exact cumulative sums (num, den) for sample_categorical; validates stochasticity."""
    total = ZERO
    cum = []
    for p in probs:
        if p < 0:
            raise NonStochastic(f"negative probability {p}")
        total += p
        cum.append((total.numerator, total.denominator))
    if total != ONE:
        raise NonStochastic(f"probabilities sum to {total}, not 1")
    return cum

def _sample_from_cumulative(cum, rng):
    a = 0
    k = 0
    lo_idx = 0  # first cell whose right boundary exceeds a/2^k
    while True:
        # advance lo_idx while cum[lo_idx] <= a / 2^k
        while True:
            num, den = cum[lo_idx]
            if num * (1 << k) <= a * den:
                lo_idx += 1
            else:
                break
        # resolved once (a+1)/2^k <= cum[lo_idx]
        num, den = cum[lo_idx]
        if (a + 1) * den <= num * (1 << k):
            return lo_idx
        a = (a << 1) | rng.bit()
        k += 1
