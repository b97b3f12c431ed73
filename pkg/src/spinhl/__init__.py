"""Exact-arithmetic spin Hall-Littlewood vertex-model toolkit.

Submodules:

  exact        rational scalars, parameters, reproducible exact sampling
  partitions   partitions, interlacing, conjugate-even pairings
  weights      the vertex Boltzmann weight tables
  sshl         one-row and skew f/g functions, diagonal tail weight
  identities   exact and certified-truncation identity checks
  transitions  bijectivised forward/backward Markov operators
  field        the half-space random field and its zigzag-path measure
  ds6v         dynamic six-vertex heights and the dual particle system
  cli          command line front end
"""

from .exact import ModelParams, RandomSource, frac

__all__ = ["ModelParams", "RandomSource", "frac"]
__version__ = "0.1.0"
