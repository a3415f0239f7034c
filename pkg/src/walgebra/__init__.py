"""Exact presentations of finite W-algebras over simple Lie algebras.

The pipeline: build a root system and Chevalley basis, pick a nilpotent
orbit by its weighted Dynkin diagram, construct the sl2-triple and the
adapted graded basis, solve for the distinguished generators of the
W-algebra, rewrite their commutators as polynomial relations, and
enumerate the one-dimensional representations.  Everything is computed
in exact rational arithmetic with a running certificate of the primes
inverted along the way.
"""

from .report import run_pipeline

__version__ = "0.1.0"

__all__ = ["run_pipeline", "__version__"]
