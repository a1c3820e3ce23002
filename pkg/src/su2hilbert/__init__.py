"""Hilbert series of SL2 covariants and SU2 symplectic quotients, in exact arithmetic."""

from .arith import LaurentExpansion, Poly, RationalFunction, laurent_at_one
from .engine import covariant_hilbert, invariant_hilbert, onshell_hilbert, upsilon
from .reps import ReprSpec, classify, cotangent_lift, decompose

__all__ = [
    "LaurentExpansion",
    "Poly",
    "RationalFunction",
    "ReprSpec",
    "classify",
    "cotangent_lift",
    "covariant_hilbert",
    "decompose",
    "invariant_hilbert",
    "laurent_at_one",
    "onshell_hilbert",
    "upsilon",
]
