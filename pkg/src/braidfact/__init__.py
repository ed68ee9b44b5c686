"""Cuspidal braid factorizations of the full twist: verification, Hurwitz
equivalence search, curve-complement presentations, branched-cover
enumeration."""

__version__ = "0.1.0"

from .braids import (
    BraidWord,
    GarsideNormalForm,
    artin_action,
    compose,
    conjugate,
    equals,
    exponent_sum,
    free_reduce,
    full_twist,
    garside_key,
    half_twist,
    invert,
    is_central,
    normal_form,
    permutation_of,
    power,
)
from .errors import (
    BraidFactError,
    DegenerateDegree,
    NegativeGenus,
    OrbitBoundExceeded,
    ParseError,
    RhoOutOfRange,
    StrandMismatch,
    UnverifiedFactorization,
)
from .permutations import Permutation
from .words import FreeWord

__all__ = [
    "BraidWord",
    "FreeWord",
    "GarsideNormalForm",
    "Permutation",
    "BraidFactError",
    "DegenerateDegree",
    "NegativeGenus",
    "OrbitBoundExceeded",
    "ParseError",
    "RhoOutOfRange",
    "StrandMismatch",
    "UnverifiedFactorization",
    "artin_action",
    "compose",
    "conjugate",
    "equals",
    "exponent_sum",
    "free_reduce",
    "full_twist",
    "garside_key",
    "half_twist",
    "invert",
    "is_central",
    "normal_form",
    "permutation_of",
    "power",
]
