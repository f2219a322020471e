"""Exact continued-fraction symmetry algebra: folding, continuants, iterated series, specializability."""

from .cf import (
    CFWord,
    adjust_constant_term,
    convergents,
    detect_k_fold,
    evaluate,
    expand_rational,
    expand_ratfunc,
    is_semi_specializable,
    is_specializable,
    normalize_to_simple,
    stable_prefix,
)
from .exact import X, Polynomial, RationalFunction

__version__ = "0.1.0"

__all__ = [
    "CFWord",
    "Polynomial",
    "RationalFunction",
    "X",
    "adjust_constant_term",
    "convergents",
    "detect_k_fold",
    "evaluate",
    "expand_rational",
    "expand_ratfunc",
    "is_semi_specializable",
    "is_specializable",
    "normalize_to_simple",
    "stable_prefix",
]
