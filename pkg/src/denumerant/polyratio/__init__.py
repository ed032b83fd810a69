"""Exact polynomial algebra over the rationals."""

from .algebra import (
    SquarefreeDecomposition,
    SquarefreeFactor,
    discriminant,
    discriminant_closed_form,
    interpolate,
    perfect_square_root,
    resultant,
    squarefree_decompose,
)
from .bipoly import BiPoly
from .factor import Factorization, ModularCheck, bifactor_search, no_solutions_mod_p
from .ratpoly import (
    BigInt,
    RatPoly,
    Rational,
    arith,
    format_fraction,
    poly_gcd,
    rational_sqrt,
    to_fraction,
)

__all__ = [
    "BiPoly",
    "BigInt",
    "Factorization",
    "ModularCheck",
    "RatPoly",
    "Rational",
    "SquarefreeDecomposition",
    "SquarefreeFactor",
    "arith",
    "bifactor_search",
    "discriminant",
    "discriminant_closed_form",
    "format_fraction",
    "interpolate",
    "no_solutions_mod_p",
    "perfect_square_root",
    "poly_gcd",
    "rational_sqrt",
    "resultant",
    "squarefree_decompose",
    "to_fraction",
]
