"""Exact fields, polynomials, truncated series, resultants and factorization."""

from .factor import is_irreducible, monic_divisors, trial_factor
from .field import GF, QQ, FieldDescriptor
from .poly import NEG_INF, BiPoly, SeriesTrunc, UniPoly, bipoly_eval_series, content_x
from .resultant import resultant_bivariate, resultant_T
from .text import format_poly, format_series, parse_bipoly, parse_terms, parse_unipoly

__all__ = [
    "NEG_INF", "QQ", "GF", "FieldDescriptor", "UniPoly", "BiPoly", "SeriesTrunc",
    "bipoly_eval_series", "content_x", "resultant_T", "resultant_bivariate",
    "trial_factor", "is_irreducible", "monic_divisors",
    "parse_bipoly", "parse_unipoly", "parse_terms", "format_poly", "format_series",
]
