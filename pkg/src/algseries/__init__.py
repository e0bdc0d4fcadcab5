"""Exact computer algebra for algebraic power series in one variable.

Series are handled through their minimal polynomials and the canonical
coordinates (constant, head, e, tail polynomial); see
:mod:`algseries.stratification`.
"""

from .errors import (AlgSeriesError, BudgetExceeded, FieldNotFinite, IFTViolation,
                     InseparableOrNotMinimal, InsufficientData, InsufficientPrecision,
                     NotABranch, ParseError)
from .exact_algebra import GF, QQ, BiPoly, FieldDescriptor, SeriesTrunc, UniPoly, parse_bipoly
from .hensel import hensel_lift, hensel_lift_newton, ord_x, universal_root
from .stratification import (AlgSeries, StratumSignature, embedding_dim, in_C, is_irreducible,
                             minpoly_reconstruct, phi_compose, phi_decompose, signature,
                             strata_membership)

__all__ = [
    "AlgSeriesError", "BudgetExceeded", "FieldNotFinite", "IFTViolation",
    "InseparableOrNotMinimal", "InsufficientData", "InsufficientPrecision", "NotABranch",
    "ParseError", "GF", "QQ", "BiPoly", "FieldDescriptor", "SeriesTrunc", "UniPoly",
    "parse_bipoly", "hensel_lift", "hensel_lift_newton", "ord_x", "universal_root",
    "AlgSeries", "StratumSignature", "embedding_dim", "in_C", "is_irreducible",
    "minpoly_reconstruct", "phi_compose", "phi_decompose", "signature", "strata_membership",
]
