"""Exhaustive factorization of bivariate polynomials over prime fields.

A factor Q of P with T-degree d1 has leading T-coefficient dividing the
leading T-coefficient of P and constant T-coefficient dividing P(x, 0), so
only those coefficients are drawn from divisor lists; the remaining ones
range over every polynomial of x-degree at most height(P).  Candidates are
normalized so the leading x-coefficient of their leading T-coefficient is 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import FieldNotFinite
from .poly import BiPoly, UniPoly, _divmod, _trim, content_x


def _all_polys(p: int, max_deg: int):
    """Every polynomial over F_p of degree <= max_deg as a trimmed tuple."""
    if max_deg < 0:
        yield ()
        return
    for c in product(range(p), repeat=max_deg + 1):
        yield _trim(c)


@lru_cache(maxsize=65536)
def monic_divisors(p: int, f: tuple) -> tuple[tuple, ...]:
    """All monic divisors of the nonzero polynomial ``f`` over F_p."""
    from .field import GF

    F = GF(p)
    deg = len(f) - 1
    out = []
    for k in range(deg + 1):
        for low in product(range(p), repeat=k):
            g = tuple(low) + (1,)
            if not _divmod(f, g, F)[1]:
                out.append(g)
    return tuple(out)


def _require_finite(P: BiPoly):
    if not P.field.is_finite:
        raise FieldNotFinite("trial factorization needs a finite field")


def trial_factor(P: BiPoly) -> tuple[BiPoly, BiPoly] | None:
    """Return ``(Q, R)`` with P = Q*R and both factors of positive T-degree,
    or None when no such factorization exists.

    P must be primitive (content 1) over a prime field; a primitive P then
    factors nontrivially only into factors of positive T-degree.
    """
    _require_finite(P)
    F = P.field
    p = F.characteristic
    d = P.t_degree
    if d < 2:
        return None
    if not P.rows[0]:
        T = BiPoly.T(F)
        return T, P.exact_div(T)
    lc = P.rows[-1]
    tc = P.rows[0]
    h = P.height
    scalars = range(1, p)
    for d1 in range(1, d // 2 + 1):
        for a in monic_divisors(p, lc):
            for b_monic in monic_divisors(p, tc):
                for s in scalars:
                    b = tuple((s * c) % p for c in b_monic)
                    for middle in product(_all_polys_cached(p, h), repeat=d1 - 1):
                        Q = BiPoly._raw(F, (b,) + middle + (a,))
                        R = P.exact_div(Q)
                        if R is not None:
                            return Q, R
    return None


@lru_cache(maxsize=64)
def _all_polys_cached(p: int, max_deg: int) -> tuple:
    return tuple(_all_polys(p, max_deg))


def is_irreducible_unipoly(f: UniPoly) -> bool:
    _require_finite(BiPoly.from_unipoly(f))
    if f.degree < 1:
        return False
    return len(monic_divisors(f.field.characteristic, f.monic().coeffs)) == 2


def is_irreducible(P: BiPoly) -> bool:
    """Irreducibility in k[x, T] over a prime field."""
    _require_finite(P)
    if P.is_zero():
        return False
    if P.t_degree == 0:
        return is_irreducible_unipoly(P.coeff_T(0))
    a, S = content_x(P)
    if a.degree > 0:
        return False
    return trial_factor(S) is None
