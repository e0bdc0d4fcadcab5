"""Sylvester resultants by fraction-free (Bareiss) elimination.

Sign convention: ``resultant(P, Q) = lc(P)^deg(Q) * prod Q(alpha)`` over the
roots alpha of P, which is the determinant of the Sylvester matrix with the
shifted rows of P placed first.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

from .poly import BiPoly, UniPoly

R = TypeVar("R")


def sylvester_matrix(p: Sequence[R], q: Sequence[R], zero: R) -> list[list[R]]:
    """Sylvester matrix of ``p`` and ``q`` given as ascending coefficient lists."""
    n, m = len(p) - 1, len(q) - 1
    size = n + m
    rows = []
    for k in range(m):
        row = [zero] * size
        for t, c in enumerate(reversed(p)):
            row[k + t] = c
        rows.append(row)
    for k in range(n):
        row = [zero] * size
        for t, c in enumerate(reversed(q)):
            row[k + t] = c
        rows.append(row)
    return rows


def bareiss_det(M: list[list[R]], one: R, exact_div: Callable[[R, R], R]) -> R:
    """Determinant over an integral domain using only exact divisions."""
    n = len(M)
    if n == 0:
        return one
    A = [list(r) for r in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(A[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return A[k][k] * 0
        piv = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = exact_div(A[i][j] * piv - aik * A[k][j], prev)
            A[i][k] = A[i][k] * 0
        prev = piv
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def _is_zero(v) -> bool:
    if hasattr(v, "is_zero"):
        return v.is_zero()
    return not v


def resultant(p: Sequence[R], q: Sequence[R], zero: R, one: R,
              exact_div: Callable[[R, R], R]) -> R:
    """Resultant of two polynomials given by ascending coefficient lists
    over an integral domain (leading coefficients must be nonzero)."""
    return bareiss_det(sylvester_matrix(p, q, zero), one, exact_div)


def _bipoly_div(a: BiPoly, b: BiPoly) -> BiPoly:
    out = a.exact_div(b)
    if out is None:
        raise ArithmeticError("inexact division during elimination")
    return out


def resultant_T(P: BiPoly, Q: BiPoly) -> UniPoly:
    """Resultant of P and Q with respect to T, a polynomial in x."""
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    F = P.field
    return resultant(P.t_coeffs(), Q.t_coeffs(), UniPoly(F), UniPoly(F, (1,)), UniPoly.exact_div)


def resultant_bivariate(p: Sequence[BiPoly], q: Sequence[BiPoly]) -> BiPoly:
    """Eliminate an auxiliary variable U from p(U), q(U) whose coefficients
    are polynomials in (x, T); the result is a polynomial in (x, T)."""
    F = p[0].field
    return resultant(list(p), list(q), BiPoly(F), BiPoly.constant(F, 1), _bipoly_div)
