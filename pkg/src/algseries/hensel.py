"""Power-series roots of polynomials satisfying the implicit function theorem.

For P(x, T) with P(0, 0) = 0 and dP/dT(0, 0) != 0 there is exactly one power
series f with f(0) = 0 and P(x, f) = 0.  :func:`hensel_lift` computes it
coefficient by coefficient; :func:`hensel_lift_newton` is a precision-doubling
variant kept as a cross-check.  :func:`universal_root` runs the same
recurrence over the integer polynomial ring in the normalized coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import IFTViolation
from .exact_algebra import BiPoly, FieldDescriptor, SeriesTrunc, bipoly_eval_series


@dataclass(frozen=True)
class AbovePrecision:
    """Result of :func:`ord_x` when every known coefficient vanishes."""

    precision: int

    def __str__(self):
        return f">={self.precision}"


def ord_x(f: SeriesTrunc) -> int | AbovePrecision:
    """Order of ``f`` in x, or ``AbovePrecision(N)`` when f = 0 mod x^N."""
    o = f.order()
    return AbovePrecision(f.precision) if o is None else o


def ift_check(P: BiPoly) -> bool:
    return P.coeff(0, 0) == 0 and P.coeff(0, 1) != 0


def _lift_coefficients(rows: Sequence[Sequence], N: int, zero, one,
                       reduce: Callable, neg_inv01) -> list:
    """Shared recurrence: coefficients f_0..f_{N-1} of the root of
    sum rows[j][i] x^i T^j with f_0 = 0.

    ``powers[j][n]`` is the coefficient of x^n in f^j.  For j >= 2 it only
    involves f_1..f_{n-1} because f_0 = 0, so the x^n coefficient of P(x, f)
    is a_{0,1} f_n plus already known terms.
    """
    d = len(rows) - 1
    powers = [[zero] * N for _ in range(d + 1)]
    powers[0][0] = one
    f = powers[1] if d >= 1 else [zero] * N
    terms = [(i, j, c) for j, r in enumerate(rows) for i, c in enumerate(r)
             if c and (i, j) != (0, 1)]
    for n in range(1, N):
        for j in range(2, d + 1):
            prev = powers[j - 1]
            acc = zero
            for k in range(1, n):
                if f[k] and prev[n - k]:
                    acc = acc + f[k] * prev[n - k]
            powers[j][n] = reduce(acc)
        s = zero
        for i, j, c in terms:
            if i <= n:
                v = powers[j][n - i]
                if v:
                    s = s + c * v
        f[n] = reduce(s * neg_inv01)
    return list(f)


def hensel_lift(P: BiPoly, N: int) -> SeriesTrunc:
    """The unique root f of P with f(0) = 0, modulo x^N."""
    if not ift_check(P):
        raise IFTViolation(f"{P} has P(0,0) != 0 or dP/dT(0,0) = 0")
    if N < 1:
        raise ValueError("precision must be at least 1")
    F = P.field
    neg_inv01 = F.reduce(-F.inv(P.coeff(0, 1)))
    coeffs = _lift_coefficients(P.rows, N, 0, 1, F.reduce, neg_inv01)
    return SeriesTrunc._raw(F, coeffs)


def hensel_lift_newton(P: BiPoly, N: int) -> SeriesTrunc:
    """Same root as :func:`hensel_lift`, by Newton iteration with doubling
    precision: f <- f - P(f) / P'(f)."""
    if not ift_check(P):
        raise IFTViolation(f"{P} has P(0,0) != 0 or dP/dT(0,0) = 0")
    F = P.field
    dP = P.derivative_T()
    f = SeriesTrunc.zero(F, 1)
    m = 1
    while m < N:
        m = min(2 * m, N)
        g = SeriesTrunc._raw(F, f.coeffs + (0,) * (m - f.precision))
        step = bipoly_eval_series(P, g) * bipoly_eval_series(dP, g).inverse()
        f = g - step
    return f if f.precision == N else f.truncate(N)


# -- universal root ----------------------------------------------------------

class MPoly:
    """Sparse multivariate polynomial with integer coefficients.

    Monomials are exponent tuples aligned with a variable list held by the
    owner (:class:`UniversalPoly`).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MPoly({m: c * other for m, c in self.terms.items()})
        out: dict[tuple, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values: Sequence, field: FieldDescriptor):
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t = t * v ** e
            total = field.reduce(total + t)
        return field.reduce(total)


@dataclass(frozen=True)
class UniversalPoly:
    """First coefficients of the universal root f_{d,h}.

    ``variables`` lists the index pairs (i, j) of the normalized
    coefficients A_{i,j} (x^i T^j) with A_{0,0} = 0 and A_{0,1} = 1 removed;
    ``coefficients[k]`` is the coefficient of x^k as an :class:`MPoly`.
    """

    d: int
    h: int
    variables: tuple[tuple[int, int], ...]
    coefficients: tuple[MPoly, ...]

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    def specialize(self, P: BiPoly) -> SeriesTrunc:
        """Substitute the normalized coefficients a_{i,j}/a_{0,1} of P."""
        if not ift_check(P):
            raise IFTViolation(f"{P} does not satisfy the implicit function theorem")
        if P.t_degree > self.d or P.height > self.h:
            raise ValueError(f"{P} exceeds bidegree ({self.d}, {self.h})")
        F = P.field
        Pn = P.normalize_ift()
        values = [Pn.coeff(i, j) for i, j in self.variables]
        return SeriesTrunc._raw(F, [c.evaluate(values, F) for c in self.coefficients])

    def format_coefficient(self, k: int) -> str:
        from .exact_algebra.text import format_monomials

        names = [f"A{i}_{j}" for i, j in self.variables]
        items = sorted(self.coefficients[k].terms.items(), reverse=True)
        return format_monomials([(list(zip(names, m)), c) for m, c in items])


def universal_root(d: int, h: int, N: int) -> UniversalPoly:
    """Coefficients of x^0..x^{N-1} of the root of sum A_{i,j} x^i T^j,
    polynomials over Z in the A_{i,j} (A_{0,0} = 0, A_{0,1} = 1)."""
    if d < 1 or h < 0 or N < 1:
        raise ValueError("need d >= 1, h >= 0, N >= 1")
    variables = tuple((i, j) for i in range(h + 1) for j in range(d + 1)
                      if (i, j) not in ((0, 0), (0, 1)))
    nv = len(variables)
    index = {v: k for k, v in enumerate(variables)}

    def var(i, j):
        m = [0] * nv
        m[index[(i, j)]] = 1
        return MPoly({tuple(m): 1})

    one = MPoly({(0,) * nv: 1})
    zero = MPoly()
    rows = [[zero] * (h + 1) for _ in range(d + 1)]
    for (i, j) in variables:
        rows[j][i] = var(i, j)
    rows[1][0] = one
    coeffs = _lift_coefficients(rows, N, zero, one, lambda v: v, -1)
    return UniversalPoly(d, h, variables, tuple(coeffs))

