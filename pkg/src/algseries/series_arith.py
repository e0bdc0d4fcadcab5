"""Ring operations on algebraic series.

The sum and product of two algebraic series are roots of resultants:

    add:  Res_U(P_f(x, U), P_g(x, T - U))
    mul:  Res_U(P_f(x, U), U^deg(P_g) P_g(x, T / U))

whose T-degree is at most Deg(f) Deg(g) and whose height is at most
Deg(g) H(f) + Deg(f) H(g).  The result is made canonical by reconstructing
the minimal polynomial from the expansion and decomposing it again.

A nonzero algebraic series f satisfies ord(f) <= H(f): the constant
T-coefficient a_0 of its minimal polynomial is nonzero and
a_0 = -f (a_1 + a_2 f + ...).  :func:`is_zero` relies on this bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exact_algebra import BiPoly, FieldDescriptor, SeriesTrunc, UniPoly, resultant_bivariate
from .exact_algebra.poly import bipoly_eval_series
from .stratification import AlgSeries, minpoly_reconstruct, phi_decompose, reconstruction_precision


def _sum_bound(bf, bg):
    (df, hf), (dg, hg) = bf, bg
    return (df * dg, dg * hf + df * hg)


def sum_resultant(Pf: BiPoly, Pg: BiPoly) -> BiPoly:
    """Res_U(Pf(x, U), Pg(x, T - U)): vanishes at T = f + g whenever
    Pf(f) = 0 and Pg(g) = 0."""
    F = Pf.field
    q = _substitute_linear(Pg, BiPoly.T(F), BiPoly.constant(F, -1))
    p = [BiPoly.from_unipoly(c) for c in Pf.t_coeffs()]
    return resultant_bivariate(p, q)


def product_resultant(Pf: BiPoly, Pg: BiPoly) -> BiPoly:
    """Res_U(Pf(x, U), U^dg Pg(x, T / U)): vanishes at T = f * g."""
    F = Pf.field
    dg = Pg.t_degree
    T = BiPoly.T(F)
    q = [BiPoly(F)] * (dg + 1)
    Tj = BiPoly.constant(F, 1)
    for j, c in enumerate(Pg.t_coeffs()):
        q[dg - j] = BiPoly.from_unipoly(c) * Tj
        Tj = Tj * T
    p = [BiPoly.from_unipoly(c) for c in Pf.t_coeffs()]
    return resultant_bivariate(p, q)


def _substitute_linear(S: BiPoly, a: BiPoly, b: BiPoly) -> list[BiPoly]:
    """Coefficients in U of S(x, a + b U), with a, b in k[x, T]."""
    F = S.field
    out = [BiPoly(F)]
    for c in reversed(S.t_coeffs()):
        # out <- out * (a + b U) + c
        nxt = [BiPoly(F)] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k] = nxt[k] + v * a
            nxt[k + 1] = nxt[k + 1] + v * b
        nxt[0] = nxt[0] + BiPoly.from_unipoly(c)
        out = nxt
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _canonical_from_resultant(res: BiPoly, expansion_of, constant, bounds, F) -> AlgSeries:
    """Reconstruct the minimal polynomial of a constant-free series known to
    be a root of ``res`` and return its canonical coordinates."""
    d, h = res.t_degree, res.height
    N = reconstruction_precision(d, max(h, 0))
    g = expansion_of(N)
    if res.is_zero() or any(bipoly_eval_series(res, g).coeffs):
        raise ArithmeticError("resultant does not vanish on the combined series")
    M = minpoly_reconstruct(g, d, max(h, 0))
    if M is None:
        raise ArithmeticError("reconstruction failed below the resultant bound")
    s = phi_decompose(M, g)
    out = AlgSeries(F, F.reduce(constant), s.head, s.e, s.tail_poly, bounds)
    return out


def add(f: AlgSeries, g: AlgSeries) -> AlgSeries:
    """Canonical coordinates of f + g."""
    _same_field(f, g)
    F = f.field
    res = sum_resultant(f.composed[2], g.composed[2])

    def expansion(N):
        return f.vanishing_part().expand(N) + g.vanishing_part().expand(N)

    return _canonical_from_resultant(res, expansion, f.constant + g.constant,
                                     _sum_bound(f.tracked_bounds, g.tracked_bounds), F)


def neg(f: AlgSeries) -> AlgSeries:
    F = f.field
    g0 = f.vanishing_part()
    S = g0.composed[2].negate_T()
    N = reconstruction_precision(S.t_degree, max(S.height, 0))
    s = phi_decompose(S, -g0.expand(N))
    return AlgSeries(F, F.reduce(-f.constant), s.head, s.e, s.tail_poly, f.bounds)


def sub(f: AlgSeries, g: AlgSeries) -> AlgSeries:
    return add(f, neg(g))


def add_constant(f: AlgSeries, c) -> AlgSeries:
    """f + c; shifting T by a constant keeps T-degree and height."""
    F = f.field
    return AlgSeries(F, F.reduce(f.constant + F.coerce(c)), f.head, f.e, f.tail_poly, f.bounds)


def scale(f: AlgSeries, c) -> AlgSeries:
    F = f.field
    c = F.coerce(c)
    if not c:
        return AlgSeries.zero(F)
    return mul(f, AlgSeries.constant_series(F, c))


def mul(f: AlgSeries, g: AlgSeries) -> AlgSeries:
    """Canonical coordinates of f * g.

    With f = a + u, g = b + v (a, b constants), the constant-free part of
    the product is a v + b u + u v; it is a root of the product resultant
    of (a + u) and (b + v) shifted by -a b.
    """
    _same_field(f, g)
    F = f.field
    a, b = f.constant, g.constant
    fs = _with_shifted_minpoly(f)
    gs = _with_shifted_minpoly(g)
    res = product_resultant(fs, gs)
    ab = F.reduce(a * b)
    if ab:
        res = res.shift_T(ab)

    def expansion(N):
        return f.expand(N) * g.expand(N) - ab

    return _canonical_from_resultant(res, expansion, ab,
                                     _sum_bound(f.tracked_bounds, g.tracked_bounds), F)


def _with_shifted_minpoly(f: AlgSeries) -> BiPoly:
    S = f.composed[2]
    return S.shift_T(f.field.reduce(-f.constant)) if f.constant else S


def _same_field(f, g):
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field} vs {g.field}")


def is_zero(f) -> bool:
    """Exact zero test: expansion vanishes modulo x^(H_max + 1).

    Accepts an :class:`AlgSeries` or a :class:`TrackedSeries`; both carry
    (Deg, H) upper bounds.
    """
    _, h = f.tracked_bounds
    return f.expand(max(h, 0) + 1).is_zero()


# -- bound tracking without canonicalization ---------------------------------

@dataclass(frozen=True)
class TrackedSeries:
    """A series known through its expansion to some precision together with
    upper bounds on (Deg, H) propagated through + and *.

    This is the cheap path used when only a zero test is needed: the
    expansion must reach x^H_max, which the bounds tell us in advance.
    """

    field: FieldDescriptor
    coeffs: tuple
    tracked_bounds: tuple[int, int]

    @classmethod
    def of(cls, f: AlgSeries, precision: int) -> "TrackedSeries":
        return cls(f.field, f.expand(precision).coeffs, f.tracked_bounds)

    @classmethod
    def constant(cls, field, c, precision: int) -> "TrackedSeries":
        c = field.coerce(c)
        return cls(field, (c,) + (0,) * (precision - 1), (1, 0))

    @classmethod
    def polynomial(cls, p: UniPoly, precision: int) -> "TrackedSeries":
        return cls(p.field, SeriesTrunc.from_unipoly(p, precision).coeffs, (1, max(p.degree, 0)))

    def expand(self, N: int) -> SeriesTrunc:
        if N > len(self.coeffs):
            raise ValueError(f"expansion known only to precision {len(self.coeffs)}")
        return SeriesTrunc._raw(self.field, self.coeffs[:N])

    def __add__(self, other: "TrackedSeries") -> "TrackedSeries":
        s = SeriesTrunc._raw(self.field, self.coeffs) + SeriesTrunc._raw(other.field, other.coeffs)
        return TrackedSeries(self.field, s.coeffs, _sum_bound(self.tracked_bounds, other.tracked_bounds))

    def __mul__(self, other: "TrackedSeries") -> "TrackedSeries":
        s = SeriesTrunc._raw(self.field, self.coeffs) * SeriesTrunc._raw(other.field, other.coeffs)
        return TrackedSeries(self.field, s.coeffs, _sum_bound(self.tracked_bounds, other.tracked_bounds))

    def __neg__(self):
        return TrackedSeries(self.field, (-SeriesTrunc._raw(self.field, self.coeffs)).coeffs,
                             self.tracked_bounds)


def polynomial_bounds(terms: Mapping[tuple[int, tuple[int, ...]], object],
                      point_bounds: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """(Deg, H) bounds for G(f_1, ..., f_n), G = sum c x^i y^m, evaluated by
    the same + / * bound rules used by :class:`TrackedSeries`."""
    total = None
    for (i, mono), _ in terms.items():
        b = (1, i)
        for (bd, bh), k in zip(point_bounds, mono):
            for _ in range(k):
                b = _sum_bound(b, (bd, bh))
        total = b if total is None else _sum_bound(total, b)
    return total if total is not None else (1, 0)


def evaluate_polynomial(terms: Mapping[tuple[int, tuple[int, ...]], object],
                        points: Sequence[TrackedSeries], field, precision: int) -> TrackedSeries:
    """G(f_1, ..., f_n) for G given as ``{(i, (m_1..m_n)): c}`` meaning
    c x^i y_1^m_1 ... y_n^m_n, with bound tracking."""
    total = None
    for (i, mono), c in terms.items():
        term = TrackedSeries.polynomial(UniPoly(field, [0] * i + [c]), precision)
        for f, k in zip(points, mono):
            for _ in range(k):
                term = term * f
        total = term if total is None else total + term
    return total if total is not None else TrackedSeries.constant(field, 0, precision)
