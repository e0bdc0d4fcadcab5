"""Stratification of algebraic power series by degree, height and the order e
of dP/dT along the series.

An algebraic series f with f(0) = 0 and minimal polynomial P of degree d and
height h is written f = head + x^e * tail where e = ord(dP/dT(x, f)),
``head`` is a polynomial of degree <= e vanishing at 0, and ``tail`` is the
implicit-function root of R(x, T) = P(x, head + x^e T) / x^(2e).
:func:`phi_decompose` produces these coordinates and :func:`phi_compose`
rebuilds the minimal polynomial from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import (FieldNotFinite, InseparableOrNotMinimal, InsufficientPrecision,
                     NotABranch)
from .exact_algebra import BiPoly, FieldDescriptor, SeriesTrunc, UniPoly, content_x
from .exact_algebra import is_irreducible as _is_irreducible_finite
from .exact_algebra.poly import _trim, bipoly_eval_series
from .hensel import AbovePrecision, hensel_lift, ift_check, ord_x


@dataclass(frozen=True)
class StratumSignature:
    deg: int
    height: int
    e: int

    def __post_init__(self):
        if self.deg < 1 or self.height < 0:
            raise ValueError(f"invalid signature {self}")
        if not 0 <= self.e <= 2 * self.deg * self.height:
            raise InseparableOrNotMinimal(f"e = {self.e} exceeds 2*deg*height")

    def as_tuple(self):
        return (self.deg, self.height, self.e)


def reconstruction_precision(d: int, h: int) -> int:
    """Precision at which a common root forces a common factor: two coprime
    polynomials of bidegree <= (d, h) have a resultant of x-degree <= 2dh."""
    return 2 * d * h + 1


# -- branch selection --------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    e: int
    head: UniPoly
    transformed: BiPoly  # P(x, head + x^e T) / x^(2e), not yet normalized


def select_branch(P: BiPoly, prefix: SeriesTrunc) -> Branch:
    """Locate the root of P that starts like ``prefix`` (which vanishes at 0).

    Scans e = 0, 1, ... and stops at the first e where the truncation
    head = prefix mod x^(e+1) has ord dP/dT(head) = e and
    ord P(head) >= 2e + 1; the root through ``head`` is then unique.  Past
    e = 2 * deg * height no minimal polynomial can have such a root.
    """
    if prefix[0] != 0:
        raise NotABranch("branch must vanish at 0")
    if P.t_degree < 1:
        raise NotABranch(f"{P} has no roots in T")
    F = P.field
    dP = P.derivative_T()
    bound = 2 * P.t_degree * max(P.height, 0)
    for e in range(bound + 1):
        if prefix.precision < e + 1:
            raise InsufficientPrecision(
                f"branch known to x^{prefix.precision - 1} does not separate the roots of {P}")
        head = UniPoly._raw(F, _trim(prefix.coeffs[:e + 1]))
        od = dP.eval_T(head).ord()
        if od is None or od > e:
            continue
        if od < e:
            raise NotABranch(f"no root of {P} starts with {prefix}")
        val = P.eval_T(head)
        if not val.is_zero() and val.ord() < 2 * e + 1:
            raise NotABranch(f"no root of {P} starts with {prefix}")
        g = BiPoly.from_unipoly(head) + BiPoly.T(F).mul_x_power(e)
        return Branch(e, head, P.compose_T(g).div_x_power(2 * e))
    raise InseparableOrNotMinimal(
        f"ord dP/dT along the branch exceeds {bound}: {P} is inseparable or not minimal")


def branch_root(P: BiPoly, prefix: SeriesTrunc, N: int) -> SeriesTrunc:
    """The root of P extending ``prefix`` (which may have a constant term)."""
    c = prefix[0]
    Q = P.shift_T(c) if c else P
    b = select_branch(Q, prefix - c if c else prefix)
    R = _primitive_normalized(b.transformed)
    return _assemble(P.field, c, b.head, b.e, R, N)


def _assemble(F, c, head: UniPoly, e: int, R: BiPoly, N: int) -> SeriesTrunc:
    out = [0] * N
    for i, v in enumerate(head.coeffs[:N]):
        out[i] = v
    if N > e:
        tail = hensel_lift(R, N - e)
        for k, v in enumerate(tail.coeffs):
            out[e + k] = F.reduce(out[e + k] + v)
    out[0] = F.reduce(out[0] + c)
    return SeriesTrunc._raw(F, out)


def _primitive_normalized(R: BiPoly) -> BiPoly:
    return content_x(R)[1].normalize_ift()


# -- algebraic series --------------------------------------------------------

@dataclass(frozen=True)
class AlgSeries:
    """Canonical coordinates of an algebraic power series.

    The series is ``constant + head + x^e * tail`` where ``tail`` is the root
    vanishing at 0 of ``tail_poly`` (normalized so its x^0 T^1 coefficient
    is 1).  ``bounds`` optionally records (Deg, H) upper bounds inherited
    from a construction history; see :mod:`algseries.series_arith`.
    """

    field: FieldDescriptor
    constant: object
    head: UniPoly
    e: int
    tail_poly: BiPoly
    bounds: tuple[int, int] | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if not ift_check(self.tail_poly):
            raise ValueError(f"tail polynomial {self.tail_poly} violates the implicit function theorem")
        if self.tail_poly.coeff(0, 1) != 1:
            raise ValueError("tail polynomial must be normalized (x^0 T^1 coefficient 1)")
        if self.head[0] != 0 or self.head.degree > self.e:
            raise ValueError("head must vanish at 0 and have degree <= e")

    @cached_property
    def composed(self) -> tuple[BiPoly, UniPoly, BiPoly]:
        return phi_compose(self)

    @property
    def minpoly(self) -> BiPoly:
        """Minimal polynomial of the full series, constant term included."""
        S = self.composed[2]
        if self.constant:
            S = S.shift_T(self.field.reduce(-self.constant))
        return S.normalize()

    @property
    def tracked_bounds(self) -> tuple[int, int]:
        if self.bounds is not None:
            return self.bounds
        S = self.composed[2]
        return (S.t_degree, S.height)

    def with_bounds(self, bounds) -> "AlgSeries":
        return AlgSeries(self.field, self.constant, self.head, self.e, self.tail_poly, tuple(bounds))

    def expand(self, N: int) -> SeriesTrunc:
        return _assemble(self.field, self.constant, self.head, self.e, self.tail_poly, N)

    def vanishing_part(self) -> "AlgSeries":
        if not self.constant:
            return self
        return AlgSeries(self.field, 0, self.head, self.e, self.tail_poly)

    def signature(self) -> StratumSignature:
        S = self.composed[2]
        return StratumSignature(S.t_degree, S.height, e_invariant(self))

    def __str__(self):
        return (f"AlgSeries(constant={self.constant}, head={self.head}, e={self.e}, "
                f"tail_poly={self.tail_poly})")

    @classmethod
    def constant_series(cls, field: FieldDescriptor, c) -> "AlgSeries":
        return cls(field, field.coerce(c), UniPoly(field), 0, BiPoly.T(field))

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "AlgSeries":
        F = p.field
        return phi_decompose(BiPoly.T(F) - BiPoly.from_unipoly(p),
                             SeriesTrunc.from_unipoly(p, 1))

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "AlgSeries":
        return cls.constant_series(field, 0)


# -- operations --------------------------------------------------------------

def signature(P: BiPoly, branch: SeriesTrunc) -> StratumSignature:
    """(Deg, H, e) of the root of the irreducible polynomial P selected by
    ``branch`` (which vanishes at 0)."""
    b = select_branch(P, branch)
    d, h = P.t_degree, P.height
    prec = reconstruction_precision(d, h)
    root = _assemble(P.field, 0, b.head, b.e, _primitive_normalized(b.transformed), prec)
    e = ord_x(bipoly_eval_series(P.derivative_T(), root))
    if isinstance(e, AbovePrecision) or e != b.e:
        raise InseparableOrNotMinimal(f"order of dP/dT along the root of {P} exceeds {prec - 1}")
    return StratumSignature(d, h, e)


def phi_decompose(P: BiPoly, branch: SeriesTrunc) -> AlgSeries:
    """Canonical coordinates of the root of P selected by ``branch``.

    A nonzero constant term of ``branch`` is split off first (P is shifted
    accordingly).  The tail polynomial is the normalized primitive part of
    P(x, head + x^e T) / x^(2e).
    """
    F = P.field
    c = branch[0]
    Q = P.shift_T(c) if c else P
    b = select_branch(Q, branch - c if c else branch)
    R = _primitive_normalized(b.transformed)
    return AlgSeries(F, c, b.head, b.e, R)


def phi_compose(s: AlgSeries) -> tuple[BiPoly, UniPoly, BiPoly]:
    """Rebuild a polynomial vanishing on head + x^e * tail.

    Returns (P', a, S) with P' = x^(e*d') R(x, (T - head) / x^e) where d' is
    the T-degree of R, and (a, S) = content_x(P'); S is the minimal
    polynomial of the series without its constant term.
    """
    F = s.field
    R = s.tail_poly
    e = s.e
    dprime = R.t_degree
    shifted = BiPoly.T(F) - BiPoly.from_unipoly(s.head)
    Pp = BiPoly(F)
    power = BiPoly.constant(F, 1)
    for j, c in enumerate(R.t_coeffs()):
        if not c.is_zero():
            Pp = Pp + (BiPoly.from_unipoly(c) * power).mul_x_power(e * (dprime - j))
        power = power * shifted
    a, S = content_x(Pp)
    return Pp, a, S


def e_invariant(s: AlgSeries) -> int:
    """ord_x of dS/dT along the series, S its minimal polynomial."""
    S = phi_compose(s)[2]
    prec = reconstruction_precision(S.t_degree, S.height)
    f = s.vanishing_part().expand(prec)
    e = ord_x(bipoly_eval_series(S.derivative_T(), f))
    if isinstance(e, AbovePrecision):
        raise InseparableOrNotMinimal(f"order of dS/dT along the series exceeds {prec - 1}")
    return e


def is_irreducible(P: BiPoly, branch: SeriesTrunc | None = None) -> bool:
    """Irreducibility in k[x, T].

    Over a prime field this is exhaustive trial factorization.  Over Q it is
    only decided for primitive P with a known root: P is irreducible iff it
    equals the reconstructed minimal polynomial of that root up to a scalar.
    """
    if P.field.is_finite:
        return _is_irreducible_finite(P)
    if branch is None:
        if not ift_check(P):
            raise FieldNotFinite("irreducibility over Q needs a power-series root of P")
        branch = SeriesTrunc.zero(P.field, 1)
    if P.is_zero() or P.t_degree < 1:
        return False
    a, _ = content_x(P)
    if a.degree > 0:
        return False
    d, h = P.t_degree, P.height
    root = branch_root(P, branch, reconstruction_precision(d, h))
    M = minpoly_reconstruct(root, d, h)
    return M is not None and M == P.normalize()


def strata_membership(s: AlgSeries, d: int, h: int, e: int) -> bool:
    """Whether the series of ``s`` lies in the stratum A(d, h, e)."""
    S = phi_compose(s)[2]
    if S.t_degree > d or S.height > h:
        return False
    f = s.vanishing_part().expand(reconstruction_precision(S.t_degree, S.height))
    if not is_irreducible(S, f):
        return False
    try:
        return e_invariant(s) == e
    except InseparableOrNotMinimal:
        return False


def in_C(P: BiPoly, d: int, h: int) -> bool:
    """Membership in C_{d,h}: normalized (a_00 = 0, a_01 = 1), bidegree within
    (d, h), and irreducible."""
    if h < 1:
        raise ValueError("C_{d,h} is only defined for h >= 1")
    if P.coeff(0, 0) != 0 or P.coeff(0, 1) != 1:
        return False
    if P.t_degree > d or P.height > h:
        return False
    return is_irreducible(P)


def embedding_dim_closed_form(d: int, h: int) -> int:
    """2dh(d-2)(d+1) + 3dh + d + h - 1."""
    return 2 * d * h * (d - 2) * (d + 1) + 3 * d * h + d + h - 1


def embedding_dim(d: int, h: int) -> int:
    """Ambient dimension of the strata union: the maximum over 0 <= e <= 2dh of
    e + (d+1)(h + e(d-2) + 1) - 2.  Equals the closed form for d >= 2; for
    d = 1 the closed form degenerates and this maximum (2h) is returned."""
    if d < 1 or h < 0:
        raise ValueError("need d >= 1, h >= 0")
    return max(e + (d + 1) * (h + e * (d - 2) + 1) - 2 for e in range(2 * d * h + 1))


# -- reconstruction ----------------------------------------------------------

def minpoly_reconstruct(f: SeriesTrunc, d_max: int, h_max: int) -> BiPoly | None:
    """Minimal polynomial of the algebraic series extending ``f`` if it has
    T-degree <= d_max and height <= h_max, else None.

    Solves P(x, f) = 0 mod x^N for the coefficients a_{i,j}.  Columns
    x^i f^j are scanned with j major and i minor; the first column that
    depends on the earlier ones yields the candidate of least T-degree,
    which is then accepted only if one of its roots extends ``f`` exactly.
    """
    if d_max < 1 or h_max < 0:
        raise ValueError("need d_max >= 1 and h_max >= 0")
    N = f.precision
    need = reconstruction_precision(d_max, h_max)
    if N < need:
        raise InsufficientPrecision(f"precision {N} < 2*d*h + 1 = {need}")
    F = f.field
    c = f[0]
    g = f - c if c else f

    powers = [SeriesTrunc._raw(F, (1,) + (0,) * (N - 1))]
    for _ in range(d_max):
        powers.append(powers[-1] * g)
    columns = [(i, j) for j in range(d_max + 1) for i in range(h_max + 1)]
    relation = _first_relation([powers[j].mul_x_power(i).coeffs for i, j in columns], F)
    if relation is None:
        return None
    P0 = BiPoly.from_dict(F, {columns[k]: v for k, v in enumerate(relation) if v})
    if P0.t_degree < 1:
        return None
    P0 = content_x(P0)[1]
    try:
        b = select_branch(P0, g)
    except (NotABranch, InsufficientPrecision, InseparableOrNotMinimal):
        return None
    root = _assemble(F, 0, b.head, b.e, _primitive_normalized(b.transformed), N)
    if root != g:
        return None
    P = P0.shift_T(F.reduce(-c)) if c else P0
    return P.normalize()


def _first_relation(vectors, F) -> list | None:
    """Coefficients of the first linear dependency among ``vectors``
    (scanned in order), expressed over all vectors; None if independent."""
    n = len(vectors)
    basis: list[tuple[int, list, list]] = []  # (pivot, reduced vector, combination)
    for k, vec in enumerate(vectors):
        v = list(vec)
        combo = [0] * n
        combo[k] = 1
        for piv, bv, bc in basis:
            t = v[piv]
            if t:
                for idx in range(piv, len(v)):
                    if bv[idx]:
                        v[idx] = F.reduce(v[idx] - t * bv[idx])
                for idx in range(n):
                    if bc[idx]:
                        combo[idx] = F.reduce(combo[idx] - t * bc[idx])
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return combo
        inv = F.inv(v[piv])
        v = [F.reduce(x * inv) for x in v]
        combo = [F.reduce(x * inv) for x in combo]
        basis.append((piv, v, combo))
        basis.sort(key=lambda t: t[0])
    return None
