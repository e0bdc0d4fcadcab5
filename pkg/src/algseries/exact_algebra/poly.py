"""Univariate polynomials in x, bivariate polynomials in (x, T) and
truncated power series, all immutable and exact.

Coefficient sequences are tuples indexed by exponent.  The low-level helpers
(``_add``, ``_mul``, ...) work on bare tuples so the enumeration code in
:mod:`algseries.census` can use them without wrapping.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .field import FieldDescriptor

NEG_INF = float("-inf")


# -- tuple helpers -----------------------------------------------------------

def _trim(c) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _add(a, b, F) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim([F.reduce(v) for v in out])


def _sub(a, b, F) -> tuple:
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim([F.reduce(v) for v in out])


def _scale(a, s, F) -> tuple:
    if not s:
        return ()
    return _trim([F.reduce(v * s) for v in a])


def _mul(a, b, F, n=None) -> tuple:
    """Product of coefficient tuples, optionally truncated to length ``n``."""
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    size = la + lb - 1 if n is None else min(n, la + lb - 1)
    out = [0] * size
    for i, u in enumerate(a):
        if not u or i >= size:
            continue
        for j in range(min(lb, size - i)):
            v = b[j]
            if v:
                out[i + j] += u * v
    return _trim([F.reduce(v) for v in out])


def _divmod(a, b, F) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = F.reduce(r[k + db] * inv_lc)
        q[k] = c
        if c:
            for j, v in enumerate(b):
                r[k + j] = F.reduce(r[k + j] - c * v)
    return _trim(q), _trim(r[:db] if db > 0 else [])


def _shift(a, k) -> tuple:
    return (0,) * k + tuple(a) if a else ()


def _eval(a, v, F):
    acc = 0
    for c in reversed(a):
        acc = F.reduce(acc * v + c)
    return acc


# -- UniPoly -----------------------------------------------------------------

class UniPoly:
    """Polynomial in x over ``field``; degree of the zero polynomial is -inf."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = _trim([field.coerce(c) for c in coeffs])

    @classmethod
    def _raw(cls, field, coeffs) -> "UniPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def x(cls, field, power=1) -> "UniPoly":
        return cls._raw(field, (0,) * power + (1,))

    @classmethod
    def constant(cls, field, c) -> "UniPoly":
        return cls(field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def ord(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _wrap(self, other):
        if isinstance(other, UniPoly):
            return other.coeffs
        return _trim((self.field.coerce(other),))

    def __add__(self, other):
        return UniPoly._raw(self.field, _add(self.coeffs, self._wrap(other), self.field))

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly._raw(self.field, _sub(self.coeffs, self._wrap(other), self.field))

    def __rsub__(self, other):
        return UniPoly._raw(self.field, _sub(self._wrap(other), self.coeffs, self.field))

    def __neg__(self):
        return UniPoly._raw(self.field, _scale(self.coeffs, -1, self.field))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return UniPoly._raw(self.field, _mul(self.coeffs, other.coeffs, self.field))
        if isinstance(other, BiPoly):
            return NotImplemented
        return UniPoly._raw(self.field, _scale(self.coeffs, self.field.coerce(other), self.field))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly._raw(self.field, (1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        q, r = _divmod(self.coeffs, other.coeffs, self.field)
        return UniPoly._raw(self.field, q), UniPoly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, _scale(self.coeffs, self.field.inv(self.coeffs[-1]), self.field))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        while b:
            a, b = b, _divmod(a, b, self.field)[1]
        return UniPoly._raw(self.field, a).monic()

    def derivative(self) -> "UniPoly":
        F = self.field
        return UniPoly._raw(F, _trim([F.reduce(i * c) for i, c in enumerate(self.coeffs)][1:]))

    def __call__(self, v):
        return _eval(self.coeffs, self.field.coerce(v), self.field)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        from .text import format_poly
        return f"UniPoly({format_poly({(i, 0): c for i, c in enumerate(self.coeffs)})!r}, {self.field})"

    def __str__(self):
        from .text import format_poly
        return format_poly({(i, 0): c for i, c in enumerate(self.coeffs)})


# -- BiPoly ------------------------------------------------------------------

class BiPoly:
    """Polynomial P(x, T) = sum a_{i,j} x^i T^j.

    ``rows[j]`` holds the x-coefficients of T^j.  ``height`` is the maximal
    x-degree of the T-coefficients, ``t_degree`` the degree in T; both are
    -inf for the zero polynomial.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldDescriptor, rows: Iterable[Iterable] = ()):
        self.field = field
        self.rows = _trim_rows([_trim([field.coerce(c) for c in r]) for r in rows])

    @classmethod
    def _raw(cls, field, rows) -> "BiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.rows = rows
        return obj

    @classmethod
    def from_dict(cls, field, terms: Mapping[tuple[int, int], object]) -> "BiPoly":
        """Build from ``{(i, j): a_ij}`` with i the x-exponent, j the T-exponent."""
        if not terms:
            return cls._raw(field, ())
        d = max(j for _, j in terms)
        h = max(i for i, _ in terms)
        grid = [[0] * (h + 1) for _ in range(d + 1)]
        for (i, j), c in terms.items():
            grid[j][i] = field.reduce(grid[j][i] + field.coerce(c))
        return cls(field, grid)

    @classmethod
    def from_grid(cls, field, grid) -> "BiPoly":
        """``grid[i][j]`` is the coefficient of x^i T^j."""
        if not grid:
            return cls._raw(field, ())
        d = max(len(r) for r in grid)
        return cls(field, [[grid[i][j] if j < len(grid[i]) else 0 for i in range(len(grid))] for j in range(d)])

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "BiPoly":
        return cls._raw(p.field, (p.coeffs,) if p.coeffs else ())

    @classmethod
    def from_t_coeffs(cls, field, coeffs: Iterable[UniPoly]) -> "BiPoly":
        return cls._raw(field, _trim_rows([c.coeffs for c in coeffs]))

    @classmethod
    def T(cls, field) -> "BiPoly":
        return cls._raw(field, ((), (1,)))

    @classmethod
    def x(cls, field, power=1) -> "BiPoly":
        return cls._raw(field, ((0,) * power + (1,),))

    @classmethod
    def constant(cls, field, c) -> "BiPoly":
        c = field.coerce(c)
        return cls._raw(field, ((c,),) if c else ())

    @property
    def t_degree(self):
        return len(self.rows) - 1 if self.rows else NEG_INF

    @property
    def height(self):
        if not self.rows:
            return NEG_INF
        return max(len(r) for r in self.rows) - 1

    @property
    def bidegree(self):
        return (self.t_degree, self.height)

    def is_zero(self) -> bool:
        return not self.rows

    def coeff(self, i: int, j: int):
        if j < len(self.rows):
            r = self.rows[j]
            if i < len(r):
                return r[i]
        return 0

    def coeff_T(self, j: int) -> UniPoly:
        return UniPoly._raw(self.field, self.rows[j] if j < len(self.rows) else ())

    def t_coeffs(self) -> list[UniPoly]:
        return [UniPoly._raw(self.field, r) for r in self.rows]

    def terms(self) -> dict[tuple[int, int], object]:
        return {(i, j): c for j, r in enumerate(self.rows) for i, c in enumerate(r) if c}

    def lc_T(self) -> UniPoly:
        return self.coeff_T(len(self.rows) - 1) if self.rows else UniPoly._raw(self.field, ())

    # arithmetic

    def _coerce_other(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_unipoly(other)
        return BiPoly.constant(self.field, other)

    def __add__(self, other):
        o = self._coerce_other(other)
        F = self.field
        n = max(len(self.rows), len(o.rows))
        rows = [_add(self.rows[j] if j < len(self.rows) else (), o.rows[j] if j < len(o.rows) else (), F)
                for j in range(n)]
        return BiPoly._raw(F, _trim_rows(rows))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw(self.field, tuple(_scale(r, -1, self.field) for r in self.rows))

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) + (-self)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, (BiPoly, UniPoly)):
            o = self._coerce_other(other)
            if not self.rows or not o.rows:
                return BiPoly._raw(F, ())
            out = [()] * (len(self.rows) + len(o.rows) - 1)
            for j, a in enumerate(self.rows):
                if not a:
                    continue
                for k, b in enumerate(o.rows):
                    if b:
                        out[j + k] = _add(out[j + k], _mul(a, b, F), F)
            return BiPoly._raw(F, _trim_rows(out))
        s = F.coerce(other)
        return BiPoly._raw(F, _trim_rows([_scale(r, s, F) for r in self.rows]))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BiPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative_T(self) -> "BiPoly":
        F = self.field
        return BiPoly._raw(F, _trim_rows([_scale(r, j, F) for j, r in enumerate(self.rows)][1:]))

    def scale(self, s) -> "BiPoly":
        return self * s

    def mul_x_power(self, k: int) -> "BiPoly":
        return BiPoly._raw(self.field, tuple(_shift(r, k) for r in self.rows))

    def div_x_power(self, k: int) -> "BiPoly":
        """Exact division by x^k."""
        for r in self.rows:
            if any(r[:k]):
                raise ArithmeticError(f"polynomial not divisible by x^{k}")
        return BiPoly._raw(self.field, _trim_rows([r[k:] for r in self.rows]))

    def div_unipoly(self, a: UniPoly) -> "BiPoly":
        """Exact division of every T-coefficient by ``a``."""
        return BiPoly.from_t_coeffs(self.field, [c.exact_div(a) for c in self.t_coeffs()])

    def compose_T(self, g: "BiPoly") -> "BiPoly":
        """P(x, g(x, T)) by Horner's rule."""
        acc = BiPoly._raw(self.field, ())
        for r in reversed(self.rows):
            acc = acc * g + BiPoly._raw(self.field, (r,) if r else ())
        return acc

    def shift_T(self, c) -> "BiPoly":
        """P(x, T + c) for a scalar ``c``."""
        F = self.field
        return self.compose_T(BiPoly._raw(F, _trim_rows([_trim((F.coerce(c),)), (1,)])))

    def negate_T(self) -> "BiPoly":
        """P(x, -T)."""
        F = self.field
        return BiPoly._raw(F, tuple(_scale(r, -1, F) if j % 2 else r for j, r in enumerate(self.rows)))

    def eval_T(self, g: UniPoly) -> UniPoly:
        """P(x, g(x)) as a polynomial in x."""
        F = self.field
        acc = ()
        for r in reversed(self.rows):
            acc = _add(_mul(acc, g.coeffs, F), r, F)
        return UniPoly._raw(F, acc)

    def eval_series(self, f: "SeriesTrunc") -> "SeriesTrunc":
        return bipoly_eval_series(self, f)

    def exact_div(self, other: "BiPoly") -> "BiPoly | None":
        """Quotient if ``other`` divides ``self`` in k[x, T], else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = [list(r) for r in self.rows]
        db = len(other.rows) - 1
        lc = other.rows[-1]
        if len(rem) - 1 < db:
            return None if rem else BiPoly._raw(F, ())
        q = [()] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            top = _trim(rem[k + db])
            if not top:
                continue
            c, r = _divmod(top, lc, F)
            if r:
                return None
            q[k] = c
            for j, b in enumerate(other.rows):
                rem[k + j] = list(_sub(rem[k + j], _mul(c, b, F), F))
        if any(_trim(r) for r in rem):
            return None
        return BiPoly._raw(F, _trim_rows(q))

    # normalization helpers

    def is_ift(self) -> bool:
        return self.coeff(0, 0) == 0 and self.coeff(0, 1) != 0

    def normalize_ift(self) -> "BiPoly":
        """Scale so the coefficient of x^0 T^1 is 1."""
        return self * self.field.inv(self.coeff(0, 1))

    def normalize_leading(self) -> "BiPoly":
        """Scale so the leading x-coefficient of the leading T-coefficient is 1."""
        if not self.rows:
            return self
        return self * self.field.inv(self.rows[-1][-1])

    def normalize(self) -> "BiPoly":
        return self.normalize_ift() if self.is_ift() else self.normalize_leading()

    def content_x(self):
        return content_x(self)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"BiPoly({str(self)!r}, {self.field})"

    def __str__(self):
        from .text import format_poly
        return format_poly(self.terms())


def _trim_rows(rows) -> tuple:
    rows = [tuple(r) for r in rows]
    n = len(rows)
    while n and not rows[n - 1]:
        n -= 1
    return tuple(rows[:n])


def content_x(P: BiPoly) -> tuple[UniPoly, BiPoly]:
    """Split P = a(x) * S(x, T) with ``a`` the monic gcd of the T-coefficients
    of P and S primitive."""
    if P.is_zero():
        raise ValueError("content of the zero polynomial")
    g = UniPoly._raw(P.field, ())
    for c in P.t_coeffs():
        if not c.is_zero():
            g = c.monic() if g.is_zero() else g.gcd(c)
            if g.degree == 0:
                break
    return g, P.div_unipoly(g)


# -- SeriesTrunc -------------------------------------------------------------

class SeriesTrunc:
    """A power series known modulo x^precision."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable, precision: int | None = None):
        c = [field.coerce(v) for v in coeffs]
        if precision is not None:
            c = (c + [0] * precision)[:precision]
        if not c:
            raise ValueError("series precision must be at least 1")
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field, coeffs) -> "SeriesTrunc":
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field, precision) -> "SeriesTrunc":
        return cls._raw(field, (0,) * precision)

    @classmethod
    def from_unipoly(cls, p: UniPoly, precision: int) -> "SeriesTrunc":
        return cls._raw(p.field, (p.coeffs + (0,) * precision)[:precision])

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def truncate(self, n: int) -> "SeriesTrunc":
        if n > self.precision:
            raise ValueError(f"cannot raise precision from {self.precision} to {n}")
        return SeriesTrunc._raw(self.field, self.coeffs[:n])

    def to_unipoly(self) -> UniPoly:
        return UniPoly._raw(self.field, _trim(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def order(self):
        """Index of the first nonzero coefficient, or None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _other(self, other):
        if isinstance(other, SeriesTrunc):
            return other.coeffs
        if isinstance(other, UniPoly):
            return (other.coeffs + (0,) * self.precision)[:self.precision]
        return (self.field.coerce(other),) + (0,) * (self.precision - 1)

    def __add__(self, other):
        o = self._other(other)
        n = min(self.precision, len(o))
        F = self.field
        return SeriesTrunc._raw(F, [F.reduce(self.coeffs[i] + o[i]) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return SeriesTrunc._raw(F, [F.reduce(-c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._other(other)
        n = min(self.precision, len(o))
        F = self.field
        return SeriesTrunc._raw(F, [F.reduce(self.coeffs[i] - o[i]) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        F = self.field
        if isinstance(other, (SeriesTrunc, UniPoly)):
            o = self._other(other)
            n = min(self.precision, len(o))
            prod = _mul(self.coeffs[:n], o[:n], F, n)
            return SeriesTrunc._raw(F, prod + (0,) * (n - len(prod)))
        s = F.coerce(other)
        return SeriesTrunc._raw(F, [F.reduce(c * s) for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SeriesTrunc._raw(self.field, (1,) + (0,) * (self.precision - 1))
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "SeriesTrunc":
        """Multiplicative inverse of a series with nonzero constant term."""
        F = self.field
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = F.inv(a[0])
        b = [inv0]
        for n in range(1, self.precision):
            s = 0
            for k in range(1, n + 1):
                if a[k]:
                    s += a[k] * b[n - k]
            b.append(F.reduce(-s * inv0))
        return SeriesTrunc._raw(F, b)

    def mul_x_power(self, k: int) -> "SeriesTrunc":
        return SeriesTrunc._raw(self.field, ((0,) * k + self.coeffs)[:self.precision])

    def __eq__(self, other):
        if isinstance(other, SeriesTrunc):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"SeriesTrunc({str(self)!r}, {self.field})"

    def __str__(self):
        from .text import format_series
        return format_series(self)


def bipoly_eval_series(P: BiPoly, f: SeriesTrunc) -> SeriesTrunc:
    """P(x, f) mod x^N where N is the precision of ``f``."""
    F = P.field
    n = f.precision
    acc: tuple = ()
    for r in reversed(P.rows):
        acc = _add(_mul(acc, f.coeffs, F, n), r[:n], F)
    return SeriesTrunc._raw(F, acc + (0,) * (n - len(acc)))
