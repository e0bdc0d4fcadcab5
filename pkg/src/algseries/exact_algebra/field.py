"""Exact scalar fields: the rationals and prime fields.

Scalars are plain Python numbers: :class:`fractions.Fraction` (or ``int``)
over Q, and ``int`` in ``range(p)`` over F_p.  Arithmetic is done with the
native operators and results are brought back into canonical form with
:meth:`FieldDescriptor.reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..errors import FieldNotFinite, ParseError

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == PRIME_FIELD:
            if not is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise FieldNotFinite("the rationals are infinite")
        return self.characteristic

    def reduce(self, v):
        if self.characteristic:
            if isinstance(v, Fraction):
                return self.div(v.numerator, v.denominator)
            return v % self.characteristic
        return v

    def coerce(self, v):
        """Map an int/Fraction/str into the field."""
        if isinstance(v, str):
            try:
                v = Fraction(v.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad scalar {v!r}") from exc
        if self.characteristic:
            return self.reduce(v)
        if isinstance(v, Fraction) and v.denominator == 1:
            return v.numerator
        return v

    def inv(self, v):
        if self.characteristic:
            v %= self.characteristic
            if v == 0:
                raise ZeroDivisionError("inverse of zero in F_p")
            return pow(v, -1, self.characteristic)
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / v

    def div(self, a, b):
        if self.characteristic:
            return (a * self.inv(b)) % self.characteristic
        r = Fraction(a) / b
        return r.numerator if r.denominator == 1 else r

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.order))

    def __str__(self):
        return "q" if self.kind == RATIONALS else f"fp:{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        """Parse ``q`` / ``Q`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return QQ
        if t.startswith("fp:"):
            try:
                return GF(int(t[3:]))
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        raise ParseError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")


QQ = FieldDescriptor(RATIONALS, 0)


def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor(PRIME_FIELD, p)
