"""Text grammar for polynomials and series.

Terms are ``c``, ``x^i``, ``T^j`` or products such as ``c*x^i*T^j`` joined by
``+`` and ``-``; coefficients may be rationals ``p/q``.  Example:
``T^2 + T - x``.  Series print with an explicit ``+ O(x^N)`` tail.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from ..errors import ParseError
from .field import FieldDescriptor

_FACTOR = re.compile(r"(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?)$")
_MINUS = str.maketrans({"−": "-", "–": "-", "·": "*", "∗": "*"})


def parse_terms(text: str) -> dict[tuple[tuple[str, int], ...], Fraction]:
    """Parse a polynomial in any set of variables.

    Returns ``{monomial: coefficient}`` where a monomial is a sorted tuple of
    ``(variable, exponent)`` pairs.
    """
    s = text.translate(_MINUS).replace(" ", "").replace("**", "^")
    if not s:
        raise ParseError("empty polynomial")
    terms: dict[tuple, Fraction] = {}
    pos = 0
    pieces = []
    # split on top-level +/- keeping the sign
    for m in re.finditer(r"[+-]", s):
        k = m.start()
        if k == 0 or s[k - 1] in "^*/":
            continue
        pieces.append(s[pos:k])
        pos = k
    pieces.append(s[pos:])
    for piece in pieces:
        sign = 1
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        if not piece:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        mono: dict[str, int] = {}
        for factor in piece.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if m.group("num") is not None:
                try:
                    coeff *= Fraction(m.group("num"))
                except ZeroDivisionError as exc:
                    raise ParseError(f"zero denominator in {text!r}") from exc
            else:
                v = m.group("var")
                mono[v] = mono.get(v, 0) + int(m.group("exp") or 1)
        key = tuple(sorted((v, e) for v, e in mono.items() if e))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return {k: c for k, c in terms.items() if c}


def parse_bipoly(text: str, field: FieldDescriptor):
    """Parse a polynomial in ``x`` and ``T``."""
    from .poly import BiPoly

    grid: dict[tuple[int, int], object] = {}
    for mono, c in parse_terms(text).items():
        exps = dict(mono)
        extra = set(exps) - {"x", "T"}
        if extra:
            raise ParseError(f"unexpected variable(s) {sorted(extra)} in {text!r}")
        key = (exps.get("x", 0), exps.get("T", 0))
        grid[key] = field.reduce(grid.get(key, 0) + field.coerce(c))
    return BiPoly.from_dict(field, grid)


def parse_unipoly(text: str, field: FieldDescriptor):
    from .poly import UniPoly

    P = parse_bipoly(text, field)
    if P.t_degree not in (0, float("-inf")):
        raise ParseError(f"expected a polynomial in x only, got {text!r}")
    return UniPoly(field, P.rows[0] if P.rows else ())


def _format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _monomial(exps: list[tuple[str, int]]) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in exps if e)


def format_monomials(items: list[tuple[list[tuple[str, int]], object]]) -> str:
    out = []
    for exps, c in items:
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial(exps)
        if not mono:
            body = _format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_scalar(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_poly(terms: Mapping[tuple[int, int], object]) -> str:
    """Format ``{(i, j): a_ij}``; T-degree descending, then x-degree ascending."""
    keys = sorted(terms, key=lambda ij: (-ij[1], ij[0]))
    return format_monomials([([("x", i), ("T", j)], terms[(i, j)]) for i, j in keys])


def format_series(f) -> str:
    body = format_monomials([([("x", i)], c) for i, c in enumerate(f.coeffs)])
    tail = f"O(x^{f.precision})"
    return tail if body == "0" else f"{body} + {tail}"
