"""Exhaustive point counts over prime fields.

* :func:`enumerate_C` counts C_{d,h}(F_q): normalized polynomials
  (a_00 = 0, a_01 = 1) of bidegree <= (d, h) that are irreducible.
* :func:`enumerate_strata` counts, for each e, the series of A(d, h, e)(F_q)
  through their minimal polynomials and heads; :func:`stratum_members`
  lists the same sets from coordinates (head, tail polynomial).
* :func:`variety_points` counts n-tuples of series of A(d, h)(F_q) on which
  a polynomial system vanishes.
* :func:`dim_estimate` turns counts over several q into a growth exponent,
  a point-count stand-in for dimension.

Enumeration is lexicographic over coefficient grids, so reports are
reproducible.  Counts may be split over worker processes by the value of the
first coordinate; chunk counts are merged by addition.
"""

from __future__ import annotations

import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InsufficientData
from .exact_algebra import GF, BiPoly, UniPoly, parse_terms
from .exact_algebra.factor import is_irreducible
from .exact_algebra.poly import _trim
from .series_arith import TrackedSeries, evaluate_polynomial, is_zero, polynomial_bounds
from .stratification import AlgSeries, phi_compose

DEFAULT_BUDGET = 10 ** 7

REPORT_SCHEMA = {
    "type": "object",
    "required": ["d", "h", "q", "count_C", "strata", "fitted_exponent", "expected_dim",
                 "discrepancies"],
    "properties": {
        "d": {"type": "integer", "minimum": 1},
        "h": {"type": "integer", "minimum": 0},
        "q": {"oneOf": [{"type": "integer"}, {"type": "array", "items": {"type": "integer"}}]},
        "count_C": {"oneOf": [{"type": "integer"}, {"type": "null"},
                              {"type": "array", "items": {"type": "integer"}}]},
        "strata": {"type": "array"},
        "fitted_exponent": {"type": ["number", "null"]},
        "expected_dim": {"type": "integer"},
        "discrepancies": {"oneOf": [{"type": "integer"}, {"type": "null"},
                                    {"type": "array", "items": {"type": "integer"}}]},
        "strata_exponents": {"type": "array", "items": {"type": ["number", "null"]}},
        "variety_count": {"oneOf": [{"type": "integer"}, {"type": "array", "items": {"type": "integer"}}]},
        "variety_bound": {"type": "integer"},
    },
}


@dataclass
class CensusReport:
    d: int
    h: int
    q: int | list[int]
    count_C: int | list[int] | None = None
    strata: list = field(default_factory=list)
    discrepancies: int | list[int] | None = None
    fitted_exponent: float | None = None
    expected_dim: int = 0
    strata_exponents: list | None = None
    variety_count: int | list[int] | None = None
    variety_bound: int | None = None

    def __post_init__(self):
        if not self.expected_dim:
            self.expected_dim = self.d * self.h + self.d + self.h - 1

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items()
                if v is not None or k in REPORT_SCHEMA["required"]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        return cls(**data)


def _check_prime(q: int):
    GF(q)  # raises on non-primes


def _normalized_positions(d: int, h: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(h + 1) for j in range(d + 1) if (i, j) not in ((0, 0), (0, 1))]


def normalized_polynomials(d: int, h: int, q: int, first: Iterable[int] | None = None) -> Iterator[BiPoly]:
    """Every P with a_00 = 0, a_01 = 1 and bidegree <= (d, h) over F_q, in
    lexicographic order of the free coefficients (optionally restricting
    the first free coefficient to ``first``)."""
    F = GF(q)
    pos = _normalized_positions(d, h)
    firsts = list(first) if first is not None else list(range(q))
    if not pos:
        if 0 in firsts:
            yield BiPoly.T(F)
        return
    for a0 in firsts:
        for rest in product(range(q), repeat=len(pos) - 1):
            grid = [[0] * (h + 1) for _ in range(d + 1)]
            grid[1][0] = 1
            for (i, j), v in zip(pos, (a0,) + rest):
                grid[j][i] = v
            yield BiPoly._raw(F, tuple(_trim_rows(grid)))


def _trim_rows(grid):
    rows = [_trim(r) for r in grid]
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _count_C_chunk(args) -> tuple[int, int]:
    d, h, q, firsts = args
    count = disc = 0
    for P in normalized_polynomials(d, h, q, firsts):
        if is_irreducible(P):
            count += 1
        elif P.height == 0:
            disc += 1
    return count, disc


def _map_chunks(fn, d, h, q, workers: int):
    chunks = [(d, h, q, [v]) for v in range(q)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, chunks))
    return [fn(c) for c in chunks]


def enumerate_C(d: int, h: int, q: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> CensusReport:
    """|C_{d,h}(F_q)| by exhaustive enumeration.

    ``discrepancies`` counts reducible normalized points of x-degree 0
    (e.g. T + T^2): products of two factors that both have height 0.
    """
    if h < 1:
        raise ValueError("C_{d,h} needs h >= 1")
    _check_prime(q)
    dim = d * h + d + h - 1
    if q ** dim > budget:
        raise BudgetExceeded(q ** dim, budget)
    parts = _map_chunks(_count_C_chunk, d, h, q, workers)
    return CensusReport(d, h, q, count_C=sum(p[0] for p in parts),
                        discrepancies=sum(p[1] for p in parts), expected_dim=dim)


# -- strata ------------------------------------------------------------------

def tail_polynomials(d: int, height: int, q: int) -> list[BiPoly]:
    """Irreducible normalized polynomials of bidegree <= (d, height); these
    are the possible tail polynomials of a stratum."""
    if height < 0:
        return []
    return [P for P in normalized_polynomials(d, height, q) if is_irreducible(P)]


def _heads(e: int, q: int) -> Iterator[tuple]:
    """Coefficient tuples (c_0 = 0, c_1, ..., c_e) of heads of degree <= e."""
    for c in product(range(q), repeat=e):
        yield (0,) + c


def stratum_members(d: int, h: int, e: int, q: int) -> Iterator[AlgSeries]:
    """Series of A(d, h, e)(F_q) vanishing at 0, via (head, tail) pairs.

    The composed polynomial S is irreducible exactly when the tail
    polynomial is, so only its height and the order condition
    ord dS/dT(x, head) = e remain to be checked.
    """
    F = GF(q)
    for R in tail_polynomials(d, h + e * (d - 2), q):
        for hc in _heads(e, q):
            head = UniPoly._raw(F, _trim(hc))
            s = AlgSeries(F, 0, head, e, R)
            S = phi_compose(s)[2]
            if S.height > h:
                continue
            dS = S.derivative_T().eval_T(head)
            if dS.ord() == e:
                yield s


def projective_polynomials(d: int, h: int, q: int, first: Iterable[int] | None = None) -> Iterator[BiPoly]:
    """Every nonzero P of bidegree <= (d, h) with a_00 = 0 over F_q, one per
    scalar class (first nonzero coefficient equal to 1)."""
    F = GF(q)
    pos = [(i, j) for j in range(d + 1) for i in range(h + 1) if (i, j) != (0, 0)]
    firsts = list(first) if first is not None else list(range(q))
    for a0 in firsts:
        for rest in product(range(q), repeat=len(pos) - 1):
            vals = (a0,) + rest
            lead = next((v for v in vals if v), 0)
            if lead != 1:
                continue
            grid = [[0] * (h + 1) for _ in range(d + 1)]
            for (i, j), v in zip(pos, vals):
                grid[j][i] = v
            yield BiPoly._raw(F, tuple(_trim_rows(grid)))


def branch_levels(P: BiPoly, e_max: int) -> list[int]:
    """The e-invariants of all roots f of P in x F_q[[x]], found by
    extending heads one coefficient at a time.

    A head c of degree <= e is kept while ord P(c) > e and ord dP/dT(c) > e.
    It carries a root with invariant e exactly when ord dP/dT(c) = e and
    ord P(c) >= 2e + 1; that root is then unique.  Heads still alive past
    ``e_max`` are reported with level e_max + 1.
    """
    F = P.field
    dP = P.derivative_T()
    levels = []
    frontier = [(0,)]
    for e in range(e_max + 2):
        nxt = []
        for hc in frontier:
            head = UniPoly._raw(F, _trim(hc))
            a = P.eval_T(head).ord()
            if a is not None and a <= e:
                continue
            b = dP.eval_T(head).ord()
            if b is not None and b <= e:
                if b == e and (a is None or a >= 2 * e + 1):
                    levels.append(e)
                continue
            if e > e_max:
                levels.append(e)
                continue
            nxt.extend(hc + (c,) for c in range(F.characteristic))
        frontier = nxt
    return levels


def _strata_chunk(args) -> list[int]:
    d, h, q, firsts = args
    counts = [0] * (2 * d * h + 2)
    for P in projective_polynomials(d, h, q, firsts):
        if P.t_degree < 1 or not is_irreducible(P):
            continue
        for e in branch_levels(P, 2 * d * h):
            counts[e] += 1
    return counts


def enumerate_strata(d: int, h: int, q: int, budget: int = DEFAULT_BUDGET,
                     workers: int = 1) -> CensusReport:
    """Counts of A(d, h, e)(F_q) for e = 0..2dh.

    Each series vanishing at 0 is counted through its minimal polynomial
    (irreducible, bidegree <= (d, h), up to scalars) and the head that
    singles it out among the roots.  A root whose head is still undecided
    past e = 2dh would contradict the e-bound; it raises AssertionError.
    """
    if h < 1:
        raise ValueError("strata census needs h >= 1")
    _check_prime(q)
    cost = q ** ((d + 1) * (h + 1) - 1)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    chunks = [(d, h, q, [v]) for v in range(q)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_strata_chunk, chunks))
    else:
        parts = [_strata_chunk(c) for c in chunks]
    counts = [sum(col) for col in zip(*parts)]
    if counts[-1]:
        raise AssertionError(f"{counts[-1]} root(s) with e > {2 * d * h} over F_{q}")
    return CensusReport(d, h, q, strata=counts[:-1])


def dim_estimate(counts: Sequence[tuple[int, int]]) -> float:
    """Least-squares slope of log(count) against log(q)."""
    pts = [(q, c) for q, c in counts if c > 0]
    if len({q for q, _ in pts}) < 2:
        raise InsufficientData("need nonzero counts for at least two distinct q")
    xs = [math.log(q) for q, _ in pts]
    ys = [math.log(c) for _, c in pts]
    return statistics.linear_regression(xs, ys).slope


def census_over(d: int, h: int, qs: Sequence[int], budget: int = DEFAULT_BUDGET,
                workers: int = 1) -> CensusReport:
    reports = [enumerate_C(d, h, q, budget, workers) for q in qs]
    if len(qs) == 1:
        return reports[0]
    counts = [r.count_C for r in reports]
    fit = _try_fit(list(zip(qs, counts)))
    return CensusReport(d, h, list(qs), count_C=counts, discrepancies=[r.discrepancies for r in reports],
                        fitted_exponent=fit)


def strata_over(d: int, h: int, qs: Sequence[int], budget: int = DEFAULT_BUDGET,
                workers: int = 1) -> CensusReport:
    reports = [enumerate_strata(d, h, q, budget, workers) for q in qs]
    if len(qs) == 1:
        return reports[0]
    table = [r.strata for r in reports]
    exps = [_try_fit([(q, row[e]) for q, row in zip(qs, table)]) for e in range(len(table[0]))]
    return CensusReport(d, h, list(qs), strata=table, fitted_exponent=exps[0], strata_exponents=exps)


def _try_fit(points):
    try:
        return dim_estimate(points)
    except InsufficientData:
        return None


# -- varieties ---------------------------------------------------------------

def parse_system(text: str, field) -> tuple[int, list[dict]]:
    """Parse one polynomial per line in x, y1, ..., yn (``#`` comments).

    Returns (n, [terms]) with terms ``{(i, (m_1, ..., m_n)): c}``.
    """
    raw = []
    n = 0
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        terms = parse_terms(line)
        for mono in terms:
            for v, _ in mono:
                if v == "x":
                    continue
                if not (v.startswith("y") and v[1:].isdigit() and int(v[1:]) >= 1):
                    raise ValueError(f"unknown variable {v!r}; use x and y1..yn")
                n = max(n, int(v[1:]))
        raw.append(terms)
    system = []
    for terms in raw:
        G = {}
        for mono, c in terms.items():
            exps = dict(mono)
            key = (exps.get("x", 0), tuple(exps.get(f"y{k}", 0) for k in range(1, n + 1)))
            G[key] = field.reduce(G.get(key, 0) + field.coerce(c))
        system.append({k: v for k, v in G.items() if v})
    return n, system


def series_points(d: int, h: int, q: int) -> Iterator[AlgSeries]:
    """All of A(d, h)(F_q): a constant in F_q plus a series of some stratum
    A(d, h, e), e <= 2dh."""
    F = GF(q)
    vanishing = [s for e in range(2 * d * h + 1) for s in stratum_members(d, h, e, q)]
    for c in range(q):
        for s in vanishing:
            yield AlgSeries(F, c, s.head, s.e, s.tail_poly) if c else s


def variety_points(system: Sequence[dict], n: int, d: int, h: int, q: int,
                   budget: int = DEFAULT_BUDGET) -> int:
    """Number of n-tuples in A(d, h)(F_q)^n on which every polynomial of the
    system vanishes.

    Every coordinate has (Deg, H) <= (d, h), so the tracked bounds of each
    G(f_1, ..., f_n) are known in advance and fix the expansion precision
    needed by the exact zero test.
    """
    F = GF(q)
    points = list(series_points(d, h, q))
    total = len(points) ** n
    if total > budget:
        raise BudgetExceeded(total, budget)
    bounds = [polynomial_bounds(G, [(d, h)] * n) for G in system]
    prec = max((b[1] for b in bounds), default=0) + 1
    tracked = [TrackedSeries(F, s.expand(prec).coeffs, (d, h)) for s in points]
    count = 0
    for tup in product(tracked, repeat=n):
        if all(is_zero(evaluate_polynomial(G, tup, F, prec)) for G in system):
            count += 1
    return count


def variety_over(system_text: str, d: int, h: int, qs: Sequence[int],
                 budget: int = DEFAULT_BUDGET, dim: int | None = None) -> CensusReport:
    """Variety counts over several q.  ``dim`` is the dimension m of the
    variety; by default n minus the number of equations (exact for complete
    intersections).  ``variety_bound`` is m(dh + d + h)."""
    counts = []
    m = dim
    for q in qs:
        n, system = parse_system(system_text, GF(q))
        counts.append(variety_points(system, n, d, h, q, budget))
        if m is None:
            m = max(n - len(system), 0)
    m_bound = m * (d * h + d + h)
    fit = _try_fit(list(zip(qs, counts))) if len(qs) > 1 else None
    return CensusReport(d, h, list(qs) if len(qs) > 1 else qs[0],
                        variety_count=counts if len(qs) > 1 else counts[0],
                        fitted_exponent=fit, variety_bound=m_bound)
