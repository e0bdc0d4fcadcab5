import json
import math

import jsonschema
import pytest

from algseries.census import (REPORT_SCHEMA, CensusReport, _heads, branch_levels, census_over,
                              dim_estimate, enumerate_C, enumerate_strata, normalized_polynomials,
                              parse_system, series_points, stratum_members, strata_over,
                              tail_polynomials, variety_over, variety_points)
from algseries.errors import BudgetExceeded, InsufficientData
from algseries.exact_algebra import GF, UniPoly, parse_bipoly
from algseries.exact_algebra.poly import _trim
from algseries.stratification import AlgSeries, in_C, strata_membership


def test_enumerate_C_examples():
    assert enumerate_C(1, 1, 2).count_C == 3
    assert enumerate_C(1, 1, 3).count_C == 7
    assert enumerate_C(1, 1, 5).count_C == 21


def test_enumerate_C_agrees_with_in_C():
    for d, h, q in [(1, 2, 2), (2, 1, 2), (2, 1, 3)]:
        direct = sum(in_C(P, d, h) for P in normalized_polynomials(d, h, q))
        assert enumerate_C(d, h, q).count_C == direct


def test_discrepancies_are_height_zero_products():
    r = enumerate_C(2, 1, 2)
    assert r.discrepancies == 1  # T + T^2 = T (1 + T)
    assert enumerate_C(1, 1, 3).discrepancies == 0


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_C(2, 2, 5, budget=1000)
    assert info.value.code == "budget-exceeded"
    with pytest.raises(BudgetExceeded):
        enumerate_strata(2, 2, 5, budget=1000)
    with pytest.raises(ValueError):
        enumerate_C(1, 1, 4)


def test_workers_do_not_change_reports():
    assert enumerate_C(2, 1, 3, workers=2) == enumerate_C(2, 1, 3)
    assert enumerate_strata(2, 1, 3, workers=2) == enumerate_strata(2, 1, 3)


# -- strata ----------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_strata_d1_h1(q):
    r = enumerate_strata(1, 1, q)
    assert r.strata[0] == q * q - q + 1
    assert len(r.strata) == 3 and sum(r.strata[1:]) == 0


def test_strata_bound_f3():
    r = enumerate_strata(2, 1, 3)
    assert len(r.strata) == 5
    assert r.strata[0] == enumerate_C(2, 1, 3).count_C


@pytest.mark.parametrize("d,h,q,levels", [(1, 2, 3, 5), (2, 1, 3, 5), (2, 2, 2, 9), (2, 3, 2, 4)])
def test_branch_search_matches_head_tail_enumeration(d, h, q, levels):
    counts = enumerate_strata(d, h, q).strata
    for e in range(levels):
        assert counts[e] == sum(1 for _ in stratum_members(d, h, e, q)), e


def test_higher_strata_are_nonempty_for_large_height():
    counts = enumerate_strata(2, 3, 2).strata
    assert counts[:4] == [679, 48, 4, 0]


def test_fast_path_matches_strata_membership():
    d, h, q = 2, 3, 2
    F = GF(q)
    for e in (1, 2):
        members = set(stratum_members(d, h, e, q))
        checked = 0
        for R in tail_polynomials(d, h + e * (d - 2), q):
            for hc in _heads(e, q):
                s = AlgSeries(F, 0, UniPoly(F, _trim(hc)), e, R)
                assert (s in members) == strata_membership(s, d, h, e)
                checked += 1
        assert checked > len(members) > 0


def test_branch_levels():
    F = GF(3)
    assert branch_levels(parse_bipoly("T - x", F), 2) == [0]
    # T^2 - x^2 - x^3 has the two roots +-x sqrt(1 + x), both with e = 1
    assert branch_levels(parse_bipoly("T^2 - x^2 - x^3", F), 6) == [1, 1]
    assert branch_levels(parse_bipoly("T^2 - x", F), 2) == []
    assert branch_levels(parse_bipoly("T^3 - x", F), 2) == []


def test_series_points_have_distinct_expansions():
    for d, h, q in [(1, 1, 3), (2, 1, 2), (1, 2, 2)]:
        pts = list(series_points(d, h, q))
        prec = 2 * d * h + 1
        assert len({s.expand(prec) for s in pts}) == len(pts)
        assert len(pts) == q * sum(enumerate_strata(d, h, q).strata)


# -- dimension fits ----------------------------------------------------------------

def test_dim_estimate_examples():
    assert dim_estimate([(2, 4), (3, 9), (5, 25)]) == pytest.approx(2)
    # q^2 - q + 1 has local log-slope (2q^2 - q) / (q^2 - q + 1) >= 2, so the
    # fitted slope sits a little above 2 at these small q
    pts = [(2, 3), (3, 7), (5, 21)]
    xs = [math.log(q) for q, _ in pts]
    ys = [math.log(c) for _, c in pts]
    mx, my = sum(xs) / 3, sum(ys) / 3
    ols = sum((a - mx) * (b - my) for a, b in zip(xs, ys)) / sum((a - mx) ** 2 for a in xs)
    assert dim_estimate(pts) == pytest.approx(ols)
    assert 2.0 < dim_estimate(pts) < 2.2
    assert dim_estimate([(2, 1), (3, 1)]) == pytest.approx(0)
    with pytest.raises(InsufficientData):
        dim_estimate([(2, 3)])
    with pytest.raises(InsufficientData):
        dim_estimate([(2, 3), (2, 5), (3, 0)])


def test_census_over_fits_exponent():
    r = census_over(1, 1, [2, 3, 5])
    assert r.count_C == [3, 7, 21]
    assert abs(r.fitted_exponent - 2) < 0.5
    s = strata_over(1, 1, [3, 5])
    assert s.strata == [[7, 0, 0], [21, 0, 0]]
    assert s.strata_exponents[1] is None


# -- varieties ---------------------------------------------------------------------

def test_parse_system():
    n, system = parse_system("y1*y2 - x   # product\n\ny1 - 2*y2\n", GF(5))
    assert n == 2
    assert system == [{(0, (1, 1)): 1, (1, (0, 0)): 4}, {(0, (1, 0)): 1, (0, (0, 1)): 3}]
    with pytest.raises(ValueError):
        parse_system("z - x", GF(5))


@pytest.mark.parametrize("q", [2, 3])
def test_variety_examples(q):
    F = GF(q)
    size = q * (q * q - q + 1)  # |A(1,1)(F_q)|: constants times the strata
    n, diag = parse_system("y1 - y2", F)
    assert variety_points(diag, n, 1, 1, q) == size
    n, pinned = parse_system("y1*y2 - x\ny1 - x\ny2 - 1", F)
    assert variety_points(pinned, n, 1, 1, q) == 1
    n, sq = parse_system("y1^2 - x", F)
    assert variety_points(sq, n, 1, 1, q) == 0


def test_variety_over_report():
    r = variety_over("y1 - y2", 1, 1, [2, 3, 5])
    assert r.variety_count == [6, 21, 105]
    assert r.variety_bound == 3
    assert r.fitted_exponent <= 3.5


# -- reports -----------------------------------------------------------------------

def test_report_json_round_trip():
    reports = [enumerate_C(1, 1, 3), enumerate_strata(2, 1, 2), census_over(1, 1, [2, 3]),
               strata_over(1, 1, [2, 3]), variety_over("y1 - y2", 1, 1, [2, 3])]
    for r in reports:
        data = json.loads(r.to_json())
        jsonschema.validate(data, REPORT_SCHEMA)
        assert CensusReport.from_dict(data) == r
        assert r.to_json() == CensusReport.from_dict(data).to_json()
