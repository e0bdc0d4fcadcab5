from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algseries.errors import FieldNotFinite, ParseError
from algseries.exact_algebra import (GF, QQ, BiPoly, FieldDescriptor, SeriesTrunc, UniPoly,
                                     bipoly_eval_series, content_x, is_irreducible,
                                     parse_bipoly, parse_unipoly, resultant_T, trial_factor)
from algseries.exact_algebra.resultant import bareiss_det

from helpers import (F2, F5, all_bipolys, brute_force_reducible, full_factorization, is_unit,
                     rand_bipoly, rand_series, random_rng)


def P(text, F=QQ):
    return parse_bipoly(text, F)


def S(coeffs, F=QQ):
    return SeriesTrunc(F, coeffs)


# -- fields ------------------------------------------------------------------

def test_field_parse_and_print():
    assert FieldDescriptor.parse("q") == QQ
    assert FieldDescriptor.parse("fp:7") == GF(7)
    assert str(GF(7)) == "fp:7" and str(QQ) == "q"
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ValueError):
        FieldDescriptor.parse("fp:x")


def test_field_arithmetic():
    F = GF(5)
    assert F.coerce("1/2") == 3
    assert F.coerce(-1) == 4
    assert F.inv(2) == 3
    assert QQ.coerce("-3/6") == Fraction(-1, 2)
    assert list(F.elements()) == [0, 1, 2, 3, 4]
    assert F.order == 5 and not QQ.is_finite


# -- text grammar ------------------------------------------------------------

@pytest.mark.parametrize("text", ["T^2 + T - x", "1/2*T^2 + T - 1/2*x", "x*T + x^2", "-x^3*T^5 + 7"])
def test_parse_print_round_trip(text):
    p = P(text)
    assert str(p) == text
    assert P(str(p)) == p


def test_parse_variants():
    assert P("T**2 − x") == P("T^2 - x")
    assert P("2*x*x*T") == P("2*x^2*T")
    assert P("T - T") == BiPoly(QQ)
    assert parse_unipoly("1 + x", QQ) == UniPoly(QQ, [1, 1])
    for bad in ["", "T^", "y + T", "x +", "1/0*T"]:
        with pytest.raises(ParseError):
            P(bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_printed_polynomials_reparse(seed):
    rng = random_rng(seed)
    for F in (QQ, F5):
        p = rand_bipoly(rng, F, 3, 3)
        assert parse_bipoly(str(p), F) == p


# -- degrees -----------------------------------------------------------------

def test_zero_polynomial_conventions():
    z = BiPoly(QQ)
    assert z.height == float("-inf") and z.t_degree == float("-inf")
    assert UniPoly(QQ).degree == float("-inf")
    p = P("x^2*T + T^3")
    assert (p.t_degree, p.height) == (3, 2)


# -- bipoly_eval_series --------------------------------------------------------

def test_eval_series_examples():
    assert bipoly_eval_series(P("T - x"), S([0, 1, 0, 0, 0])).is_zero()
    f = S([3, 1, 4, 1, 5])
    assert bipoly_eval_series(P("T"), f) == f
    g = S([0, 1, -1, 2])
    out = bipoly_eval_series(P("T^2 + T - x"), g)
    assert out.is_zero() and out.precision == 4


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([QQ, F5]))
def test_eval_series_is_multiplicative(seed, F):
    rng = random_rng(seed)
    p, q = rand_bipoly(rng, F, 2, 2), rand_bipoly(rng, F, 2, 2)
    f, g = rand_series(rng, F, 7), rand_series(rng, F, 5)
    lhs = bipoly_eval_series(p * q, f)
    assert lhs == bipoly_eval_series(p, f) * bipoly_eval_series(q, f)
    # truncated to the smaller precision when mixing series
    assert (f * g).precision == 5


# -- resultants ----------------------------------------------------------------

def test_resultant_examples():
    assert resultant_T(P("T - x"), P("T - x^2")) == UniPoly(QQ, [0, 1, -1])
    assert resultant_T(P("T^2 + x*T + 1"), P("T^2 + x*T + 1")).is_zero()
    assert resultant_T(P("T^2 - x"), P("T^2 - x - x^2")) == UniPoly.x(QQ, 4)


def test_resultant_sign_convention():
    # Res(P, Q) = lc(P)^deg Q * prod Q(roots of P)
    p = P("2*T - 2*x")
    q = P("T^2 + 1")
    assert resultant_T(p, q) == UniPoly(QQ, [4, 0, 4])


def test_bareiss_matches_cofactor_expansion():
    M = [[Fraction(2), 3, 1], [4, 1, -2], [0, 5, 7]]

    def cof(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** k * m[0][k] * cof([r[:k] + r[k + 1:] for r in m[1:]]) for k in range(len(m)))

    assert bareiss_det(M, 1, lambda a, b: a / b) == cof(M)
    assert bareiss_det([[0, 1], [1, 0]], 1, lambda a, b: a / b) == -1


def test_resultant_vanishes_iff_common_factor_f2():
    polys = [p for p in all_bipolys(F2, 2, 2) if p.t_degree >= 1]
    factors = {p: set(full_factorization(p)) for p in polys}
    for a in range(len(polys)):
        A = polys[a]
        for b in range(a, len(polys)):
            B = polys[b]
            common = bool(factors[A] & factors[B])
            assert resultant_T(A, B).is_zero() == common, (A, B)


# -- content -------------------------------------------------------------------

def test_content_examples():
    assert content_x(P("x*T + x^2")) == (UniPoly.x(QQ), P("T + x"))
    assert content_x(P("T + x")) == (UniPoly(QQ, [1]), P("T + x"))
    a, s = content_x(P("T^2 - x + x*T^2 - x^2"))
    assert (a, s) == (UniPoly(QQ, [1, 1]), P("T^2 - x"))


def test_content_reassembly_random():
    rng = random_rng(11)
    for k in range(200):
        F = QQ if k % 2 else F5
        p = rand_bipoly(rng, F, 3, 3)
        if p.is_zero():
            continue
        a, s = content_x(p)
        assert BiPoly.from_unipoly(a) * s == p
        assert a.lc() == 1
        assert content_x(s)[0] == UniPoly(F, [1])


# -- factorization ---------------------------------------------------------------

def test_trial_factor_examples():
    A, B = trial_factor(P("T^2 + T + x*T + x", F2))
    assert A * B == P("T^2 + T + x*T + x", F2)
    assert {A, B} == {P("T + 1", F2), P("T + x", F2)}
    assert trial_factor(P("T^2 + T + x", F2)) is None
    assert trial_factor(P("T", F2)) is None
    with pytest.raises(FieldNotFinite):
        trial_factor(P("T^2 - x"))


def test_trial_factor_matches_brute_force_f2():
    reducible = brute_force_reducible(F2, 2, 2)
    for p in all_bipolys(F2, 2, 2):
        if is_unit(p):
            continue
        assert is_irreducible(p) == (p not in reducible), p
        if content_x(p)[0].degree == 0 and p.t_degree >= 1:
            split = trial_factor(p)
            assert (split is None) == (p not in reducible), p
            if split is not None:
                A, B = split
                assert A * B == p and not is_unit(A) and not is_unit(B)


def test_trial_factor_products_over_f3():
    rng = random_rng(5)
    F = GF(3)
    for _ in range(40):
        a = rand_bipoly(rng, F, 2, 1)
        b = rand_bipoly(rng, F, 1, 2)
        if a.t_degree < 1 or b.t_degree < 1:
            continue
        assert trial_factor(content_x(a * b)[1]) is not None
