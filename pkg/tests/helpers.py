"""Random generators and brute-force oracles shared by the tests."""

import random
from fractions import Fraction
from itertools import product

from algseries.exact_algebra import GF, BiPoly, SeriesTrunc, trial_factor

F2, F3, F5 = GF(2), GF(3), GF(5)


def rand_scalar(rng, F, spread=3):
    if F.is_finite:
        return rng.randrange(F.characteristic)
    return Fraction(rng.randint(-spread, spread), rng.choice([1, 1, 1, 2, 3]))


def rand_bipoly(rng, F, d, h, density=0.6):
    grid = {}
    for i in range(h + 1):
        for j in range(d + 1):
            if rng.random() < density:
                grid[(i, j)] = rand_scalar(rng, F)
    return BiPoly.from_dict(F, grid)


def rand_ift(rng, F, d, h):
    """Random IFT polynomial with bidegree <= (d, h)."""
    P = rand_bipoly(rng, F, d, h)
    grid = dict(P.terms())
    grid.pop((0, 0), None)
    a01 = rand_scalar(rng, F)
    while not a01:
        a01 = rand_scalar(rng, F)
    grid[(0, 1)] = a01
    return BiPoly.from_dict(F, grid)


def is_irreducible_any(P):
    """Irreducibility for IFT polynomials over Q or F_p."""
    from algseries.stratification import is_irreducible
    return is_irreducible(P)


def rand_irreducible_ift(rng, F, d, h, exact_shape=False):
    while True:
        P = rand_ift(rng, F, d, h)
        if exact_shape and (P.t_degree != d or P.height != h):
            continue
        if P.t_degree >= 1 and is_irreducible_any(P):
            return P


def rand_series(rng, F, N):
    return SeriesTrunc(F, [rand_scalar(rng, F) for _ in range(N)])


def all_bipolys(F, d, h, nonzero=True):
    """Every polynomial of bidegree <= (d, h) over a finite field."""
    cells = [(i, j) for j in range(d + 1) for i in range(h + 1)]
    for vals in product(range(F.characteristic), repeat=len(cells)):
        if nonzero and not any(vals):
            continue
        yield BiPoly.from_dict(F, {c: v for c, v in zip(cells, vals) if v})


def is_unit(P):
    return P.t_degree == 0 and P.height == 0


def brute_force_reducible(F, d, h):
    """Set of polynomials of bidegree <= (d, h) that are a product of two
    non-units, found by multiplying every pair."""
    polys = [P for P in all_bipolys(F, d, h) if not is_unit(P)]
    out = set()
    for a in range(len(polys)):
        A = polys[a]
        for b in range(a, len(polys)):
            B = polys[b]
            if A.t_degree + B.t_degree > d or A.height + B.height > h:
                continue
            out.add(A * B)
    return out


def full_factorization(P):
    """Irreducible factors of positive T-degree, by repeated trial_factor."""
    from algseries.exact_algebra import content_x
    _, S = content_x(P)
    if S.t_degree < 1:
        return []
    split = trial_factor(S)
    if split is None:
        return [S.normalize_leading()]
    return full_factorization(split[0]) + full_factorization(split[1])


def random_rng(seed):
    return random.Random(seed)


def to_sympy(P):
    import sympy
    x, T = sympy.symbols("x T")
    return sum((sympy.Rational(c.numerator, c.denominator) * x ** i * T ** j
                for (i, j), c in P.terms().items()), sympy.Integer(0))


def sympy_irreducible(P):
    """Independent irreducibility oracle over Q."""
    import sympy
    _, factors = sympy.factor_list(to_sympy(P))
    return len(factors) == 1 and factors[0][1] == 1
