"""Exact polynomial arithmetic and integer utilities."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsl.errors import DomainError
from gsl.exact import (
    BiPoly,
    UniPoly,
    crt_combine,
    disc_y,
    discriminant,
    factor_int,
    is_prime,
    rat_from_str,
    rat_to_str,
    rational_valuation,
    resultant,
    squarefree_part,
)

rats = st.fractions(
    min_value=-30, max_value=30, max_denominator=6
)
polys = st.lists(rats, min_size=0, max_size=6).map(UniPoly)


def upoly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


# ---------------------------------------------------------------------------
# UniPoly ring laws


@given(polys, polys)
def test_add_sub_roundtrip(f, g):
    assert (f + g) - g == f


@given(polys, polys)
def test_mul_degree(f, g):
    if f.is_zero or g.is_zero:
        assert (f * g).is_zero
    else:
        assert (f * g).degree == f.degree + g.degree


@given(polys, polys)
def test_divmod_identity(f, g):
    if g.is_zero:
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree


@given(polys, polys)
def test_gcd_divides(f, g):
    if f.is_zero and g.is_zero:
        return
    d = f.gcd(g)
    assert (f % d).is_zero and (g % d).is_zero
    assert d.lc == 1  # monic


def test_json_roundtrip():
    f = upoly("-1/2", 0, 3)
    assert UniPoly.from_json(f.to_json()) == f
    assert f.to_json() == ["-1/2", "0", "3"]
    assert UniPoly.from_json([]).is_zero


def test_compose_and_eval():
    f = upoly(1, 2, 1)  # (x+1)^2
    g = upoly(-1, 1)  # x - 1
    assert f.compose(g) == upoly(0, 0, 1)
    assert f(Fraction(3)) == 16


# ---------------------------------------------------------------------------
# resultants / discriminants


def test_discriminant_quadratic():
    # disc(x^2 + bx + c) = b^2 - 4c
    for b, c in [(3, 1), (0, -7), (5, 5)]:
        assert discriminant(upoly(c, b, 1)) == b * b - 4 * c


def test_discriminant_depressed_cubic():
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    for p, q in [(1, 1), (-2, 3), (0, 5)]:
        assert discriminant(upoly(q, p, 0, 1)) == -4 * p**3 - 27 * q**2


def test_discriminant_split_cubic():
    f = upoly(-1, 1) * upoly(-2, 1) * upoly(-3, 1)
    # prod of squared root differences: (1*2*1)^2
    assert discriminant(f) == 4


def test_resultant_common_root():
    f = upoly(-1, 1) * upoly(-2, 1)
    g = upoly(-1, 1) * upoly(3, 1)
    assert resultant(f, g) == 0
    assert resultant(f, upoly(3, 1)) != 0


def test_disc_y_specializes():
    # disc_y(P) evaluated at t0 = disc of the specialized polynomial
    P = BiPoly.from_json([["1"], ["0"], ["2", "-4"], ["0"], ["1"]])
    d = disc_y(P)
    for t0 in (Fraction(3), Fraction(21), Fraction(-5, 7)):
        f_t0 = UniPoly([row(t0) for row in P.rows])
        assert d(t0) == discriminant(f_t0)


def test_squarefree_part():
    f = upoly(-1, 1) * upoly(-1, 1) * upoly(2, 1)
    sf = squarefree_part(f)
    assert sf.degree == 2
    assert (sf % upoly(-1, 1)).is_zero and (sf % upoly(2, 1)).is_zero
    assert sf.gcd(sf.derivative()).degree == 0


# ---------------------------------------------------------------------------
# scalars


def test_rat_str_roundtrip():
    for s in ("21", "-3/7", "0", "1/2"):
        assert rat_to_str(rat_from_str(s)) == s


def test_rational_valuation():
    assert rational_valuation(Fraction(50), 5) == 2
    assert rational_valuation(Fraction(1, 5), 5) == -1
    assert rational_valuation(Fraction(3), 5) == 0
    with pytest.raises(DomainError):
        rational_valuation(Fraction(0), 5)
    with pytest.raises(DomainError):
        rational_valuation(Fraction(1), 6)


@given(st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50),
       st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50),
       st.sampled_from([2, 3, 5, 7]))
def test_valuation_multiplicative(x, y, p):
    assert rational_valuation(x * y, p) == rational_valuation(x, p) + rational_valuation(y, p)


def test_is_prime():
    primes = {2, 3, 5, 7, 8191, 10007}
    composites = {0, 1, 341, 561, 8192, 10005}
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_factor_int():
    assert factor_int(2**4 * 3**2 * 5 * 10007) == {2: 4, 3: 2, 5: 1, 10007: 1}
    assert factor_int(-12) == {2: 2, 3: 1}
    assert factor_int(1) == {}
    n = 1009 * 1013  # beyond the trial-division floor exercised via Pollard path
    assert factor_int(n * n) == {1009: 2, 1013: 2}
    with pytest.raises(DomainError):
        factor_int(0)


def test_crt_combine():
    assert crt_combine([(9, 1), (25, 2)]) == 127
    assert crt_combine([(25, 10), (49, 7)]) == 1085
    with pytest.raises(DomainError):
        crt_combine([(4, 1), (6, 1)])
