"""Number-field arithmetic: factorization over Q and over number fields,
adjoining roots, relative minimal polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsl.exact import UniPoly
from gsl.nfield import (
    NumberField,
    adjoin_root,
    factor_nf,
    factor_rational,
    is_irreducible_rational,
    nf_roots,
    relative_min_poly,
)


def upoly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


# ---------------------------------------------------------------------------
# factorization over Q


def test_factor_rational_cyclotomic_split():
    # x^4 - 1 = (x-1)(x+1)(x^2+1)
    fac = factor_rational(upoly(-1, 0, 0, 0, 1))
    assert [(f.to_json(), m) for f, m in fac] == [
        (["-1", "1"], 1),
        (["1", "1"], 1),
        (["1", "0", "1"], 1),
    ]


def test_factor_rational_sophie_germain():
    # x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
    fac = factor_rational(upoly(4, 0, 0, 0, 1))
    assert [(f.to_json(), m) for f, m in fac] == [
        (["2", "-2", "1"], 1),
        (["2", "2", "1"], 1),
    ]


def test_factor_rational_multiplicity_and_content():
    f = upoly(0, 0, 0, 1) * upoly(-1, 1) * upoly(-1, 1)  # x^3 (x-1)^2
    fac = factor_rational(f)
    assert [(g.to_json(), m) for g, m in fac] == [(["-1", "1"], 2), (["0", "1"], 3)]


def test_factor_rational_denominators():
    fac = factor_rational(upoly(Fraction(-1, 4), 0, 1))  # x^2 - 1/4
    assert [(g.to_json(), m) for g, m in fac] == [
        (["-1/2", "1"], 1),
        (["1/2", "1"], 1),
    ]


def test_factor_rational_recombination():
    # two cubics whose modular factors force subset recombination at many p
    f = upoly(1, 2, 0, 1) * upoly(1, 1, 0, 1)
    fac = factor_rational(f)
    assert sorted(g.to_json() for g, _ in fac) == [
        ["1", "1", "0", "1"],
        ["1", "2", "0", "1"],
    ]


def test_is_irreducible_rational():
    assert is_irreducible_rational(upoly(1, 0, 0, 0, 1))  # x^4 + 1
    assert not is_irreducible_rational(upoly(4, 0, 0, 0, 1))  # x^4 + 4
    assert is_irreducible_rational(upoly(-2, 0, 1))


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_factor_rational_product_of_linears(a, b):
    f = upoly(a, 1) * upoly(b, 1)
    fac = factor_rational(f)
    prod = upoly(1)
    for g, m in fac:
        for _ in range(m):
            prod = prod * g
    assert prod == f


# ---------------------------------------------------------------------------
# number fields


def test_factor_over_gaussian_field():
    K = NumberField(upoly(1, 0, 1))  # Q(i)
    fac = factor_nf(K, [K.from_rat(Fraction(1)), K.zero(), K.from_rat(Fraction(1))])
    assert len(fac) == 2 and all(len(g) == 2 for g, _ in fac)  # two linears
    # x^2 - 2 stays irreducible over Q(i)
    fac2 = factor_nf(K, [K.from_rat(Fraction(-2)), K.zero(), K.from_rat(Fraction(1))])
    assert len(fac2) == 1 and fac2[0][1] == 1


def test_nf_roots_gaussian():
    K = NumberField(upoly(1, 0, 1))
    roots = nf_roots(K, [K.from_rat(Fraction(1)), K.zero(), K.from_rat(Fraction(1))])
    assert sorted(roots) == sorted([K.gen(), K.neg(K.gen())])


def test_adjoin_root_degree_grows():
    K = NumberField(upoly(-2, 0, 1))  # Q(sqrt 2)
    rho = [K.from_rat(Fraction(-3)), K.zero(), K.from_rat(Fraction(1))]  # x^2 - 3
    adj = adjoin_root(K, rho)
    L = adj.field
    assert L.degree == 4
    assert is_irreducible_rational(L.modulus)
    # the embedded old generator still satisfies x^2 = 2
    g = adj.embed(K.gen())
    assert L.mul(g, g) == L.from_rat(Fraction(2))
    # the adjoined root satisfies x^2 = 3
    assert L.mul(adj.root, adj.root) == L.from_rat(Fraction(3))


def test_adjoin_root_linear_stays():
    K = NumberField(upoly(-2, 0, 1))
    rho = [K.neg(K.gen()), K.one()]  # x - sqrt2: degree 1, no growth
    adj = adjoin_root(K, rho)
    assert adj.field.degree == K.degree
    assert adj.root == K.gen()


def test_relative_min_poly_quadratic_tower():
    K = NumberField(upoly(-2, 0, 1))  # base Q(sqrt 2)
    rho = [K.from_rat(Fraction(-3)), K.zero(), K.from_rat(Fraction(1))]
    adj = adjoin_root(K, rho)
    L = adj.field
    rel = relative_min_poly(L, adj.embed(K.gen()), adj.root, K.degree)
    # min poly of sqrt3 over Q(sqrt2) is Z^2 - 3: coefficients constant in tau
    assert [c.to_json() for c in rel] == [["-3"], [], ["1"]]


def test_relative_min_poly_primitive_element():
    K = NumberField(upoly(-2, 0, 1))
    rho = [K.from_rat(Fraction(-3)), K.zero(), K.from_rat(Fraction(1))]
    adj = adjoin_root(K, rho)
    L = adj.field
    # gamma = generator of L: its min poly over Q(sqrt2) has degree 2
    rel = relative_min_poly(L, adj.embed(K.gen()), L.gen(), K.degree)
    assert len(rel) - 1 == 2
    assert rel[-1] == UniPoly.const(Fraction(1))


def test_degree_one_field_fast_path():
    K = NumberField(upoly(0, 1))  # Q presented as Q[x]/(x)
    assert K.degree == 1
    fac = factor_nf(K, [K.from_rat(Fraction(-1)), K.zero(), K.from_rat(Fraction(1))])
    assert len(fac) == 2


def test_number_field_inverse():
    K = NumberField(upoly(1, 0, 1))
    a = K.add(K.one(), K.gen())  # 1 + i
    ainv = K.inv(a)
    assert K.mul(a, ainv) == K.one()
    with pytest.raises(ZeroDivisionError):
        K.inv(K.zero())
