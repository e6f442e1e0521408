"""The certified p-adic oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsl.errors import DomainError, NonUniform, NotSeparable, WildOrIrregular
from gsl.exact import UniPoly, discriminant, rational_valuation
from gsl.modp import frobenius_data
from gsl.padic import (
    galois_local_invariants,
    local_splitting_type,
    quadratic_local_class,
)


def upoly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


def test_quadratic_ramified():
    assert local_splitting_type(upoly(-10, 0, 1), 5).factors == ((2, 1, 1),)
    assert local_splitting_type(upoly(-15, 0, 1), 5).factors == ((2, 1, 1),)


def test_quadratic_split_vs_inert():
    # v_5 even: unramified; f decided by the residue
    assert local_splitting_type(upoly(-4, 0, 1), 5).factors == ((1, 1, 2),)
    assert local_splitting_type(upoly(-2, 0, 1), 5).factors == ((1, 2, 1),)
    assert local_splitting_type(upoly(-50, 0, 1), 5).factors == ((1, 2, 1),)


def test_eisenstein_totally_ramified():
    assert local_splitting_type(upoly(-5, 0, 0, 1), 5).factors == ((3, 1, 1),)
    assert local_splitting_type(upoly(-25, 0, 0, 1), 5).factors == ((3, 1, 1),)
    assert local_splitting_type(upoly(-5, 0, 0, 0, 1), 5).factors == ((4, 1, 1),)


def test_cluster_refinement():
    # roots 2, 7, 57: nested 5-adic clusters force recentering
    f = upoly(-2, 1) * upoly(-7, 1) * upoly(-57, 1)
    assert local_splitting_type(f, 5).factors == ((1, 1, 3),)


def test_mixed_factors_sorted():
    f = upoly(-5, 0, 1) * upoly(-1, 1)
    assert local_splitting_type(f, 5).factors == ((1, 1, 1), (2, 1, 1))


def test_non_integral_input_normalized():
    f = upoly(Fraction(-10, 3), 0, Fraction(1, 3))
    assert local_splitting_type(f, 5).factors == ((2, 1, 1),)


def test_wild_rejected():
    with pytest.raises(WildOrIrregular):
        local_splitting_type(upoly(-3, 0, 0, 1), 3)
    with pytest.raises(WildOrIrregular):
        local_splitting_type(upoly(-9, 0, 0, 1), 3)


def test_domain_guards():
    with pytest.raises(DomainError):
        local_splitting_type(upoly(-2, 0, 1), 2)
    with pytest.raises(DomainError):
        local_splitting_type(upoly(-2, 0, 1), 15)
    with pytest.raises(NotSeparable):
        local_splitting_type(upoly(-1, 1) * upoly(-1, 1), 7)


def test_galois_invariants_uniform_and_not():
    g = galois_local_invariants(upoly(1, 0, -82, 0, 1), 7)
    assert (g.e, g.f, g.g) == (2, 2, 1)
    with pytest.raises(NonUniform):
        galois_local_invariants(upoly(-5, 0, 1) * upoly(-1, 1), 5)


def test_degree_sum_invariant_random():
    rng = random.Random(0xA5)
    for _ in range(120):
        deg = rng.randint(2, 5)
        f = UniPoly([Fraction(rng.randint(-40, 40)) for _ in range(deg)] + [Fraction(1)])
        if discriminant(f) == 0:
            continue
        p = rng.choice([3, 5, 7, 11, 13])
        try:
            st_ = local_splitting_type(f, p)
        except WildOrIrregular:
            continue
        assert sum(e * fr * c for e, fr, c in st_.factors) == deg


def test_unramified_matches_frobenius_random():
    rng = random.Random(0xBEEF)
    checked = 0
    while checked < 80:
        deg = rng.randint(2, 5)
        f = UniPoly([Fraction(rng.randint(-40, 40)) for _ in range(deg)] + [Fraction(1)])
        d = discriminant(f)
        if d == 0:
            continue
        p = rng.choice([3, 5, 7, 11, 13, 17])
        if rational_valuation(d, p) != 0:
            continue
        st_ = local_splitting_type(f, p)
        fd = frobenius_data(f, p)
        assert st_.is_unramified
        assert st_.residue_degrees() == sorted(fd.cycle_type.parts)
        checked += 1


def test_quadratic_local_class():
    assert quadratic_local_class(4, 5) == "1"
    assert quadratic_local_class(2, 5) == "u"
    assert quadratic_local_class(5, 5) == "p"
    assert quadratic_local_class(10, 5) == "up"
    assert quadratic_local_class(Fraction(1, 5), 5) == "p"
    with pytest.raises(DomainError):
        quadratic_local_class(3, 2)


@given(st.integers(1, 400), st.sampled_from([3, 5, 7, 11]))
def test_quadratic_class_consistent_with_oracle(n, p):
    cls = quadratic_local_class(n, p)
    st_ = local_splitting_type(upoly(-n, 0, 1), p)
    if cls == "1":
        assert st_.factors == ((1, 1, 2),)
    elif cls == "u":
        assert st_.factors == ((1, 2, 1),)
    else:
        assert st_.factors == ((2, 1, 1),)
