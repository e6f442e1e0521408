"""Covers of the line: loading, branch data, residue fields, bad primes."""

import json

import pytest

from gsl.covers import (
    branch_points,
    bundled_covers,
    conservative_bad_primes,
    load_cover,
    probabilistic_galois_check,
    puiseux_at,
    roots_of_unity_check,
)
from gsl.errors import NonUniformRamification, SchemaError
from gsl.exact import UniPoly


def _cover_dict(**over):
    d = {
        "name": "c2_sqrt_t",
        "group_order": 2,
        "P": [["0", "-1"], ["0"], ["1"]],
        "assert_regular_galois": True,
    }
    d.update(over)
    return d


# ---------------------------------------------------------------------------
# loading and schema


def test_load_cover_from_dict_string_and_path(tmp_path):
    d = _cover_dict()
    c1 = load_cover(d)
    c2 = load_cover(json.dumps(d))
    p = tmp_path / "c.json"
    p.write_text(json.dumps(d))
    c3 = load_cover(str(p))
    assert c1.name == c2.name == c3.name == "c2_sqrt_t"
    assert c1.degree == 2
    assert load_cover(c1.to_json()).poly == c1.poly


def test_schema_errors():
    bad = [
        _cover_dict(group_order=3),                      # order != degree
        _cover_dict(assert_regular_galois=False),        # flag must be true
        _cover_dict(P=[["0", "-1"], ["0"], ["2"]]),      # not monic in Y
        _cover_dict(P=[["5"], ["0"], ["1"]]),            # does not involve T
        {k: v for k, v in _cover_dict().items() if k != "name"},
        _cover_dict(P=[[0, -1], [0], [1]]),              # numbers, not strings
    ]
    for d in bad:
        with pytest.raises(SchemaError):
            load_cover(d)


def test_bundled_covers_present():
    covers = bundled_covers()
    assert set(covers) == {"c2_sqrt_t", "v4_sqrt_t_sqrt_t_minus_1", "c3_shanks"}
    assert all(c.poly.is_monic_in_y for c in covers.values())


# ---------------------------------------------------------------------------
# branch tables (independently derived, frozen)


def test_branch_table_c2(branch_table):
    bps = branch_table["c2_sqrt_t"]
    got = [(None if b.locus is None else b.locus.to_json(), b.ram_index, b.d_order)
           for b in bps]
    assert got == [(["0", "1"], 2, 1), (None, 2, 1)]


def test_branch_table_v4(branch_table):
    bps = branch_table["v4_sqrt_t_sqrt_t_minus_1"]
    got = [(None if b.locus is None else b.locus.to_json(), b.ram_index, b.d_order)
           for b in bps]
    assert got == [(["-1", "1"], 2, 1), (["0", "1"], 2, 2), (None, 2, 1)]
    # the residue field over T is generated by Z^2 + 1 (fourth roots of unity)
    t_branch = next(b for b in bps if b.locus is not None and b.locus.to_json() == ["0", "1"])
    assert [c.to_json() for c in t_branch.residue.rel] == [["1"], [], ["1"]]


def test_branch_table_c3(branch_table):
    bps = branch_table["c3_shanks"]
    got = [(None if b.locus is None else b.locus.to_json(), b.ram_index, b.d_order)
           for b in bps]
    # single finite branch over T^2 + 3T + 9; infinity is unramified
    assert got == [(["9", "3", "1"], 3, 1)]


def test_puiseux_places_account_for_degree(covers, branch_table):
    for name, cover in covers.items():
        for bp in branch_table[name]:
            places = puiseux_at(cover, bp.locus)
            assert sum(p.ram_index * p.residue_degree for p in places) == cover.degree


def test_puiseux_gaussian_residue_field():
    # Y^4 + 4T^2 at T: places with e = 2 and residue field Q(i)
    cover = load_cover({
        "name": "y4_plus_4t2",
        "group_order": 4,
        "P": [["0", "0", "4"], [], [], [], ["1"]],
        "assert_regular_galois": True,
    })
    places = puiseux_at(cover, UniPoly.from_json(["0", "1"]))
    assert [(p.ram_index, p.residue_degree) for p in places] == [(2, 2)]
    rel = places[0].rel_min_poly
    assert [c.to_json() for c in rel] == [["4"], [], ["1"]]  # Z^2 + 4


def test_non_uniform_ramification_detected():
    # (Y^2 - T)(Y^3 - T): e = 2 and e = 3 places over T
    cover = load_cover({
        "name": "mixed",
        "group_order": 5,
        "P": [["0", "0", "1"], ["0", "-1"], ["0", "-1"], [], [], ["1"]],
        "assert_regular_galois": True,
    })
    with pytest.raises(NonUniformRamification):
        branch_points(cover)


def test_precision_override_is_stable(covers):
    c = covers["v4_sqrt_t_sqrt_t_minus_1"]
    a = [bp.to_json() for bp in branch_points(c)]
    b = [bp.to_json() for bp in branch_points(c, prec=48)]
    assert a == b


# ---------------------------------------------------------------------------
# bad primes and cover-level checks


def test_conservative_bad_primes(covers):
    assert conservative_bad_primes(covers["c2_sqrt_t"]) == frozenset({2})
    assert conservative_bad_primes(covers["v4_sqrt_t_sqrt_t_minus_1"]) == frozenset({2, 3})
    assert conservative_bad_primes(covers["c3_shanks"]) == frozenset({2, 3})


def test_roots_of_unity_check(covers):
    for c in covers.values():
        assert roots_of_unity_check(c)


def test_galois_sampling_accepts_bundled(covers):
    for c in covers.values():
        assert probabilistic_galois_check(c, samples=12)


def test_galois_sampling_refutes_non_galois():
    # Y^3 - T is not Galois over Q(T): factor degrees mod p are not uniform
    cover = load_cover({
        "name": "y3_t",
        "group_order": 3,
        "P": [["0", "-1"], [], [], ["1"]],
        "assert_regular_galois": True,
    })
    assert not probabilistic_galois_check(cover, samples=24)
