"""Adequacy certificates, Frobenius prime search, obstruction reports."""

from fractions import Fraction

import pytest

from gsl.applications import (
    HYPOTHESIS_NOT_MET,
    NO_OBSTRUCTION_FOUND,
    OBSTRUCTION_PRESENT,
    adequacy_certificate,
    adequacy_certificate_for_field,
    adequate_specialization_search,
    find_frobenius_primes,
    grunwald_obstruction,
    parametric_obstruction_report,
)
from gsl.errors import DomainError
from gsl.exact import UniPoly


def upoly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


# ---------------------------------------------------------------------------
# Frobenius primes in branch residue fields


def test_frobenius_primes_v4(covers, branch_table):
    v4 = covers["v4_sqrt_t_sqrt_t_minus_1"]
    br = branch_table[v4.name]
    # residue fields are Q, Q(i), Q: the lcm order is decided by Q(i)
    assert find_frobenius_primes(v4, 2, 20, branches=br) == [7, 11, 19]
    assert find_frobenius_primes(v4, 1, 20, branches=br) == [5, 13, 17]
    # 3 is excluded by the bad set even though it is inert in Q(i)
    assert 3 not in find_frobenius_primes(v4, 2, 20, branches=br)


def test_frobenius_primes_c3(covers, branch_table):
    c3 = covers["c3_shanks"]
    br = branch_table[c3.name]
    # residue field of the branch contains Q(zeta_3): split iff p = 1 mod 3
    assert find_frobenius_primes(c3, 1, 20, branches=br) == [7, 13, 19]
    assert find_frobenius_primes(c3, 2, 20, branches=br) == [5, 11, 17]


def test_frobenius_primes_domain():
    with pytest.raises(DomainError):
        find_frobenius_primes(None, 0, 10)


# ---------------------------------------------------------------------------
# adequacy


def test_adequacy_v4_at_21(covers):
    cert = adequacy_certificate(covers["v4_sqrt_t_sqrt_t_minus_1"], Fraction(21))
    assert cert.adequate and cert.degree == 4
    ws = cert.witnesses[2]
    assert [(w.prime, w.e, w.f) for w in ws] == [(3, 2, 2), (7, 2, 2)]
    assert all(w.ramified for w in ws)


def test_adequacy_c3_at_13(covers):
    cert = adequacy_certificate(covers["c3_shanks"], Fraction(13))
    assert cert.adequate
    ws = cert.witnesses[3]
    assert [(w.prime, w.e, w.f) for w in ws] == [(7, 3, 1), (31, 3, 1)]


def test_adequacy_field_ramified_then_inert():
    cert = adequacy_certificate_for_field(upoly(-3, 0, 1), bound=100)
    assert cert.adequate
    ws = cert.witnesses[2]
    assert [(w.prime, w.ramified) for w in ws] == [(3, True), (5, False)]
    assert (ws[1].e, ws[1].f) == (1, 2)  # the inert witness


def test_adequacy_bound_exhausted():
    cert = adequacy_certificate_for_field(upoly(1, 0, 1), bound=3)
    assert not cert.adequate
    assert cert.searched == (3,)
    assert len(cert.witnesses[2]) == 1  # 3 is inert in Q(i) and does qualify


def test_adequacy_guards():
    with pytest.raises(DomainError):
        adequacy_certificate_for_field(upoly(-4, 0, 1))  # reducible
    with pytest.raises(DomainError):
        adequacy_certificate_for_field(upoly(-1, 1))  # degree 1


def test_adequacy_witness_oracles_replayable(covers):
    from gsl.padic import local_splitting_type
    from gsl.specialize import specialize_poly

    v4 = covers["v4_sqrt_t_sqrt_t_minus_1"]
    cert = adequacy_certificate(v4, Fraction(21))
    f_t0 = specialize_poly(v4, Fraction(21))
    for ws in cert.witnesses.values():
        for w in ws:
            again = local_splitting_type(f_t0, w.prime)
            assert again == w.oracle


def test_adequate_search(covers):
    t0, cert = adequate_specialization_search(covers["c2_sqrt_t"], start=2, count=50)
    assert t0 == 2 and cert.adequate


# ---------------------------------------------------------------------------
# obstructions


def test_grunwald_obstruction_v4(covers, branch_table):
    v4 = covers["v4_sqrt_t_sqrt_t_minus_1"]
    cert = grunwald_obstruction(v4, 2, 20, branches=branch_table[v4.name])
    assert list(cert.primes) == [5, 13, 17]
    assert cert.all_ok and cert.transcripts
    # every transcript line is locally small: e = 1 or e*f divides 2
    for t in cert.transcripts:
        assert t.ok


def test_grunwald_non_vacuity(covers):
    # at the non-obstruction prime 7, a specialization attains e*f = 4
    from gsl.padic import local_splitting_type
    from gsl.specialize import specialize_poly

    v4 = covers["v4_sqrt_t_sqrt_t_minus_1"]
    st = local_splitting_type(specialize_poly(v4, Fraction(7)), 7)
    assert any(e * f == 4 for e, f, _ in st.factors)


def test_parametric_statuses(covers):
    assert parametric_obstruction_report(
        covers["v4_sqrt_t_sqrt_t_minus_1"], 2, 20).status == OBSTRUCTION_PRESENT
    assert parametric_obstruction_report(
        covers["c2_sqrt_t"], 2, 20).status == HYPOTHESIS_NOT_MET
    assert parametric_obstruction_report(
        covers["c3_shanks"], 3, 20).status == HYPOTHESIS_NOT_MET


def test_parametric_no_obstruction_found(covers):
    # bound too small to contain any obstruction prime
    rep = parametric_obstruction_report(covers["v4_sqrt_t_sqrt_t_minus_1"], 2, 4)
    assert rep.status == NO_OBSTRUCTION_FOUND
    assert rep.certificate is not None and not rep.certificate.primes


def test_certificates_serialize(covers, branch_table):
    import json

    v4 = covers["v4_sqrt_t_sqrt_t_minus_1"]
    cert = adequacy_certificate(v4, Fraction(21))
    ob = grunwald_obstruction(v4, 2, 20, branches=branch_table[v4.name])
    rep = parametric_obstruction_report(v4, 2, 20)
    for doc in (cert.to_json(), ob.to_json(), rep.to_json()):
        json.dumps(doc, sort_keys=True)
