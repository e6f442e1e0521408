"""Applications of verified specialization data: adequacy certificates for
crossed-product constructions, Frobenius prime search in branch residue
fields, and obstruction certificates for parametric families.

Every certificate in this module carries a transcript of oracle outputs;
nothing is asserted that was not re-derived from the p-adic oracle at
certificate-build time, so a consumer can replay the transcript and check
each line independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .covers import BranchPoint, Cover, branch_points, conservative_bad_primes, _abs_residue_modulus
from .errors import DomainError, HypothesisViolation, NotSeparable, PrecisionExhausted, WildOrIrregular
from .exact import Rat, UniPoly, discriminant, factor_int, is_prime, rat_to_str, rational_valuation
from .modp import factor_mod_p, reduce_relative, roots_mod_p
from .nfield import is_irreducible_rational
from .padic import LocalSplittingType, local_splitting_type
from .specialize import meeting_primes, specialize_poly


# ---------------------------------------------------------------------------
# Frobenius primes in branch residue fields


def find_frobenius_primes(
    cover: Cover,
    order: int,
    bound: int,
    branches: Sequence[BranchPoint] | None = None,
) -> list[int]:
    """Odd primes p <= bound, outside the cover's bad set, where Frobenius
    acts with the requested order on the branch residue fields (the lcm of
    the residue degrees of p across the absolute residue fields of all
    branch points)."""
    if order < 1:
        raise DomainError("Frobenius order must be >= 1")
    if branches is None:
        branches = branch_points(cover)
    bad = conservative_bad_primes(cover)
    moduli = [_abs_residue_modulus(bp) for bp in branches]
    out = []
    for p in range(3, bound + 1):
        if not is_prime(p) or p in bad:
            continue
        f = 1
        ok = True
        for M in moduli:
            if M.degree < 1:
                continue
            try:
                fac = factor_mod_p(M, p)
            except NotSeparable:
                ok = False
                break
            degs = [g.degree for g, _ in fac]
            if any(m > 1 for _, m in fac):
                ok = False
                break
            f = math.lcm(f, math.lcm(*degs))
        if ok and f == order:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# adequacy certificates (crossed-product criterion)


@dataclass(frozen=True)
class AdequacyWitness:
    """One odd tame prime witnessing local depth for one prime divisor of
    the degree: some completion of the field has e*f with the required
    power of ell."""

    prime: int
    e: int
    f: int
    ramified: bool
    oracle: LocalSplittingType

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "e": self.e,
            "f": self.f,
            "ramified": self.ramified,
            "oracle": self.oracle.to_json(),
        }


@dataclass(frozen=True)
class AdequacyCertificate:
    """Witness data for the crossed-product adequacy of a number field
    K = Q[Y]/(poly): for each prime ell dividing n = deg(poly), two
    distinct odd tame primes where some completion K_w has
    v_ell([K_w : Q_p]) >= v_ell(n).  `adequate` says whether every ell got
    its two witnesses within the search bound.  `searched` is the scan
    transcript (ramified candidates first, then inert ones, ascending)."""

    poly: UniPoly
    degree: int
    witnesses: dict[int, tuple[AdequacyWitness, ...]]
    adequate: bool
    searched: tuple[int, ...]
    bound: int

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "degree": self.degree,
            "witnesses": {
                str(ell): [w.to_json() for w in ws]
                for ell, ws in sorted(self.witnesses.items())
            },
            "adequate": self.adequate,
            "searched": list(self.searched),
            "bound": self.bound,
        }


def _qualifies(st: LocalSplittingType, ell: int, a: int) -> tuple[int, int] | None:
    """The (e, f) of a local factor with v_ell(e*f) >= a, if any."""
    for e, f, _ in st.factors:
        d = e * f
        v = 0
        while d % ell == 0:
            d //= ell
            v += 1
        if v >= a:
            return (e, f)
    return None


def adequacy_certificate_for_field(
    poly: UniPoly, bound: int = 200
) -> AdequacyCertificate:
    """Search for an adequacy certificate for Q[Y]/(poly).

    Candidate primes are scanned ramified-first: odd primes dividing the
    discriminant (ascending), then the remaining odd primes up to the
    bound.  A prime is skipped when the oracle cannot certify it (wild or
    otherwise irregular)."""
    n = poly.degree
    if n < 2:
        raise DomainError("adequacy needs a field of degree >= 2")
    if not is_irreducible_rational(poly):
        raise DomainError("adequacy certificate needs an irreducible polynomial")
    ells = sorted(factor_int(n))
    need = {ell: rational_valuation(n, ell) for ell in ells}
    disc = discriminant(poly)
    ram = sorted(
        p for p in set(factor_int(disc.numerator)) | set(factor_int(disc.denominator))
        if p != 2
    )
    ram_set = set(ram)
    witnesses: dict[int, list[AdequacyWitness]] = {ell: [] for ell in ells}
    searched: list[int] = []

    def done() -> bool:
        return all(len(witnesses[ell]) >= 2 for ell in ells)

    def candidates():
        yield from ram
        p = 3
        while p <= bound:
            if is_prime(p) and p not in ram_set:
                yield p
            p += 2

    for p in candidates():
        if done():
            break
        searched.append(p)
        try:
            st = local_splitting_type(poly, p)
        except (WildOrIrregular, PrecisionExhausted):
            continue
        for ell in ells:
            if len(witnesses[ell]) >= 2:
                continue
            got = _qualifies(st, ell, need[ell])
            if got is not None:
                e, f = got
                witnesses[ell].append(AdequacyWitness(
                    prime=p, e=e, f=f, ramified=p in ram_set, oracle=st,
                ))
    return AdequacyCertificate(
        poly=poly,
        degree=n,
        witnesses={ell: tuple(ws) for ell, ws in witnesses.items()},
        adequate=done(),
        searched=tuple(searched),
        bound=bound,
    )


def adequacy_certificate(
    cover: Cover, t0: Rat, bound: int = 200
) -> AdequacyCertificate:
    """Adequacy certificate for the specialization of the cover at t0."""
    return adequacy_certificate_for_field(specialize_poly(cover, t0), bound)


def adequate_specialization_search(
    cover: Cover,
    start: int = 2,
    count: int = 200,
    bound: int = 200,
) -> tuple[int, AdequacyCertificate]:
    """The first integer t0 >= start (scanning count values) whose
    specialization admits an adequacy certificate."""
    t0 = start
    for _ in range(count):
        try:
            cert = adequacy_certificate(cover, t0, bound)
        except (HypothesisViolation, DomainError):
            t0 += 1
            continue
        if cert.adequate:
            return t0, cert
        t0 += 1
    raise DomainError(
        f"no adequate specialization found in [{start}, {start + count})"
    )


# ---------------------------------------------------------------------------
# obstruction certificates


@dataclass(frozen=True)
class ObstructionTranscript:
    """One sampled specialization at one obstruction prime: the oracle
    output and whether it satisfies the local smallness law
    (e = 1, or e*f divides the branch inertia order)."""

    prime: int
    t0: Rat
    locus: UniPoly | None
    splitting: LocalSplittingType
    ok: bool

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "t0": rat_to_str(Fraction(self.t0)),
            "locus": None if self.locus is None else self.locus.to_json(),
            "splitting": self.splitting.to_json(),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class ObstructionCertificate:
    """Primes where every rational specialization of the cover is locally
    small: p = 1 mod q, every branch locus splits into distinct linear
    factors mod p, and every branch residue polynomial splits likewise at
    every meeting residue.  At such p no specialization can have local
    degree exceeding its branch inertia order, so local behaviour needing
    the full group there is unreachable -- checked on sampled t0 in the
    transcripts."""

    cover: str
    q: int
    bound: int
    primes: tuple[int, ...]
    transcripts: tuple[ObstructionTranscript, ...]
    all_ok: bool

    def to_json(self) -> dict:
        return {
            "cover": self.cover,
            "q": self.q,
            "bound": self.bound,
            "primes": list(self.primes),
            "transcripts": [t.to_json() for t in self.transcripts],
            "all_ok": self.all_ok,
        }


def _is_obstruction_prime(
    p: int, q: int, branches: Sequence[BranchPoint], bad: frozenset[int]
) -> bool:
    if p == 2 or p in bad or not is_prime(p):
        return False
    if p % q != 1:
        return False
    for bp in branches:
        if bp.locus is None:
            roots = [0]
        else:
            m = bp.locus
            roots = roots_mod_p(m, p)
            if len(roots) != m.degree:
                return False
        rel = bp.residue
        for a in roots:
            reduced = reduce_relative(list(rel.rel), rel.base, (p, a))
            if reduced.degree >= 1:
                rts = roots_mod_p(list(reduced.coeffs), p)
                if len(rts) != reduced.degree:
                    return False
    return True


def _sample_t0(bp: BranchPoint, p: int) -> list[Rat]:
    """Specialization points meeting bp at p with multiplicity one."""
    out = []
    if bp.locus is None:
        out.append(Fraction(1, p))
        return out
    for a in roots_mod_p(bp.locus, p):
        for k in range(0, 4):
            t0 = Fraction(a + k * p)
            mval = bp.locus(t0)
            if mval != 0 and rational_valuation(mval, p) == 1:
                out.append(t0)
                break
    return out


def grunwald_obstruction(
    cover: Cover,
    q: int,
    bound: int,
    branches: Sequence[BranchPoint] | None = None,
) -> ObstructionCertificate:
    """Find the obstruction primes up to the bound and document, on
    sampled specializations, that the local invariants stay small there."""
    if q < 2:
        raise DomainError("q must be >= 2")
    if branches is None:
        branches = branch_points(cover)
    bad = conservative_bad_primes(cover)
    primes = [
        p for p in range(3, bound + 1)
        if _is_obstruction_prime(p, q, branches, bad)
    ]
    transcripts: list[ObstructionTranscript] = []
    for p in primes:
        for bp in branches:
            e_i = bp.ram_index
            for t0 in _sample_t0(bp, p):
                f_t0 = specialize_poly(cover, t0)
                st = local_splitting_type(f_t0, p)
                ok = all(
                    e == 1 or e_i % (e * f) == 0 for e, f, _ in st.factors
                )
                transcripts.append(ObstructionTranscript(
                    prime=p, t0=t0, locus=bp.locus, splitting=st, ok=ok,
                ))
        # one non-meeting sample: expect unramified
        t0 = Fraction(next(
            t for t in range(1, 10 * p)
            if all(
                bp.locus is None or (
                    bp.locus(Fraction(t)) != 0
                    and rational_valuation(bp.locus(Fraction(t)), p) == 0
                )
                for bp in branches
            )
        ))
        f_t0 = specialize_poly(cover, t0)
        st = local_splitting_type(f_t0, p)
        transcripts.append(ObstructionTranscript(
            prime=p, t0=t0, locus=None, splitting=st,
            ok=all(e == 1 for e, f, _ in st.factors),
        ))
    return ObstructionCertificate(
        cover=cover.name,
        q=q,
        bound=bound,
        primes=tuple(primes),
        transcripts=tuple(transcripts),
        all_ok=all(t.ok for t in transcripts),
    )


HYPOTHESIS_NOT_MET = "HYPOTHESIS_NOT_MET"
OBSTRUCTION_PRESENT = "OBSTRUCTION_PRESENT"
NO_OBSTRUCTION_FOUND = "NO_OBSTRUCTION_FOUND"


@dataclass(frozen=True)
class ParametricObstructionReport:
    """Obstruction analysis for the parametric family of specializations.

    The interpretation of the obstruction primes (that no parametric set
    of specializations exhausts all local behaviour at them) requires the
    group to contain a non-cyclic abelian subgroup of exponent q.  The
    report checks the computable necessary condition q^2 | group order and
    q dividing at least two branch inertia orders; when it fails, the
    hypothesis provably cannot hold and the status says so.  When it
    holds, the status assumes the subgroup exists and says so in
    `assumption`."""

    cover: str
    q: int
    status: str
    assumption: str
    certificate: ObstructionCertificate | None

    def to_json(self) -> dict:
        return {
            "cover": self.cover,
            "q": self.q,
            "status": self.status,
            "assumption": self.assumption,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


def parametric_obstruction_report(
    cover: Cover, q: int, bound: int
) -> ParametricObstructionReport:
    branches = branch_points(cover)
    n = cover.group_order
    q_branches = sum(1 for bp in branches if bp.ram_index % q == 0)
    if n % (q * q) != 0 or q_branches < 2:
        return ParametricObstructionReport(
            cover=cover.name, q=q, status=HYPOTHESIS_NOT_MET,
            assumption=(
                f"a non-cyclic abelian subgroup of exponent {q} needs "
                f"{q}^2 | {n} and at least two branches with {q} | e; "
                "this cover provably has none"
            ),
            certificate=None,
        )
    cert = grunwald_obstruction(cover, q, bound, branches=branches)
    status = (
        OBSTRUCTION_PRESENT if cert.primes and cert.all_ok else NO_OBSTRUCTION_FOUND
    )
    return ParametricObstructionReport(
        cover=cover.name, q=q, status=status,
        assumption=(
            "assumes the cover group contains a non-cyclic abelian "
            f"subgroup of exponent {q} (necessary conditions verified: "
            f"{q}^2 | {n}, {q_branches} branches with {q} | e)"
        ),
        certificate=cert,
    )
