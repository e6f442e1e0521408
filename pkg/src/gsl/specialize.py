"""Specialization of a cover at rational points: tame predictions and
their verification against the p-adic oracle.

The prediction machinery, given a specialization point t0 and a prime p
outside the cover's conservative bad set:

  * find where t0 meets the branch divisor modulo p: for a finite branch
    locus m the multiplicity is v_p(m(t0)) (p-integral t0), for the point
    at infinity it is -v_p(t0);
  * no meeting predicts an unramified specialization;
  * a meeting of multiplicity a against a branch of inertia order e
    predicts ramification index e / gcd(a, e); when gcd(a, e) = 1 the
    prediction is exact and pins the residue degree f as the Frobenius
    order in the branch residue field at the meeting place; otherwise only
    divisibility information survives (f is a multiple of that order);
  * every prediction is checked against the independent local splitting
    oracle and the comparison recorded as a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .covers import BranchPoint, Cover, branch_points, conservative_bad_primes
from .errors import (
    ChartMixing,
    DomainError,
    HypothesisViolation,
    MeetingUniquenessError,
    NonUniform,
    PrecisionExhausted,
    WildOrIrregular,
)
from .exact import (
    Rat,
    UniPoly,
    crt_combine,
    disc_y,
    factor_int,
    is_prime,
    rat_to_str,
    rational_valuation,
    squarefree_part,
)
from .modp import factor_mod_p, reduce_relative
from .padic import LocalSplittingType, local_splitting_type, quadratic_local_class


# ---------------------------------------------------------------------------
# meetings


@dataclass(frozen=True)
class MeetingDatum:
    """t0 meets one branch locus at p: with which multiplicity, and at
    which residue (the common value of t0 and the locus root mod p; 0 on
    the 1/T chart for the point at infinity)."""

    prime: int
    locus: UniPoly | None
    multiplicity: int
    residue: int

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "locus": None if self.locus is None else self.locus.to_json(),
            "multiplicity": self.multiplicity,
            "residue": self.residue,
        }


def intersection_multiplicity(branch: BranchPoint, t0: Rat, p: int) -> int:
    """The intersection multiplicity of the section t = t0 with the branch
    locus of `branch` above the prime p (0 when they do not meet)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    t0 = Fraction(t0)
    if branch.locus is None:
        v = rational_valuation(t0, p) if t0 != 0 else 0
        return max(0, -v)
    if t0 != 0 and rational_valuation(t0, p) < 0:
        return 0
    mval = branch.locus(t0)
    if mval == 0:
        raise HypothesisViolation(
            f"specialization point {t0} lies on a branch locus"
        )
    return max(0, rational_valuation(mval, p))


def meeting_prime(
    branches: Sequence[BranchPoint], t0: Rat, p: int
) -> MeetingDatum | None:
    """The unique branch that t = t0 meets above p, or None.  Raises
    MeetingUniquenessError when several loci meet t0 at the same prime
    (only possible at a bad prime)."""
    t0 = Fraction(t0)
    hits = []
    for bp in branches:
        a = intersection_multiplicity(bp, t0, p)
        if a > 0:
            hits.append((bp, a))
    if not hits:
        return None
    if len(hits) > 1:
        names = [
            "infinity" if bp.locus is None else str(bp.locus.to_json())
            for bp, _ in hits
        ]
        raise MeetingUniquenessError(
            f"t0 = {t0} meets several branch loci at p = {p}: {names}; "
            "treat p as a bad prime"
        )
    bp, a = hits[0]
    if bp.locus is None:
        residue = 0
    else:
        residue = int(
            t0.numerator * pow(t0.denominator, -1, p) % p
        )
    return MeetingDatum(prime=p, locus=bp.locus, multiplicity=a, residue=residue)


def meeting_primes(branches: Sequence[BranchPoint], t0: Rat) -> list[int]:
    """All primes where t = t0 meets some branch locus."""
    t0 = Fraction(t0)
    out: set[int] = set(factor_int(t0.denominator)) if t0 != 0 else set()
    for bp in branches:
        if bp.locus is None:
            continue
        mval = bp.locus(t0)
        if mval == 0:
            raise HypothesisViolation(
                f"specialization point {t0} lies on a branch locus"
            )
        out.update(factor_int(mval.numerator))
        out.update(factor_int(mval.denominator))
    return sorted(out)


# ---------------------------------------------------------------------------
# predictions


@dataclass(frozen=True)
class DecompositionPrediction:
    """Predicted local invariants of the specialized splitting field at p.

    mode "exact": inertia e and residue degree f are both pinned.
    mode "divisible": e is pinned, f is a multiple of f_lower.
    mode "unramified": e = 1, nothing claimed about f."""

    prime: int
    mode: str
    e: int
    f: int | None
    f_lower: int | None
    meeting: MeetingDatum | None

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "mode": self.mode,
            "e": self.e,
            "f": self.f,
            "f_lower": self.f_lower,
            "meeting": None if self.meeting is None else self.meeting.to_json(),
        }


def frobenius_order_at_branch(branch: BranchPoint, p: int, residue: int) -> int:
    """Order of Frobenius at p in the residue field of the branch places,
    at the place of the branch point's field pinned by tau = residue mod p:
    the common degree of the irreducible factors of the relative minimal
    polynomial reduced there."""
    rel = branch.residue
    reduced = reduce_relative(list(rel.rel), rel.base, (p, residue))
    fac = factor_mod_p(reduced.coeffs, p)
    degs = {len(g.coeffs) - 1 for g, _ in fac}
    if len(degs) != 1 or any(m != 1 for _, m in fac):
        raise NonUniform(
            f"branch residue data degenerates at p = {p}; "
            "the prime must be treated as bad"
        )
    return degs.pop()


def predict_inertia(branch: BranchPoint, t0: Rat, p: int) -> int:
    """Predicted inertia order of the specialization at p from one branch:
    e / gcd(multiplicity, e), which is e itself exactly when the meeting
    multiplicity is coprime to e, and 1 when there is no meeting."""
    a = intersection_multiplicity(branch, t0, p)
    e = branch.ram_index
    return e // math.gcd(a, e)


def predict_decomposition(
    cover: Cover,
    t0: Rat,
    p: int,
    branches: Sequence[BranchPoint] | None = None,
) -> DecompositionPrediction:
    """The tame prediction at p for the specialization at t0."""
    if branches is None:
        branches = branch_points(cover)
    t0 = Fraction(t0)
    meet = meeting_prime(branches, t0, p)
    if meet is None:
        return DecompositionPrediction(
            prime=p, mode="unramified", e=1, f=None, f_lower=None, meeting=None,
        )
    branch = next(
        bp for bp in branches if bp.locus == meet.locus
    )
    e = branch.ram_index
    g = math.gcd(meet.multiplicity, e)
    fb = frobenius_order_at_branch(branch, p, meet.residue)
    if g == 1:
        return DecompositionPrediction(
            prime=p, mode="exact", e=e, f=fb, f_lower=None, meeting=meet,
        )
    return DecompositionPrediction(
        prime=p, mode="divisible", e=e // g, f=None, f_lower=fb, meeting=meet,
    )


# ---------------------------------------------------------------------------
# specialization and verification


def specialize_poly(cover: Cover, t0: Rat) -> UniPoly:
    """P(t0, Y); refuses points on the discriminant locus."""
    t0 = Fraction(t0)
    sf = squarefree_part(disc_y(cover.poly))
    if sf(t0) == 0:
        raise HypothesisViolation(
            f"t0 = {t0} lies on the branch locus of the cover"
        )
    return UniPoly(
        [cover.poly.coeff(i)(t0) for i in range(cover.degree + 1)]
    )


MATCH = "MATCH"
PARTIAL_MATCH = "PARTIAL_MATCH"
MISMATCH = "MISMATCH"
SKIPPED_BAD_PRIME = "SKIPPED_BAD_PRIME"
ORACLE_FAILURE = "ORACLE_FAILURE"


@dataclass(frozen=True)
class ReportEntry:
    """One prime of one specialization: the prediction, what the oracle
    said, and the comparison verdict."""

    prime: int
    prediction: DecompositionPrediction | None
    oracle: LocalSplittingType | None
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "prediction": None if self.prediction is None else self.prediction.to_json(),
            "oracle": None if self.oracle is None else self.oracle.to_json(),
            "verdict": self.verdict,
            "note": self.note,
        }


@dataclass(frozen=True)
class SpecializationReport:
    cover: str
    t0: Rat
    entries: tuple[ReportEntry, ...]

    def to_json(self) -> dict:
        return {
            "cover": self.cover,
            "t0": rat_to_str(Fraction(self.t0)),
            "entries": [e.to_json() for e in self.entries],
        }

    @property
    def worst(self) -> str:
        order = [MISMATCH, ORACLE_FAILURE, PARTIAL_MATCH, SKIPPED_BAD_PRIME, MATCH]
        for v in order:
            if any(e.verdict == v for e in self.entries):
                return v
        return MATCH


def _uniform_ef(st: LocalSplittingType) -> tuple[int, int] | None:
    efs = {(e, f) for e, f, _ in st.factors}
    if len(efs) == 1:
        return efs.pop()
    return None


def _compare(pred: DecompositionPrediction, st: LocalSplittingType) -> tuple[str, str]:
    if pred.mode == "unramified":
        if st.is_unramified:
            return MATCH, ""
        return MISMATCH, "predicted unramified, oracle found ramification"
    ef = _uniform_ef(st)
    if ef is None:
        return MISMATCH, (
            "oracle splitting is not isotypic; a Galois specialization "
            "cannot do this at a good prime"
        )
    e, f = ef
    if pred.mode == "exact":
        if (e, f) == (pred.e, pred.f):
            return MATCH, ""
        return MISMATCH, f"predicted (e, f) = ({pred.e}, {pred.f}), oracle found ({e}, {f})"
    # divisible mode
    if e == pred.e and pred.f_lower is not None and f % pred.f_lower == 0:
        return PARTIAL_MATCH, ""
    return MISMATCH, (
        f"predicted e = {pred.e} with {pred.f_lower} | f, "
        f"oracle found (e, f) = ({e}, {f})"
    )


def verify_specialization(
    cover: Cover,
    t0: Rat,
    primes: Sequence[int] | None = None,
    branches: Sequence[BranchPoint] | None = None,
    bad: frozenset[int] | None = None,
) -> SpecializationReport:
    """Predict and verify the local behaviour of the specialization at t0.

    With primes=None, every prime where t0 meets the branch divisor is
    examined (the only primes where anything nontrivial is predicted).
    Each prime gets a verdict: MATCH / PARTIAL_MATCH (divisibility-mode
    agreement) / MISMATCH / SKIPPED_BAD_PRIME / ORACLE_FAILURE."""
    t0 = Fraction(t0)
    if branches is None:
        branches = branch_points(cover)
    if bad is None:
        bad = conservative_bad_primes(cover)
    if primes is None:
        primes = meeting_primes(branches, t0)
    f_t0 = specialize_poly(cover, t0)
    entries = []
    for p in sorted(primes):
        if p in bad or p == 2:
            entries.append(ReportEntry(
                prime=p, prediction=None, oracle=None,
                verdict=SKIPPED_BAD_PRIME,
                note="prime is in the cover's conservative bad set",
            ))
            continue
        try:
            pred = predict_decomposition(cover, t0, p, branches=branches)
        except (MeetingUniquenessError, NonUniform) as exc:
            entries.append(ReportEntry(
                prime=p, prediction=None, oracle=None,
                verdict=ORACLE_FAILURE, note=f"prediction failed: {exc}",
            ))
            continue
        try:
            st = local_splitting_type(f_t0, p)
        except (WildOrIrregular, PrecisionExhausted) as exc:
            entries.append(ReportEntry(
                prime=p, prediction=pred, oracle=None,
                verdict=ORACLE_FAILURE, note=str(exc),
            ))
            continue
        verdict, note = _compare(pred, st)
        entries.append(ReportEntry(
            prime=p, prediction=pred, oracle=st, verdict=verdict, note=note,
        ))
    return SpecializationReport(cover=cover.name, t0=t0, entries=tuple(entries))


# ---------------------------------------------------------------------------
# constructing specialization points


def approximate_specialization_point(
    congruences: Sequence[tuple[int, int]],
    denominators: Sequence[tuple[int, int]] = (),
) -> Rat:
    """A rational t0 with prescribed finite-chart congruences and
    prescribed pole orders at other primes.

    congruences: pairs (modulus, residue) forcing t0 = residue (mod
    modulus) with t0 integral at the primes of the modulus.
    denominators: pairs (p, k) forcing v_p(t0) = -k.

    The two charts cannot be mixed at one prime (ChartMixing).

    approximate_specialization_point([(25, 10), (49, 7)]) == 1085
    """
    den = 1
    den_primes = []
    for p, k in denominators:
        if not is_prime(p):
            raise DomainError(f"denominator prime {p} is not prime")
        if k < 1:
            raise DomainError("pole order must be >= 1")
        den *= p**k
        den_primes.append(p)
    for m, _ in congruences:
        for p in den_primes:
            if m % p == 0:
                raise ChartMixing(
                    f"prime {p} appears both as a congruence modulus factor "
                    "and as a denominator prime"
                )
    pairs = [(m, r * den % m) for m, r in congruences]
    for p in den_primes:
        pairs.append((p, 1))  # keep the numerator a p-unit
    if not pairs:
        return Fraction(0)
    x = crt_combine(pairs)
    if x == 0:
        x = math.prod(m for m, _ in pairs)
    return Fraction(x, den)


def realize_local_class(
    cover: Cover,
    p: int,
    target: str,
    branches: Sequence[BranchPoint] | None = None,
    bound: int | None = None,
) -> int:
    """The least positive integer t0 whose value m(t0) under the first
    finite branch locus lies in the requested square class of Q_p
    ("1", "u", "p", "up"); p must be odd."""
    if target not in ("1", "u", "p", "up"):
        raise DomainError("target class must be one of '1', 'u', 'p', 'up'")
    if branches is None:
        branches = branch_points(cover)
    locus = next((bp.locus for bp in branches if bp.locus is not None), None)
    if locus is None:
        raise DomainError("cover has no finite branch locus")
    if bound is None:
        bound = 16 * p * p
    for t0 in range(1, bound + 1):
        mval = locus(Fraction(t0))
        if mval == 0:
            continue
        if quadratic_local_class(mval, p) == target:
            return t0
    raise DomainError(
        f"no specialization point below {bound} realizes class {target} at {p}"
    )
