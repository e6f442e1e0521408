"""Branch geometry of regular Galois covers of the projective line.

A cover is a monic irreducible P(T, Y) over Q whose splitting field over
Q(T) is itself (regular Galois, group order = deg_Y P).  This module finds
its branch points and, for each, the cyclic inertia order e and the residue
field of the branch places, by rational (Duval-style) Puiseux expansion:

  * work over the exact field of definition k = Q[tau]/(m(tau)) of the
    branch point -- never over floating point, never over C;
  * Newton polygon sides of slope m/q contribute ramification q; the side
    residual is factored over the current field and each irreducible factor
    is followed separately (conjugate places are counted through their
    residue degree, not re-expanded);
  * the substitution x -> w0^v x^q, y -> x^m (w0^u + y) with u q - v m = 1
    keeps every coefficient inside the field generated by the residual
    roots, so the coefficient field at the end IS the residue field of the
    place (no parasitic roots of unity);
  * a place is resolved as soon as its residual root is simple -- from
    there the implicit function theorem pins a unique power series with no
    further field growth, so the residue data is exact, not truncated.

The expansion is exact polynomial arithmetic throughout; the `prec`
argument only caps the recursion depth (UnstableResidueField when a path
exceeds it, which no tame cover does).
"""

from __future__ import annotations

import itertools
import json
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import (
    DomainError,
    HypothesisViolation,
    NonUniformRamification,
    SchemaError,
    UnstableResidueField,
)
from .exact import BiPoly, Rat, UniPoly, disc_y, factor_int, is_prime, squarefree_part
from .modp import frobenius_data
from .nfield import (
    Adjunction,
    NumberField,
    adjoin_root,
    factor_nf,
    factor_rational,
    nf_from_unipoly,
    nf_trim,
    relative_min_poly,
)
from .padic import _sides


# ---------------------------------------------------------------------------
# cover data


@dataclass(frozen=True)
class Cover:
    """A regular Galois cover of the T-line: monic P(T, Y), group order =
    deg_Y P."""

    name: str
    group_order: int
    poly: BiPoly

    @property
    def degree(self) -> int:
        return self.poly.degree_y

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "group_order": self.group_order,
            "P": self.poly.to_json(),
            "assert_regular_galois": True,
        }


def load_cover(source) -> Cover:
    """Build a Cover from a dict, a JSON string, or a path to a JSON file.

    Schema: {"name": str, "group_order": int, "P": [[rat-string, ...], ...]
    (rows by Y-degree, T-coefficients ascending), "assert_regular_galois":
    true}.  Raises SchemaError on anything malformed."""
    if isinstance(source, (str, Path)) and not (
        isinstance(source, str) and source.lstrip().startswith("{")
    ):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise SchemaError(f"cannot read cover file {source}: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"cover file {source} is not valid JSON: {exc}") from exc
    elif isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"cover JSON is malformed: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise SchemaError("cover data must be a JSON object")
    for key in ("name", "group_order", "P", "assert_regular_galois"):
        if key not in data:
            raise SchemaError(f"cover data is missing the '{key}' key")
    if data["assert_regular_galois"] is not True:
        raise SchemaError(
            "only covers declared regular Galois are supported "
            "(assert_regular_galois must be true)"
        )
    name = data["name"]
    if not isinstance(name, str) or not name:
        raise SchemaError("cover 'name' must be a non-empty string")
    n = data["group_order"]
    if not isinstance(n, int) or n < 2:
        raise SchemaError("'group_order' must be an integer >= 2")
    rows = data["P"]
    if not isinstance(rows, list) or not rows:
        raise SchemaError("'P' must be a non-empty list of coefficient rows")
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(c, str) for c in row):
            raise SchemaError("each row of 'P' must be a list of rational strings")
    try:
        P = BiPoly.from_json(rows)
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        raise SchemaError(f"bad rational string in 'P': {exc}") from exc
    if P.degree_y != n:
        raise SchemaError(
            f"group_order {n} must equal the Y-degree {P.degree_y} "
            "for a regular Galois cover"
        )
    if not P.is_monic_in_y:
        raise SchemaError("'P' must be monic in Y")
    if all(P.coeff(i).degree < 1 for i in range(P.degree_y + 1)):
        raise SchemaError("'P' must actually involve T")
    return Cover(name=name, group_order=n, poly=P)


def bundled_covers() -> dict[str, Cover]:
    """The covers shipped with the package, keyed by name."""
    data_dir = Path(__file__).parent / "data"
    out = {}
    for path in sorted(data_dir.glob("*.json")):
        cover = load_cover(path)
        out[cover.name] = cover
    return out


# ---------------------------------------------------------------------------
# residue data of branch places


@dataclass(frozen=True)
class RelativeField:
    """A residue field presented relative to the field of definition of a
    branch point: `base` is the minimal polynomial m of the branch
    coordinate, `rel` the monic minimal polynomial r(Z) of a residue field
    generator over Q[tau]/(m), its coefficients polynomials in tau."""

    base: UniPoly
    rel: tuple[UniPoly, ...]

    @property
    def degree(self) -> int:
        return len(self.rel) - 1

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "rel": [c.to_json() for c in self.rel],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RelativeField":
        return cls(
            base=UniPoly.from_json(data["base"]),
            rel=tuple(UniPoly.from_json(c) for c in data["rel"]),
        )


@dataclass(frozen=True)
class PuiseuxPlace:
    """One place of the cover above a branch point: its ramification index,
    its residue degree over the branch point's field of definition, and a
    relative minimal polynomial presenting that residue extension."""

    ram_index: int
    residue_degree: int
    rel_min_poly: tuple[UniPoly, ...]


@dataclass(frozen=True)
class BranchPoint:
    """A branch point of the cover: locus None means the point at infinity
    (base coordinate U = 1/T); d_order is the residue degree of the places
    over the field of definition of the point."""

    locus: UniPoly | None
    ram_index: int
    residue: RelativeField
    d_order: int

    def to_json(self) -> dict:
        return {
            "locus": None if self.locus is None else self.locus.to_json(),
            "ram_index": self.ram_index,
            "residue": self.residue.to_json(),
            "d_order": self.d_order,
        }


# ---------------------------------------------------------------------------
# polynomials in x over a number field: plain coefficient lists


def _kx_trim(K, a: list) -> list:
    while a and K.is_zero(a[-1]):
        a.pop()
    return a


def _kx_add(K, a, b):
    n = max(len(a), len(b))
    z = K.zero()
    return _kx_trim(K, [
        K.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
        for i in range(n)
    ])


def _kx_mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _kx_trim(K, out)


def _kx_scale(K, a, c):
    return _kx_trim(K, [K.mul(x, c) for x in a])


def _kx_val(K, a):
    """x-adic valuation (index of the first non-zero coefficient), or None
    for the zero polynomial."""
    for i, c in enumerate(a):
        if not K.is_zero(c):
            return i
    return None


def _from_unipoly_at(K, c: UniPoly, tau) -> list:
    """c(tau + x) as a polynomial in x over K, by Horner."""
    out: list = []
    lin = [tau, K.one()]
    for i in range(c.degree, -1, -1):
        out = _kx_add(K, _kx_mul(K, out, lin), [K.from_rat(c.coeff(i))])
    return out


def _h_at_branch(K, P: BiPoly, tau) -> list[list]:
    """H(x, y) = P(tau + x, y), rows by y-degree over K[x]."""
    return [_from_unipoly_at(K, P.coeff(i), tau) for i in range(P.degree_y + 1)]


def _h_embed(adj: Adjunction, H: list[list]) -> list[list]:
    L = adj.field
    return [ _kx_trim(L, [adj.embed(c) for c in row]) for row in H ]


def _h_shift_y(K, H: list[list], xi) -> list[list]:
    """H(x, y + xi)."""
    n = len(H) - 1
    out: list[list] = [[] for _ in range(n + 1)]
    xi_pows = [K.one()]
    for _ in range(n):
        xi_pows.append(K.mul(xi_pows[-1], xi))
    for i, row in enumerate(H):
        if not row:
            continue
        for b in range(i + 1):
            c = math.comb(i, b)
            scaled = _kx_scale(K, row, K.scale(xi_pows[i - b], c))
            out[b] = _kx_add(K, out[b], scaled)
    return out


def _h_eval_x0(K, H: list[list]) -> list:
    """H(0, y) as a y-polynomial over K."""
    return nf_trim(K, [row[0] if row else K.zero() for row in H])


# ---------------------------------------------------------------------------
# the Duval transform and polygon recursion


def _duval_transform(K, H, q: int, mslope: int, u: int, v: int, w0, ell: int):
    """H(w0^v x^q, x^mslope (w0^u + y)) / x^ell, rows by y-degree.

    Every monomial c x^a y^i maps to
      c w0^(v a) x^(q a) x^(mslope i) (w0^u + y)^i,
    and the whole polynomial is exactly divisible by x^ell (the minimum of
    q a + mslope i over the support, attained on the polygon side)."""
    n = len(H) - 1
    w0u = K.pow_el(w0, u)
    w0u_pows = [K.one()]
    for _ in range(n):
        w0u_pows.append(K.mul(w0u_pows[-1], w0u))
    out: list[list] = [[] for _ in range(n + 1)]
    for i, row in enumerate(H):
        for a, c in enumerate(row):
            if K.is_zero(c):
                continue
            base = K.mul(c, K.pow_el(w0, v * a))
            shift = q * a + mslope * i
            # distribute over (w0^u + y)^i
            for b in range(i + 1):
                coeff = K.scale(K.mul(base, w0u_pows[i - b]), math.comb(i, b))
                row_out = out[b]
                while len(row_out) <= shift:
                    row_out.append(K.zero())
                row_out[shift] = K.add(row_out[shift], coeff)
    shifted: list[list] = []
    for row in out:
        row = _kx_trim(K, row)
        if row:
            v0 = _kx_val(K, row)
            assert v0 is not None and v0 >= ell, "transform must divide by x^ell"
            shifted.append(row[ell:])
        else:
            shifted.append(row)
    return shifted


@dataclass
class _Path:
    """A resolved place: accumulated ramification, the final coefficient
    field (= residue field of the place), and the image of the branch
    coordinate tau inside it."""

    e: int
    field: NumberField
    tau: tuple


class _Expander:
    MAX_DEPTH = 48

    def __init__(self, max_steps: int):
        self.max_steps = max_steps
        self.steps = 0

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise UnstableResidueField(
                "Puiseux recursion exceeded its precision budget "
                f"({self.max_steps} polygon levels); the residue tower has "
                "not stabilized"
            )

    def places(self, K0: NumberField, H: list[list]) -> list[_Path]:
        """All places over x = 0 of monic-in-y H over K0[x]."""
        out: list[_Path] = []
        hy = _h_eval_x0(K0, H)
        assert len(hy) - 1 == len(H) - 1, "H must stay monic in y"
        for rho, mu in factor_nf(K0, hy):
            adj = adjoin_root(K0, rho)
            L = adj.field
            tau_L = adj.embed(K0.gen()) if L is not K0 else K0.gen()
            if mu == 1:
                out.append(_Path(1, L, tau_L))
                continue
            HL = _h_embed(adj, H) if L is not K0 else H
            H2 = _h_shift_y(L, HL, adj.root)
            sub = self._polygon(L, H2, mu, tau_L, 1, 0)
            got = sum(p.e * (p.field.degree // L.degree) for p in sub)
            if got != mu:
                raise NonUniformRamification(
                    f"cluster of multiplicity {mu} resolved into places of "
                    f"total degree {got}"
                )
            out.extend(sub)
        total = sum(p.e * (p.field.degree // K0.degree) for p in out)
        assert total == len(H) - 1, "place degrees must sum to the y-degree"
        return out

    def _polygon(self, K, H, mu: int, tau, e_acc: int, depth: int) -> list[_Path]:
        """Places through the origin of H (y-multiplicity mu at x=0)."""
        self._tick()
        if depth > self.MAX_DEPTH:
            raise UnstableResidueField("Puiseux recursion too deep")
        vals = [(_kx_val(K, row)) for row in H]
        if vals[0] is None:
            raise HypothesisViolation(
                "the cover polynomial has a rational branch component; "
                "it cannot be irreducible over Q(T)"
            )
        pts = [(i, v) for i, v in enumerate(vals) if v is not None]
        out: list[_Path] = []
        extent = 0
        for xa, ya, xb, yb, lam in _sides(pts):
            if lam <= 0:
                continue
            extent += xb - xa
            q = lam.denominator
            mslope = lam.numerator
            # residual: coefficients along the side, one per q-step
            R = []
            for kappa in range((xb - xa) // q + 1):
                j = xa + kappa * q
                vline = ya - kappa * mslope
                row = H[j]
                c = row[vline] if vline < len(row) else K.zero()
                R.append(c)
            assert not K.is_zero(R[0]) and not K.is_zero(R[-1])
            if mslope == 1:
                u, v = 1, q - 1
            else:
                u = pow(q, -1, mslope)
                v = (u * q - 1) // mslope
            ell = q * ya + mslope * xa
            for rho_w, nu in factor_nf(K, R):
                adj = adjoin_root(K, rho_w)
                L = adj.field
                tau_L = adj.embed(tau) if L is not K else tau
                if nu == 1:
                    out.append(_Path(e_acc * q, L, tau_L))
                    continue
                HL = _h_embed(adj, H) if L is not K else H
                H3 = _duval_transform(L, HL, q, mslope, u, v, adj.root, ell)
                out.extend(self._polygon(L, H3, nu, tau_L, e_acc * q, depth + 1))
        assert extent == mu, "polygon sides must account for the full multiplicity"
        return out


def _places_over(cover: Cover, locus: UniPoly | None, max_steps: int) -> tuple[NumberField, list[_Path]]:
    """Entry field and resolved paths of the places over a branch locus."""
    if locus is None:
        P = _infinity_chart(cover.poly)
        K0 = NumberField(UniPoly((Fraction(0), Fraction(1))))  # Q, tau = 0
    else:
        P = cover.poly
        K0 = NumberField(locus)
    tau = K0.gen()
    H = _h_at_branch(K0, P, tau)
    exp = _Expander(max_steps)
    return K0, exp.places(K0, H)


def _infinity_chart(P: BiPoly) -> BiPoly:
    """The cover rewritten around T = infinity: with U = 1/T and
    Z = Y U^s for the least integral s, the model U^(n s) P(1/U, Z/U^s)
    is monic in Z with polynomial coefficients; its places over U = 0 are
    the places of the cover over T = infinity."""
    n = P.degree_y
    s = 1
    for i in range(n):
        ci = P.coeff(i)
        if ci.degree >= 1:
            s = max(s, -((-ci.degree) // (n - i)))  # ceil
    rows = []
    for i in range(n + 1):
        ci = P.coeff(i)
        cap = (n - i) * s
        assert ci.degree <= cap
        coeffs = [Fraction(0)] * (cap + 1)
        for a in range(ci.degree + 1):
            coeffs[cap - a] = ci.coeff(a)
        rows.append(UniPoly(coeffs))
    return BiPoly(rows)


def _default_steps(cover: Cover, locus: UniPoly | None) -> int:
    n = cover.degree
    d = disc_y(cover.poly)
    mult = 0
    if locus is not None:
        while d.degree >= locus.degree:
            q, r = divmod(d, locus)
            if not r.is_zero:
                break
            d = q
            mult += 1
    return 2 * n + mult + 8


def puiseux_at(
    cover: Cover, locus: UniPoly | None, prec: int | None = None
) -> tuple[PuiseuxPlace, ...]:
    """All places of the cover above one branch locus (None = infinity),
    each with its ramification index, residue degree, and a relative
    minimal polynomial for the residue field over Q[tau]/(locus).

    `prec` caps the polygon recursion depth; the arithmetic itself is
    exact, so any sufficient cap yields identical (stable) output."""
    if locus is not None:
        if locus.degree < 1 or locus.lc != 1:
            raise DomainError("branch locus must be monic of degree >= 1")
    max_steps = prec if prec is not None else _default_steps(cover, locus)
    K0, paths = _places_over(cover, locus, max_steps)
    base = locus if locus is not None else UniPoly((Fraction(0), Fraction(1)))
    out = []
    for p in paths:
        d = p.field.degree // K0.degree
        if d == 1:
            rel = (UniPoly(), UniPoly.const(1))  # Z
        else:
            rel = tuple(
                relative_min_poly(p.field, p.tau, p.field.gen(), K0.degree)
            )
        out.append(PuiseuxPlace(
            ram_index=p.e, residue_degree=d, rel_min_poly=rel,
        ))
    out.sort(key=lambda pl: (pl.ram_index, pl.residue_degree))
    return tuple(out)


def branch_points(cover: Cover, prec: int | None = None) -> tuple[BranchPoint, ...]:
    """The branch points of the cover: the irreducible factors of the
    squarefree part of disc_Y(P) whose places are actually ramified, plus
    the point at infinity when it is.  Uniformity across the places of one
    locus (equal e, equal residue degree) is checked and is a consequence
    of the Galois hypothesis; NonUniformRamification otherwise."""
    n = cover.degree
    sf = squarefree_part(disc_y(cover.poly))
    loci: list[UniPoly | None] = [f for f, _ in factor_rational(sf)]
    loci.append(None)
    out = []
    rh_sum = 0
    for locus in loci:
        places = puiseux_at(cover, locus, prec)
        es = {p.ram_index for p in places}
        ds = {p.residue_degree for p in places}
        if len(es) != 1 or len(ds) != 1:
            where = "infinity" if locus is None else repr(locus)
            raise NonUniformRamification(
                f"places over {where} have mixed invariants "
                f"{sorted((p.ram_index, p.residue_degree) for p in places)}; "
                "the cover cannot be regular Galois"
            )
        e, d = es.pop(), ds.pop()
        assert sum(p.ram_index * p.residue_degree for p in places) == n
        if e == 1:
            continue
        base = locus if locus is not None else UniPoly((Fraction(0), Fraction(1)))
        deg_locus = base.degree
        rh_sum += deg_locus * (n - n // e)
        out.append(BranchPoint(
            locus=locus,
            ram_index=e,
            residue=RelativeField(base=base, rel=places[0].rel_min_poly),
            d_order=d,
        ))
    # Riemann-Hurwitz over Q: 2 genus - 2 = -2 n + sum deg (n - n/e)
    twog = rh_sum - 2 * n + 2
    if twog % 2 != 0 or twog < 0:
        raise HypothesisViolation(
            f"tame ramification data violates Riemann-Hurwitz (2g = {twog}); "
            "the input is not a regular Galois cover or has wild geometry"
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# bad primes and hypothesis checks


def _primes_of_rat(x: Rat, acc: set[int]):
    if x == 0:
        return
    for p in factor_int(x.numerator):
        acc.add(p)
    for p in factor_int(x.denominator):
        acc.add(p)


def _abs_residue_modulus(bp: BranchPoint) -> UniPoly:
    """An absolute minimal polynomial of the residue field of bp's places
    (over Q)."""
    K0 = NumberField(bp.residue.base)
    if bp.d_order == 1:
        return bp.residue.base
    rho = [K0.from_unipoly(c) for c in bp.residue.rel]
    adj = adjoin_root(K0, rho)
    return adj.field.modulus


def conservative_bad_primes(cover: Cover) -> frozenset[int]:
    """A finite set of primes outside which the tame prediction machinery
    is valid: primes up to the group order (wild candidates), primes of bad
    reduction of the discriminant locus (degree drop, colliding branch
    points, non-integrality), and primes ramified in or non-integral for
    the residue fields of the branches."""
    n = cover.degree
    bad: set[int] = set()
    for p in range(2, n + 1):
        if is_prime(p):
            bad.add(p)
    for i in range(n + 1):
        for c in cover.poly.coeff(i).coeffs:
            for p in factor_int(c.denominator):
                bad.add(p)
    d = disc_y(cover.poly)
    _primes_of_rat(d.lc, bad)
    for c in d.coeffs:
        for p in factor_int(c.denominator):
            bad.add(p)
    sf = squarefree_part(d)
    if sf.degree >= 1:
        from .exact import discriminant

        _primes_of_rat(discriminant(sf), bad)
    for bp in branch_points(cover):
        if bp.locus is not None:
            for c in bp.locus.coeffs:
                for p in factor_int(c.denominator):
                    bad.add(p)
        for cp in bp.residue.rel:
            for c in cp.coeffs:
                for p in factor_int(c.denominator):
                    bad.add(p)
        M = _abs_residue_modulus(bp)
        if M.degree >= 2:
            from .exact import discriminant

            _primes_of_rat(discriminant(M), bad)
    return frozenset(bad)


def _cyclotomic(e: int) -> UniPoly:
    """The e-th cyclotomic polynomial over Q."""
    f = UniPoly([Fraction(-1)] + [Fraction(0)] * (e - 1) + [Fraction(1)])
    for d in range(1, e):
        if e % d == 0:
            f = f.divexact(_cyclotomic(d))
    return f


def roots_of_unity_check(cover: Cover) -> bool:
    """Tame-inertia consistency: the residue field of a branch with
    ramification e must contain the e-th roots of unity.  True when every
    branch passes."""
    for bp in branch_points(cover):
        e = bp.ram_index
        if e <= 2:
            continue  # -1 and 1 are everywhere
        K0 = NumberField(bp.residue.base)
        if bp.d_order == 1:
            L, = (K0,)
        else:
            rho = [K0.from_unipoly(c) for c in bp.residue.rel]
            L = adjoin_root(K0, rho).field
        phi = nf_from_unipoly(L, _cyclotomic(e))
        if any(len(g) != 2 for g, _ in factor_nf(L, phi)):
            return False
    return True


def probabilistic_galois_check(
    cover: Cover, samples: int = 32, seed: int | None = None
) -> bool:
    """Sample specializations and check the Galois signature: at a prime of
    good, squarefree reduction the irreducible factors of P(t0, Y) mod p
    all share one degree.  A regular Galois cover passes always; most
    non-Galois inputs fail within a few samples."""
    if seed is None:
        seed = int(os.environ.get("GSL_SEED", "0x5EED"), 0)
    rng = random.Random(seed)
    bad = conservative_bad_primes(cover)
    done = 0
    attempts = 0
    while done < samples and attempts < samples * 40:
        attempts += 1
        t0 = Fraction(rng.randrange(-999, 1000))
        p = rng.choice([q for q in range(3, 300) if is_prime(q) and q not in bad])
        f_t0 = UniPoly(
            [cover.poly.coeff(i)(t0) for i in range(cover.degree + 1)]
        )
        try:
            fd = frobenius_data(f_t0, p)
        except Exception:
            continue
        degs = set(fd.cycle_type.parts)
        if len(degs) != 1:
            return False
        done += 1
    return True
