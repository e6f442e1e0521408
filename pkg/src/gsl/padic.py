"""Certified p-adic splitting oracle for tame odd primes.

Given a separable univariate f over Q and an odd prime p, compute the
multiset of (ramification index, residue degree) of the factors of f over
Q_p, together with multiplicities — independently of any global prediction
machinery, so that predictions can be *verified* against this module.

Method: work in truncated unramified extensions W = Z_p[x]/(Phi) mod p^N
with N at least 2*v_p(disc f)+1 (so every Hensel/Krasner step used is a
theorem, not a heuristic):

1. factor f mod p; a squarefree reduction certifies an unramified answer
   immediately (Hensel);
2. otherwise lift the block decomposition (one block per irreducible
   psi^m) with multifactor Hensel;
3. analyze each repeated block as a root cluster: Newton polygon of the
   shifted polynomial, residual polynomials over the residue field, with
   (a) separable residual factors emitted as (e, deg) pairs,
   (b) repeated residual factors on integer slopes handled by recentering
       (with an exclusion floor so already-emitted sides are not double
       counted),
   (c) repeated residual factors of degree >= 2 handled by recursing over a
       larger unramified W', mapping invariants back down by multiplying
       residue degrees (unramified base changes split factors into
       conjugate families with identical invariants).

Anything wild (p divides a candidate ramification index) or outside the
certified scope (a *fractional* slope whose residual is inseparable) raises
WildOrIrregular: the oracle refuses rather than guesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DomainError,
    NotSeparable,
    NonUniform,
    PrecisionExhausted,
    WildOrIrregular,
)
from .exact import Rat, UniPoly, discriminant, is_prime, rational_valuation
from .modp import (
    ExtField,
    PrimeField,
    factor_over,
    find_irreducible,
    fp_divmod,
    fp_mul,
    fp_scale,
    fp_sub,
    fp_trim,
    roots_over,
)

__all__ = [
    "LocalSplittingType",
    "GaloisLocalInvariants",
    "PadicPrecisionCtx",
    "local_splitting_type",
    "galois_local_invariants",
    "quadratic_local_class",
]


# ---------------------------------------------------------------------------
# precision bookkeeping


@dataclass(frozen=True)
class PadicPrecisionCtx:
    """Working precision for one oracle input.

    Invariant: no Hensel split or cluster emission is trusted unless
    precision >= 2*v_p(disc of the monic integral model) + 1.
    """

    p: int
    precision: int
    disc_valuation: int

    def __post_init__(self):
        if self.precision < 2 * self.disc_valuation + 1:
            raise DomainError(
                "precision below the certification threshold "
                f"2*{self.disc_valuation}+1"
            )

    @classmethod
    def for_input(cls, f: UniPoly, p: int) -> "PadicPrecisionCtx":
        g = _integral_model(f.monic(), p)
        d = discriminant(g)
        if d == 0:
            raise NotSeparable("input polynomial is not separable")
        v = rational_valuation(d, p)
        return cls(p=p, precision=max(50, 2 * v + 10), disc_valuation=v)


def _integral_model(f: UniPoly, p: int) -> UniPoly:
    """Monic integral-at-p model: substitute Y = Z/p^m and clear, choosing
    the least m >= 0; the local algebra (hence every (e, f)) is unchanged."""
    n = f.degree
    m = 0
    for i, c in enumerate(f.coeffs[:-1]):
        if c == 0:
            continue
        v = rational_valuation(c, p)
        if v < 0:
            m = max(m, math.ceil(Fraction(-v, n - i)))
    if m == 0:
        return f
    return UniPoly(
        [c * Fraction(p) ** (m * (n - i)) for i, c in enumerate(f.coeffs)]
    )


# ---------------------------------------------------------------------------
# truncated unramified extensions W = Z_p[x]/(Phi) mod p^N


class Zq:
    """W = Z_p[x]/(Phi) truncated at p^N, Phi a monic lift of an irreducible
    chi over F_p.  Elements are int tuples of length d with entries mod p^N.
    d = 1 gives plain Z_p mod p^N."""

    __slots__ = ("p", "N", "pN", "d", "Phi", "res")

    def __init__(self, p: int, N: int, chi: Sequence[int]):
        self.p = p
        self.N = N
        self.pN = p**N
        self.Phi = [c % self.pN for c in chi]
        assert self.Phi[-1] == 1
        self.d = len(chi) - 1
        self.res = PrimeField(p) if self.d == 1 else ExtField(p, list(chi))

    # -- elements ----------------------------------------------------------
    @property
    def zero(self):
        return (0,) * self.d

    @property
    def one(self):
        return tuple([1] + [0] * (self.d - 1))

    def from_int(self, n) -> tuple:
        return tuple([n % self.pN] + [0] * (self.d - 1))

    def from_rat(self, c: Rat) -> tuple:
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise DomainError("element is not p-integral")
        return self.from_int(c.numerator * pow(c.denominator, -1, self.pN))

    def add(self, a, b):
        pN = self.pN
        return tuple((x + y) % pN for x, y in zip(a, b))

    def sub(self, a, b):
        pN = self.pN
        return tuple((x - y) % pN for x, y in zip(a, b))

    def neg(self, a):
        pN = self.pN
        return tuple(-x % pN for x in a)

    def mul(self, a, b):
        d, pN = self.d, self.pN
        if d == 1:
            return (a[0] * b[0] % pN,)
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % pN
        Phi = self.Phi
        for k in range(2 * d - 2, d - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                for j in range(d):
                    out[k - d + j] = (out[k - d + j] - c * Phi[j]) % pN
        return tuple(out[:d])

    def is_zero(self, a):
        return not any(a)

    def val(self, a) -> Optional[int]:
        """min coefficient valuation; None when a = 0 mod p^N (>= N).
        This equals the valuation of the element because (1, x, ..,
        x^{d-1}) is a W-basis with unit discriminant."""
        best = None
        for c in a:
            if c:
                v = 0
                while c % self.p == 0:
                    c //= self.p
                    v += 1
                if best is None or v < best:
                    best = v
                if best == 0:
                    return 0
        return best

    def residue(self, a):
        if self.d == 1:
            return a[0] % self.p
        return tuple(c % self.p for c in a)

    def lift_res(self, r):
        if self.d == 1:
            return (r % self.pN,)
        return tuple(c % self.pN for c in r)

    def shift_down(self, a, k: int):
        """a / p^k, requiring exact divisibility of every coefficient."""
        pk = self.p**k
        assert all(c % pk == 0 for c in a), "inexact division by p^k"
        return tuple(c // pk for c in a)

    def inv(self, a):
        """Inverse of a unit (valuation 0), by residue inversion + Newton."""
        r = self.residue(a)
        F = self.res
        if F.is_zero(r):
            raise ZeroDivisionError("inverse of a non-unit")
        x = self.lift_res(F.inv(r)) if self.d > 1 else (pow(a[0], -1, self.pN),)
        if self.d == 1:
            return x
        # Newton: x <- x(2 - a x), doubling correct digits
        two = self.from_int(2)
        k = 1
        while k < self.N:
            x = self.mul(x, self.sub(two, self.mul(a, x)))
            k *= 2
        return x

    def pow_el(self, a, e: int):
        out = self.one
        b = a
        while e:
            if e & 1:
                out = self.mul(out, b)
            b = self.mul(b, b)
            e >>= 1
        return out

    def __repr__(self):
        return f"Zq(p={self.p}, d={self.d}, N={self.N})"


# -- polynomials over W: lists of W-elements --------------------------------


def wp_trim(W, f):
    while f and W.is_zero(f[-1]):
        f.pop()
    return f


def wp_add(W, a, b):
    out = list(a) + [W.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = W.add(out[i], c)
    return wp_trim(W, out)


def wp_sub(W, a, b):
    out = list(a) + [W.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = W.sub(out[i], c)
    return wp_trim(W, out)


def wp_mul(W, a, b):
    if not a or not b:
        return []
    out = [W.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not W.is_zero(x):
            for j, y in enumerate(b):
                out[i + j] = W.add(out[i + j], W.mul(x, y))
    return wp_trim(W, out)


def wp_divmod_monic(W, a, b):
    """divmod by a monic b."""
    assert b and W.is_zero(W.sub(b[-1], W.one)), "divisor must be monic"
    a = list(a)
    db = len(b) - 1
    q = [W.zero] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        f = a[-1]
        k = len(a) - 1 - db
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] = W.sub(a[k + i], W.mul(f, c))
        a.pop()
        wp_trim(W, a)
    return wp_trim(W, q), wp_trim(W, a)


def wp_shift(W, f, c):
    """f(c + Z) by Horner."""
    out = []
    for coeff in reversed(f):
        out = wp_add(W, wp_mul(W, out, [c, W.one]), [coeff])
    # keep full length: the caller reads positional coefficients
    out = out + [W.zero] * (len(f) - len(out))
    return out


def wp_reduce_res(W, f):
    """f mod p as a polynomial over the residue field."""
    F = W.res
    out = [W.residue(c) for c in f]
    return fp_trim(F, out)


# ---------------------------------------------------------------------------
# Hensel lifting over W


def _fp_extgcd(F, a, b):
    """(s, t) with s*a + t*b = 1 over the finite field F; a, b coprime."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = fp_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(F, s0, fp_mul(F, q, s1))
        t0, t1 = t1, fp_sub(F, t0, fp_mul(F, q, t1))
    assert len(r0) == 1, "arguments were not coprime"
    il = F.inv(r0[0])
    return fp_scale(F, s0, il), fp_scale(F, t0, il)


def _refit_monic(W, poly, deg):
    """Truncate to the nominal degree and re-pin the monic lead.

    Valid mid-iteration because everything above the nominal degree (and
    the deviation of the lead from 1) is 0 mod p^(2*prec): dropping it
    changes the factor by 0 mod p^(2*prec), which is all the next round's
    invariants use.  Without this the updates accumulate coefficients that
    vanish only at the final precision and the degrees balloon."""
    out = [poly[i] if i < len(poly) else W.zero for i in range(deg)]
    out.append(W.one)
    return out


def _hensel_pair(W, f, g0, h0):
    """Lift f = g0*h0 (a coprime monic factorization mod p) to monic g, h
    over W with f = g*h mod p^N.  Quadratic iteration."""
    F = W.res
    s0, t0 = _fp_extgcd(F, g0, h0)
    dg, dh = len(g0) - 1, len(h0) - 1
    g = [W.lift_res(c) for c in g0]
    h = [W.lift_res(c) for c in h0]
    s = [W.lift_res(c) for c in s0]
    t = [W.lift_res(c) for c in t0]
    prec = 1
    while prec < W.N:
        # e = f - g*h
        e = wp_sub(W, f, wp_mul(W, g, h))
        # q, r = divmod(s*e, h): h monic
        q, r = wp_divmod_monic(W, wp_mul(W, s, e), h)
        g = wp_add(W, g, wp_add(W, wp_mul(W, t, e), wp_mul(W, q, g)))
        h = wp_add(W, h, r)
        g = _refit_monic(W, g, dg)
        h = _refit_monic(W, h, dh)
        # Bezout update, kept at the canonical degrees (s below h, t below g)
        b = wp_sub(W, wp_add(W, wp_mul(W, s, g), wp_mul(W, t, h)), [W.one])
        c, d = wp_divmod_monic(W, wp_mul(W, s, b), h)
        s = wp_sub(W, s, d)[:dh]
        t = wp_sub(W, wp_sub(W, t, wp_mul(W, t, b)), wp_mul(W, c, g))[:dg]
        prec *= 2
    return g, h


def hensel_split(W, f, blocks):
    """Split monic f over W along pairwise-coprime monic blocks of its
    reduction (product of blocks = f mod p): list of monic lifts whose
    product is f mod p^N (checked)."""
    if len(blocks) == 1:
        return [list(f)]
    F = W.res
    rest = blocks[1]
    for b in blocks[2:]:
        rest = fp_mul(F, rest, b)
    g, h = _hensel_pair(W, f, blocks[0], rest)
    if wp_trim(W, wp_sub(W, f, wp_mul(W, g, h))):
        raise PrecisionExhausted("Hensel product check failed")
    return [g] + hensel_split(W, h, blocks[1:])


# ---------------------------------------------------------------------------
# Newton polygons over W


def _lower_hull(points):
    """Lower convex hull of (i, v) points, i strictly increasing."""
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it sits on or above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _sides(points):
    hull = _lower_hull(points)
    out = []
    for (xa, ya), (xb, yb) in zip(hull, hull[1:]):
        lam = Fraction(ya - yb, xb - xa)  # common valuation of the side's roots
        out.append((xa, ya, xb, yb, lam))
    return out


# ---------------------------------------------------------------------------
# the cluster recursion


class _Analyzer:
    """One oracle run at fixed precision; raises PrecisionExhausted when a
    needed valuation cannot be read, WildOrIrregular outside scope."""

    MAX_DEPTH = 64

    def __init__(self, p: int, N: int):
        self.p = p
        self.N = N
        self.Fp = PrimeField(p)
        self._wcache: dict[int, Zq] = {}

    def base_ring(self) -> Zq:
        return self.ring(1)

    def ring(self, d: int) -> Zq:
        if d not in self._wcache:
            chi = find_irreducible(self.Fp, d) if d > 1 else [0, 1]
            self._wcache[d] = Zq(self.p, self.N, chi)
        return self._wcache[d]

    # -- unramified base change --------------------------------------------
    def embed(self, W: Zq, Wbig: Zq):
        """Return a map W -> Wbig (send the generator to a Hensel-lifted
        root of W.Phi in Wbig)."""
        if W.d == 1:
            def emb1(a):
                return Wbig.from_int(a[0])

            return emb1
        # root of W's residue modulus chi inside Wbig's residue field
        F = Wbig.res
        chi_up = [F.from_int(c) for c in W.Phi]
        rts = roots_over(F, chi_up)
        assert rts, "residue modulus must split in the larger residue field"
        om = Wbig.lift_res(rts[0])
        # Newton-lift to a root of Phi over Wbig
        Phi_up = [Wbig.from_int(c) for c in W.Phi]
        dPhi = [Wbig.mul(Wbig.from_int(i), Phi_up[i]) for i in range(1, len(Phi_up))]
        k = 1
        while k < Wbig.N:
            fv = _wp_eval(Wbig, Phi_up, om)
            dv = _wp_eval(Wbig, dPhi, om)
            om = Wbig.sub(om, Wbig.mul(fv, Wbig.inv(dv)))
            k *= 2
        pows = [Wbig.one]
        for _ in range(W.d - 1):
            pows.append(Wbig.mul(pows[-1], om))

        def emb(a):
            out = Wbig.zero
            for c, pw in zip(a, pows):
                out = Wbig.add(out, Wbig.mul(Wbig.from_int(c), pw))
            return out

        return emb

    def res_embed(self, W: Zq, Wbig: Zq):
        """Map between residue fields induced by embed (same root)."""
        emb = self.embed(W, Wbig)

        def remb(r):
            return Wbig.residue(emb(W.lift_res(r)))

        return remb

    # -- the recursion -------------------------------------------------------
    def splitting(self, W: Zq, f) -> list[tuple[int, int, int]]:
        """(e, f_rel, count) multiset for monic f over W, f separable over
        Frac(W)."""
        F = W.res
        fbar = wp_reduce_res(W, f)
        if len(fbar) - 1 != len(f) - 1:
            raise PrecisionExhausted("leading coefficient vanished mod p")
        fac = factor_over(F, fbar)
        out: list[tuple[int, int, int]] = []
        simple = [g for g, m in fac if m == 1]
        repeated = [(g, m) for g, m in fac if m > 1]
        for g in simple:
            out.append((1, len(g) - 1, 1))
        if repeated:
            blocks = list(simple)
            for g, m in repeated:
                blk = g
                for _ in range(m - 1):
                    blk = fp_mul(F, blk, g)
                blocks.append(blk)
            lifted = hensel_split(W, f, blocks)
            for (g, m), Fj in zip(repeated, lifted[len(simple):]):
                dpsi = len(g) - 1
                if dpsi == 1:
                    c = W.lift_res(F.neg(g[0]))
                    out.extend(self.cluster(W, Fj, c, Fraction(0), 0))
                else:
                    # unramified base change makes this cluster's centers
                    # rational: analyze everything upstairs, then fold the
                    # conjugate families back (counts divide by dpsi,
                    # residue degrees multiply by dpsi)
                    Wbig = self.ring(W.d * dpsi)
                    emb = self.embed(W, Wbig)
                    fup = [emb(cf) for cf in Fj]
                    merged: dict[tuple[int, int], int] = {}
                    for (e, fr, cnt) in self.splitting(Wbig, fup):
                        merged[(e, fr)] = merged.get((e, fr), 0) + cnt
                    for (e, fr), cnt in sorted(merged.items()):
                        if cnt % dpsi != 0:
                            raise NonUniform(
                                "conjugate cluster families of unequal "
                                "shape; input cannot be separable over W"
                            )
                        out.append((e, fr * dpsi, cnt // dpsi))
        # degree conservation
        assert sum(e * fr * c for e, fr, c in out) == len(f) - 1
        return out

    def cluster(
        self, W: Zq, f, center, floor: Fraction, depth: int
    ) -> list[tuple[int, int, int]]:
        """Invariants of the factors of f (monic over W) whose roots y have
        v(y - center) > floor.  floor = 0 analyzes a full residual cluster."""
        if depth > self.MAX_DEPTH:
            raise PrecisionExhausted("cluster refinement did not terminate")
        G = wp_shift(W, f, center)
        vals = [W.val(c) for c in G]
        n = len(G) - 1
        out: list[tuple[int, int, int]] = []
        expected = 0
        start = 0
        if vals[0] is None:
            # the center is within the Hensel zone of a single root: that
            # root lies in W (Krasner/Newton), an (e, f) = (1, 1) factor.
            if vals[1] is None:
                raise PrecisionExhausted("two roots indistinguishable at p^N")
            out.append((1, 1, 1))
            expected += 1
            start = 1
        pts = [(i, v) for i, v in enumerate(vals) if v is not None and i >= start]
        for (xa, ya, xb, yb, lam) in _sides(pts):
            if lam <= floor:
                continue
            if lam <= 0:
                continue
            expected += xb - xa
            out.extend(self._side(W, G, xa, ya, xb, yb, lam, f, center, floor, depth))
        # every root strictly inside the floor-ball is accounted for
        emitted = sum(e * fr * c for e, fr, c in out)
        if emitted != expected:
            raise PrecisionExhausted(
                f"side bookkeeping mismatch ({emitted} != {expected})"
            )
        return out

    def _side(
        self, W, G, xa, ya, xb, yb, lam: Fraction, f, center, floor, depth
    ) -> list[tuple[int, int, int]]:
        e = lam.denominator
        h = lam.numerator
        if e % self.p == 0:
            raise WildOrIrregular(
                f"wild ramification candidate: p={self.p} divides e={e}"
            )
        F = W.res
        r = (xb - xa) // e
        res = []
        for j in range(r + 1):
            idx = xa + j * e
            vline = ya - j * h
            c = G[idx]
            v = W.val(c)
            if v is None or v > vline:
                res.append(F.zero)
            else:
                if v < vline:
                    raise PrecisionExhausted("coefficient below its side")
                res.append(W.residue(W.shift_down(c, vline)))
        res = fp_trim(F, res)
        assert len(res) - 1 == r and not F.is_zero(res[0])
        out: list[tuple[int, int, int]] = []
        for rho, mu in factor_over(F, res):
            drho = len(rho) - 1
            if mu == 1:
                out.append((e, drho, 1))
                continue
            if e > 1:
                raise WildOrIrregular(
                    "fractional slope with inseparable residual: outside the "
                    "certified scope of this oracle"
                )
            # integer slope, repeated residual: recenter
            if drho == 1:
                root = F.neg(rho[0])
                shift = W.mul(W.from_int(self.p**h), W.lift_res(root))
                new_center = W.add(center, shift)
                out.extend(self.cluster(W, f, new_center, lam, depth + 1))
            else:
                Wbig = self.ring(W.d * drho)
                emb = self.embed(W, Wbig)
                remb = self.res_embed(W, Wbig)
                rho_up = [remb(c) for c in rho]
                rts = roots_over(Wbig.res, rho_up)
                assert rts, "residual factor must have a root upstairs"
                shift = Wbig.mul(
                    Wbig.from_int(self.p**h), Wbig.lift_res(rts[0])
                )
                new_center = Wbig.add(emb(center), shift)
                fup = [emb(c) for c in f]
                sub = self.cluster(Wbig, fup, new_center, lam, depth + 1)
                # one conjugate family analyzed; scale residue degrees back
                for (e2, fr, cnt) in sub:
                    out.append((e2, fr * drho, cnt))
        return out


def _wp_eval(W, f, x):
    out = W.zero
    for c in reversed(f):
        out = W.add(W.mul(out, x), c)
    return out


# ---------------------------------------------------------------------------
# public results


@dataclass(frozen=True)
class LocalSplittingType:
    """Multiset of local invariants of f over Q_p: factors is a sorted
    tuple of (ramification index e, residue degree f, count), and
    sum(e*f*count) = deg f."""

    p: int
    factors: tuple[tuple[int, int, int], ...]
    certified: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "factors": [
                {"e": e, "f": f, "count": c} for (e, f, c) in self.factors
            ],
            "certified": self.certified,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LocalSplittingType":
        return cls(
            p=data["p"],
            factors=tuple(
                (int(d["e"]), int(d["f"]), int(d["count"]))
                for d in data["factors"]
            ),
            certified=bool(data["certified"]),
        )

    @property
    def degree(self) -> int:
        return sum(e * f * c for e, f, c in self.factors)

    @property
    def is_unramified(self) -> bool:
        return all(e == 1 for e, _, _ in self.factors)

    def residue_degrees(self) -> list[int]:
        """f repeated count times for each factor class (e merged away)."""
        out = []
        for e, f, c in self.factors:
            out.extend([f] * c)
        return sorted(out)


@dataclass(frozen=True)
class GaloisLocalInvariants:
    """Uniform (e, f, g) of a Galois input at p."""

    p: int
    e: int
    f: int
    g: int
    certified: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "certified": self.certified,
        }


def _merge(emissions) -> tuple[tuple[int, int, int], ...]:
    merged: dict[tuple[int, int], int] = {}
    for e, f, c in emissions:
        merged[(e, f)] = merged.get((e, f), 0) + c
    return tuple((e, f, c) for (e, f), c in sorted(merged.items()))


def local_splitting_type(
    f: UniPoly, p: int, ctx: Optional[PadicPrecisionCtx] = None
) -> LocalSplittingType:
    """Certified (e, f) multiset of f over Q_p for an odd prime p.

    f must be separable of degree >= 1 (any nonzero leading coefficient and
    any rational coefficients: the input is normalized internally).  Raises
    WildOrIrregular when the configuration is wild or outside the certified
    scope, NotSeparable for inseparable input, DomainError for p = 2 or
    composite p.
    """
    if p == 2:
        raise DomainError("p = 2 is outside the tame oracle's domain")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if f.is_zero or f.degree < 1:
        raise DomainError("need a polynomial of degree >= 1")
    if ctx is not None and ctx.p != p:
        raise DomainError("precision context was built for a different p")
    f = f.monic()
    g = _integral_model(f, p)
    if ctx is None:
        ctx = PadicPrecisionCtx.for_input(f, p)
    last_exc: Exception | None = None
    for N in (ctx.precision, 2 * ctx.precision):
        analyzer = _Analyzer(p, N)
        W = analyzer.base_ring()
        fw = [W.from_rat(c) for c in g.coeffs]
        try:
            emissions = analyzer.splitting(W, fw)
            return LocalSplittingType(
                p=p, factors=_merge(emissions), certified=True
            )
        except PrecisionExhausted as exc:
            last_exc = exc
            continue
    raise WildOrIrregular(
        f"could not certify the splitting at p={p}: {last_exc}"
    )


def galois_local_invariants(
    f: UniPoly, p: int, ctx: Optional[PadicPrecisionCtx] = None
) -> GaloisLocalInvariants:
    """(e, f, g) at p for an input whose splitting field data is uniform
    across factors (as for a specialization of a Galois cover); raises
    NonUniform when the oracle output is not of that shape."""
    st = local_splitting_type(f, p, ctx)
    if len(st.factors) != 1:
        raise NonUniform(
            f"local invariants at p={p} are not uniform: {st.factors}"
        )
    e, fr, g = st.factors[0]
    return GaloisLocalInvariants(p=p, e=e, f=fr, g=g, certified=st.certified)


def quadratic_local_class(c: Rat | int, p: int) -> str:
    """Class of a nonzero rational in Q_p^* / (Q_p^*)^2 for odd p:
    one of "1", "u", "p", "up" (u = a non-residue unit)."""
    if p == 2:
        raise DomainError("p = 2 not supported")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    c = Fraction(c)
    if c == 0:
        raise DomainError("0 has no square class")
    v = rational_valuation(c, p)
    unit = c / Fraction(p) ** v
    u = unit.numerator * pow(unit.denominator, -1, p) % p
    qr = pow(u, (p - 1) // 2, p) == 1
    if v % 2 == 0:
        return "1" if qr else "u"
    return "p" if qr else "up"
