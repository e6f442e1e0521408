"""Exact number-field arithmetic and certified factorization over Q and
over number fields.

Everything here is exact rational arithmetic; no floating point, no
randomness.  The pieces:

  * NumberField -- Q[x]/(M) for a monic irreducible M, elements stored as
    coefficient tuples of Fraction, inverses by extended Euclid.
  * factor_rational -- complete factorization in Q[x]: Yun squarefree
    split, then Zassenhaus per squarefree part (factor mod p, quadratic
    Hensel lifting past the Landau-Mignotte bound, subset recombination).
    Every returned factor is irreducible by construction: recombination
    tries subsets in increasing size, so the first subset whose product
    divides over Z cannot split further.
  * factor_nf -- factorization in K[y] by Trager's norm method; the norm
    polynomial is computed by evaluation/interpolation, which is safe
    because M is monic (Res_x(M, B) = prod B(alpha_k) commutes with
    specializing the second variable).
  * adjoin_root -- build K(beta) for a root beta of an irreducible
    rho in K[y], flattened to an absolute field Q(gamma) with
    gamma = beta + c*theta; irreducibility of the new modulus is certified
    by squarefreeness of the norm (Trager's lemma).
  * relative_min_poly -- minimal polynomial of an element over an embedded
    subfield Q(tau), found by exact linear algebra over Q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DomainError
from .exact import Rat, UniPoly, is_prime
from .modp import PrimeField, factor_over, fp_deriv, fp_divmod, fp_gcd, fp_monic, fp_mul, fp_scale, fp_sub, fp_trim


# ---------------------------------------------------------------------------
# number fields


class NumberField:
    """Q[x]/(M(x)) for monic irreducible M; elements are tuples of Fraction
    of length deg(M) (coefficients of the canonical representative, low to
    high).  Irreducibility of M is the caller's responsibility -- every
    modulus built inside this module is certified at construction time
    (factor_rational output, or a squarefree norm via Trager's lemma)."""

    __slots__ = ("modulus", "degree")

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise DomainError("number field modulus must have degree >= 1")
        if modulus.lc != 1:
            raise DomainError("number field modulus must be monic")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "degree", modulus.degree)

    def __setattr__(self, *a):
        raise AttributeError("NumberField is immutable")

    def __repr__(self):
        return f"NumberField({self.modulus!r})"

    # -- element construction

    def zero(self) -> tuple:
        return (Fraction(0),) * self.degree

    def one(self) -> tuple:
        return self.from_rat(Fraction(1))

    def from_rat(self, c) -> tuple:
        out = [Fraction(0)] * self.degree
        out[0] = Fraction(c)
        return tuple(out)

    def gen(self) -> tuple:
        """The class of x, i.e. the distinguished root of the modulus."""
        if self.degree == 1:
            # x = -M[0] is rational.
            return (-self.modulus.coeff(0),)
        out = [Fraction(0)] * self.degree
        out[1] = Fraction(1)
        return tuple(out)

    def from_unipoly(self, u: UniPoly) -> tuple:
        r = u % self.modulus
        return tuple(r.coeff(i) for i in range(self.degree))

    def to_unipoly(self, a: Sequence[Rat]) -> UniPoly:
        return UniPoly(a)

    # -- arithmetic

    def add(self, a, b) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a) -> tuple:
        return tuple(-x for x in a)

    def scale(self, a, c) -> tuple:
        c = Fraction(c)
        return tuple(x * c for x in a)

    def mul(self, a, b) -> tuple:
        n = self.degree
        raw = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        # reduce mod M: x^n = -(M - x^n)
        m = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = raw[k]
            if c:
                raw[k] = Fraction(0)
                for i in range(n):
                    mi = m.coeff(i)
                    if mi:
                        raw[k - n + i] -= c * mi
        return tuple(raw[:n])

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def eq(self, a, b) -> bool:
        return all(x == y for x, y in zip(a, b))

    def inv(self, a) -> tuple:
        """Inverse by extended Euclid on the representative and M."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in a number field")
        r0, r1 = self.modulus, UniPoly(a)
        s0, s1 = UniPoly(), UniPoly.const(1)
        while r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        assert not r1.is_zero, "modulus must be irreducible"
        c = r1.coeff(0)
        return self.from_unipoly(s1.scale(1 / c))

    def div(self, a, b) -> tuple:
        return self.mul(a, self.inv(b))

    def pow_el(self, a, e: int) -> tuple:
        if e < 0:
            return self.pow_el(self.inv(a), -e)
        out = self.one()
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def as_rat(self, a):
        """The element as a Fraction if it lies in Q, else None."""
        if all(x == 0 for x in a[1:]):
            return a[0]
        return None


# ---------------------------------------------------------------------------
# polynomials over a number field: plain lists of elements, low to high


def nf_trim(K: NumberField, f: list) -> list:
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def nf_add(K, a, b):
    n = max(len(a), len(b))
    z = K.zero()
    out = [
        K.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
        for i in range(n)
    ]
    return nf_trim(K, out)


def nf_sub(K, a, b):
    n = max(len(a), len(b))
    z = K.zero()
    out = [
        K.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
        for i in range(n)
    ]
    return nf_trim(K, out)


def nf_mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return nf_trim(K, out)


def nf_scale(K, a, c):
    return nf_trim(K, [K.mul(x, c) for x in a])


def nf_monic(K, a):
    a = nf_trim(K, a)
    if not a:
        raise DomainError("monic of the zero polynomial")
    if K.eq(a[-1], K.one()):
        return a
    return nf_scale(K, a, K.inv(a[-1]))


def nf_divmod(K, a, b):
    b = nf_trim(K, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = nf_trim(K, a)
    binv = K.inv(b[-1])
    q = [K.zero()] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        c = K.mul(r[-1], binv)
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = K.sub(r[k + i], K.mul(c, bc))
        r.pop()
        while r and K.is_zero(r[-1]):
            r.pop()
    return nf_trim(K, q), r


def nf_gcd(K, a, b):
    a, b = nf_trim(K, a), nf_trim(K, b)
    while b:
        a, b = b, nf_divmod(K, a, b)[1]
    if not a:
        return []
    return nf_monic(K, a)


def nf_deriv(K, a):
    return nf_trim(K, [K.scale(a[i], i) for i in range(1, len(a))])


def nf_eval(K, a, x):
    out = K.zero()
    for c in reversed(a):
        out = K.add(K.mul(out, x), c)
    return out


def nf_from_unipoly(K, u: UniPoly) -> list:
    return nf_trim(K, [K.from_rat(u.coeff(i)) for i in range(u.degree + 1)])


def nf_taylor_shift(K, f, c):
    """f(y + c) by Horner."""
    lin = [c, K.one()]
    out: list = []
    for coeff in reversed(nf_trim(K, f)):
        out = nf_add(K, nf_mul(K, out, lin), [coeff])
    return out


def nf_poly_key(K, f):
    """Deterministic sort key: (degree, flattened rational coefficients)."""
    flat = []
    for el in f:
        for c in el:
            flat.append((c.numerator, c.denominator))
    return (len(f), tuple(flat))


# ---------------------------------------------------------------------------
# factorization over Q: Yun + Zassenhaus


def _yun_squarefree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's squarefree decomposition of a monic f over Q:
    f = prod a_i^i with the a_i monic squarefree and pairwise coprime."""
    out = []
    g = f.gcd(f.derivative())
    b = f.divexact(g).monic()
    c = f.derivative().divexact(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            out.append((a, i))
        b = b.divexact(a).monic()
        c = d.divexact(a)
        d = c - b.derivative()
        i += 1
    return out


def _to_int_monic(g: UniPoly) -> tuple[int, list[int]]:
    """Rescale monic g over Q to a monic integer polynomial: returns
    (D, coeffs of D^n g(x/D)); roots scale by D."""
    den = 1
    for c in g.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    n = g.degree
    out = [int(g.coeff(n - i) * den**i) for i in range(n, -1, -1)]
    assert Fraction(g.coeff(n - 1) * den) == out[n - 1]
    return den, out


def _zp_trim(a: list[int], m: int) -> list[int]:
    a = [c % m for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _zp_trim(out, m)


def _zp_sub(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [
        ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
        for i in range(n)
    ]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zp_add(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
        for i in range(n)
    ]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zp_divmod_monic(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    assert b and b[-1] == 1, "divisor must be monic"
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] % m
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = (r[k + i] - c * bc) % m
        r.pop()
        while r and r[-1] % m == 0:
            r.pop()
    return _zp_trim(q, m), _zp_trim(r, m)


def _fp_extgcd_lists(a: list[int], b: list[int], p: int):
    """(g, s, t) over F_p with s*a + t*b = g, g monic."""
    F = PrimeField(p)
    r0, r1 = fp_trim(F, list(a)), fp_trim(F, list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = fp_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(F, s0, fp_mul(F, q, s1))
        t0, t1 = t1, fp_sub(F, t0, fp_mul(F, q, t1))
    c = r0[-1]
    cinv = pow(c, -1, p)
    return (
        fp_scale(F, r0, cinv),
        fp_scale(F, s0, cinv),
        fp_scale(F, t0, cinv),
    )


def _hensel_pair_int(f, A, B, s, t, p, target):
    """Lift f = A*B (monic, valid mod p, Bezout s*A + t*B = 1 mod p) to a
    factorization mod p^k >= target by quadratic iteration."""
    q = p
    while q < target:
        q2 = q * q
        e = _zp_sub(_zp_trim(f, q2), _zp_mul(A, B, q2), q2)
        qq, r = _zp_divmod_monic(_zp_mul(s, e, q2), B, q2)
        B2 = _zp_add(B, r, q2)
        A2 = _zp_add(A, _zp_add(_zp_mul(t, e, q2), _zp_mul(qq, A, q2), q2), q2)
        bz = _zp_sub(
            _zp_add(_zp_mul(s, A2, q2), _zp_mul(t, B2, q2), q2), [1], q2
        )
        cc, d = _zp_divmod_monic(_zp_mul(s, bz, q2), B2, q2)
        s2 = _zp_sub(s, d, q2)
        t2 = _zp_sub(
            _zp_sub(t, _zp_mul(t, bz, q2), q2), _zp_mul(cc, A2, q2), q2
        )
        A, B, s, t, q = A2, B2, s2, t2, q2
    assert A and A[-1] == 1 and B and B[-1] == 1
    return A, B, q


def _hensel_tree(f: list[int], facs: list[list[int]], p: int, pk: int) -> list[list[int]]:
    """Lift the monic mod-p factorization facs of monic f to mod p^k by
    recursive pair splitting."""
    if len(facs) == 1:
        out = _zp_trim(f, pk)
        assert len(out) == len(facs[0]), "degree lost in Hensel tree"
        return [out]
    half = len(facs) // 2
    A = [1]
    for g in facs[:half]:
        A = _zp_mul(A, g, p)
    B = [1]
    for g in facs[half:]:
        B = _zp_mul(B, g, p)
    g, s, t = _fp_extgcd_lists(A, B, p)
    assert g == [1], "mod-p factors must be pairwise coprime"
    A, B, q = _hensel_pair_int(f, A, B, s, t, p, pk)
    A, B = _zp_trim(A, pk), _zp_trim(B, pk)
    return _hensel_tree(A, facs[:half], p, pk) + _hensel_tree(B, facs[half:], p, pk)


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _int_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    assert b and b[-1] == 1
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] -= c * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return q, r


def _zassenhaus_monic_int(g: list[int]) -> list[list[int]]:
    """Irreducible monic integer factors of a monic squarefree integer
    polynomial."""
    n = len(g) - 1
    if n <= 1:
        return [list(g)]
    # pick a prime keeping g squarefree, preferring few modular factors
    best: tuple[int, list[list[int]]] | None = None
    tried = 0
    p = 2
    while tried < 4:
        p += 1
        while not is_prime(p):
            p += 1
        F = PrimeField(p)
        gp = fp_trim(F, [c % p for c in g])
        if len(gp) != n + 1:
            continue  # cannot happen for monic g, kept for clarity
        if len(fp_gcd(F, gp, fp_deriv(F, gp))) != 1:
            continue
        facs = [f for f, _ in factor_over(F, gp)]
        tried += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(facs) == 1:
            break
    assert best is not None
    p, facs = best
    if len(facs) == 1:
        return [list(g)]
    # Landau-Mignotte: any monic factor has |coeff| <= 2^n * ||g||_2
    norm2 = math.isqrt(sum(c * c for c in g)) + 1
    target = 2 * ((1 << n) * norm2) + 1
    pk = p
    while pk < target:
        pk *= p
    lifted = _hensel_tree(_zp_trim(g, pk), facs, p, pk)
    # subset recombination, smallest subsets first
    remaining = list(range(len(lifted)))
    gcur = list(g)
    out: list[list[int]] = []
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, size):
            h = [1]
            for i in combo:
                h = _zp_mul(h, lifted[i], pk)
            cand = [_sym(c, pk) for c in h]
            if gcur[0] != 0 and cand[0] != 0 and gcur[0] % cand[0] != 0:
                continue
            q, r = _int_divmod_monic(gcur, cand)
            if not r:
                out.append(cand)
                gcur = q
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(gcur) > 1:
        out.append(gcur)
    prod = [1]
    for h in out:
        prod = [int(c) for c in _int_mul(prod, h)]
    assert prod == list(g), "recombination lost a factor"
    return out


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def factor_rational(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Complete factorization of f over Q: a list of (monic irreducible,
    multiplicity), sorted deterministically.  The leading coefficient is
    dropped; the product of factor^mult is the monic part of f."""
    if f.is_zero:
        raise DomainError("factorization of the zero polynomial")
    if f.degree == 0:
        return []
    fm = f.monic()
    out: list[tuple[UniPoly, int]] = []
    for sqf, mult in _yun_squarefree(fm):
        if sqf.degree == 1:
            out.append((sqf, mult))
            continue
        den, gz = _to_int_monic(sqf)
        for h in _zassenhaus_monic_int(gz):
            # undo the root scaling x -> x/den
            d = len(h) - 1
            coeffs = [Fraction(h[i], den ** (d - i)) for i in range(d + 1)]
            out.append((UniPoly(coeffs), mult))
    out.sort(key=lambda t: (
        t[0].degree,
        tuple((c.numerator, c.denominator) for c in t[0].coeffs),
    ))
    return out


def is_irreducible_rational(f: UniPoly) -> bool:
    if f.degree < 1:
        return False
    fac = factor_rational(f)
    return len(fac) == 1 and fac[0][1] == 1


# ---------------------------------------------------------------------------
# norms by evaluation/interpolation


def _interpolate(points: list[tuple[Fraction, Fraction]]) -> UniPoly:
    """Lagrange interpolation through distinct rational points."""
    out = UniPoly()
    for j, (xj, yj) in enumerate(points):
        if yj == 0:
            continue
        num = UniPoly.const(1)
        den = Fraction(1)
        for i, (xi, _) in enumerate(points):
            if i == j:
                continue
            num = num * UniPoly([-xi, Fraction(1)])
            den *= xj - xi
        out = out + num.scale(yj / den)
    return out


def _eval_points(count: int):
    """0, 1, -1, 2, -2, ... as Fractions."""
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


def _norm_poly(K: NumberField, h: list, s: int) -> UniPoly:
    """N(z) = prod_k H(z, alpha_k) over the roots alpha_k of the modulus,
    where H(z, x) = sum_i h_i(x) (z - s*x)^i -- the norm from K to Q of
    h(z - s*theta).  Computed by evaluating at deg(M)*deg(h)+1 rational
    points and interpolating; valid because the modulus is monic, so
    Res_x(M, B) = prod_k B(alpha_k) commutes with specializing z."""
    h = nf_trim(K, h)
    d = len(h) - 1
    assert d >= 1 and K.eq(h[-1], K.one()), "norm needs a monic h"
    D = K.degree * d
    from .exact import resultant

    pts: list[tuple[Fraction, Fraction]] = []
    gen = K.gen()
    for z in _eval_points(D + 1):
        arg = K.sub(K.from_rat(z), K.scale(gen, s))
        val = nf_eval(K, h, arg)
        if K.is_zero(val):
            pts.append((z, Fraction(0)))
        else:
            B = UniPoly(val)
            pts.append((z, resultant(K.modulus, B)))
        if len(pts) == D + 1:
            break
    N = _interpolate(pts)
    assert N.degree == D and N.lc == 1, "norm degree/leading term mismatch"
    return N


# ---------------------------------------------------------------------------
# factorization over a number field (Trager)


def _trager_squarefree(K: NumberField, h: list) -> list[list]:
    """Irreducible monic factors of a squarefree monic h in K[y]."""
    d = len(h) - 1
    if d == 1:
        return [h]
    for s in itertools.count(0):
        N = _norm_poly(K, h, s)
        if N.gcd(N.derivative()).degree == 0:
            break
    factors_q = factor_rational(N)
    assert all(m == 1 for _, m in factors_q)
    if len(factors_q) == 1:
        return [h]
    out = []
    stheta = K.scale(K.gen(), s)
    for hq, _ in factors_q:
        shifted = nf_taylor_shift(K, nf_from_unipoly(K, hq), stheta)
        g = nf_gcd(K, h, shifted)
        assert len(g) >= 2, "norm factor must meet h"
        out.append(g)
    assert sum(len(g) - 1 for g in out) == d, "factor degrees must add up"
    return out


def factor_nf(K: NumberField, f: list) -> list[tuple[list, int]]:
    """Complete factorization in K[y]: [(monic irreducible, multiplicity)],
    sorted deterministically.  The leading coefficient is dropped."""
    f = nf_trim(K, f)
    if not f:
        raise DomainError("factorization of the zero polynomial")
    if len(f) == 1:
        return []
    if K.degree == 1:
        # the field is Q in disguise; use the rational machinery directly
        out = []
        for g, m in factor_rational(UniPoly([e[0] for e in f])):
            out.append((nf_from_unipoly(K, g), m))
        return out
    fm = nf_monic(K, f)
    df = nf_deriv(K, fm)
    sqf = fm if not df else nf_divmod(K, fm, nf_gcd(K, fm, df))[0]
    sqf = nf_monic(K, sqf)
    out = []
    for g in _trager_squarefree(K, sqf):
        mult = 0
        cur = fm
        while True:
            q, r = nf_divmod(K, cur, g)
            if r:
                break
            mult += 1
            cur = q
        assert mult >= 1
        out.append((g, mult))
    out.sort(key=lambda t: nf_poly_key(K, t[0]))
    assert sum((len(g) - 1) * m for g, m in out) == len(fm) - 1
    return out


def nf_roots(K: NumberField, f: list) -> list:
    """Roots of f in K (each root once), deterministically ordered."""
    return [K.neg(g[0]) for g, _ in factor_nf(K, f) if len(g) == 2]


# ---------------------------------------------------------------------------
# adjoining a root: flattened absolute extension with embedding


@dataclass(frozen=True)
class Adjunction:
    """K(beta) for rho(beta) = 0, flattened to the absolute field `field` =
    Q(gamma) with gamma = beta + shift*theta_K.  `theta` is the image of
    K's generator, `root` the image of beta; embed() maps K-elements in."""

    field: NumberField
    theta: tuple
    root: tuple
    shift: int

    def embed(self, a: Sequence[Rat]) -> tuple:
        L = self.field
        out = L.zero()
        for c in reversed(list(a)):
            out = L.add(L.mul(out, self.theta), L.from_rat(c))
        return out


def adjoin_root(K: NumberField, rho: list) -> Adjunction:
    """A field containing K and a root of rho, for rho monic irreducible
    in K[y].  Degree-1 rho stays inside K.  The new modulus is a squarefree
    norm, hence irreducible by Trager's lemma (rho irreducible over K and
    its norm squarefree imply the norm is irreducible over Q)."""
    rho = nf_trim(K, rho)
    d = len(rho) - 1
    if d < 1:
        raise DomainError("adjoin_root needs degree >= 1")
    assert K.eq(rho[-1], K.one()), "rho must be monic"
    if d == 1:
        return Adjunction(
            field=K, theta=K.gen(), root=K.neg(rho[0]), shift=0,
        )
    if K.degree == 1:
        a = K.gen()[0]
        M = UniPoly([c[0] for c in rho])
        L = NumberField(M)
        return Adjunction(
            field=L, theta=L.from_rat(a), root=L.gen(), shift=0,
        )
    for c in itertools.count(1):
        N = _norm_poly(K, rho, c)
        if N.gcd(N.derivative()).degree == 0:
            break
    L = NumberField(N)
    gamma = L.gen()
    # theta inside L: the unique common root of M(x) and
    # T(x) = sum_i rho_i(x) (gamma - c x)^i; squarefreeness of the norm
    # makes it unique, so the gcd is linear.
    lin = [gamma, L.from_rat(-c)]
    T: list = []
    for coeff in reversed(rho):
        T = nf_add(L, nf_mul(L, T, lin), nf_from_unipoly(L, UniPoly(coeff)))
    ML = nf_from_unipoly(L, K.modulus)
    g = nf_gcd(L, ML, T)
    assert len(g) == 2, "shared root of modulus and transform must be unique"
    theta = L.neg(g[0])
    root = L.sub(gamma, L.scale(theta, c))
    return Adjunction(field=L, theta=theta, root=root, shift=c)


# ---------------------------------------------------------------------------
# relative minimal polynomials by linear algebra


def _solve_linear(A: list[list[Fraction]], b: list[Fraction]):
    """One exact solution of A x = b, or None if inconsistent; free
    variables are set to zero."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        piv_of_col[c] = r
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if M[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for c, i in piv_of_col.items():
        x[c] = M[i][cols]
    return x


def relative_min_poly(
    L: NumberField, tau: tuple, el: tuple, base_degree: int
) -> list[UniPoly]:
    """Minimal polynomial of el over the subfield Q(tau) of L, where tau
    generates a subfield of degree base_degree over Q.  Returned as monic
    coefficient polynomials in tau (each a UniPoly over Q of degree <
    base_degree, low to high Z-degree)."""
    nL = L.degree
    if nL % base_degree != 0:
        raise DomainError("subfield degree must divide the field degree")
    dmax = nL // base_degree
    tau_pows = [L.one()]
    for _ in range(base_degree - 1):
        tau_pows.append(L.mul(tau_pows[-1], tau))
    el_pows = [L.one()]
    for _ in range(dmax):
        el_pows.append(L.mul(el_pows[-1], el))
    for d in range(1, dmax + 1):
        cols = []
        for b in range(d):
            for a in range(base_degree):
                cols.append(L.mul(tau_pows[a], el_pows[b]))
        A = [[cols[j][i] for j in range(len(cols))] for i in range(nL)]
        rhs = [-el_pows[d][i] for i in range(nL)]
        x = _solve_linear(A, rhs)
        if x is None:
            continue
        out = []
        for b in range(d):
            chunk = x[b * base_degree : (b + 1) * base_degree]
            out.append(UniPoly(chunk))
        out.append(UniPoly.const(1))
        return out
    raise DomainError("element has no minimal polynomial below dmax")  # unreachable
