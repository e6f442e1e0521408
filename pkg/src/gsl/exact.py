"""Exact rational, univariate and bivariate polynomial arithmetic.

Conventions used throughout the package:

* rationals are `fractions.Fraction` (aliased `Rat`);
* univariate polynomials are dense coefficient tuples, ascending degree,
  with no trailing zeros; the zero polynomial has an empty tuple and
  degree -1;
* bivariate polynomials P(T, Y) are stored as a tuple of rows indexed by
  Y-degree, each row a `UniPoly` in T;
* JSON form of a `UniPoly` is a list of decimal strings (``"-82"``,
  ``"3/4"``), ascending degree; a `BiPoly` is a list of such lists.

Resultants use the subresultant PRS so they work verbatim over Q and over
Q[T]; no factorization over Q is exposed here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

Rat = Fraction

# ---------------------------------------------------------------------------
# rationals


def rat_from_str(s: str) -> Rat:
    """Parse "p" or "p/q" (decimal strings) into a Rat."""
    return Fraction(s)


def rat_to_str(x: Rat) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_valuation(x: Rat | int, p: int) -> int:
    """v_p(x) for a nonzero rational x and a prime p.

    Errors on x = 0 (the valuation would be +infinity) and on p composite.
    """
    if not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise DomainError("valuation of 0 requested")
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers every modulus this
    package will ever see); probabilistic beyond that."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def crt_combine(pairs: Sequence[tuple[int, int]]) -> int:
    """Least non-negative solution of x = r_i mod m_i for pairwise coprime
    moduli; pairs are (modulus, residue).  Errors when moduli share a factor.

    crt_combine([(9, 1), (25, 2)]) == 127
    """
    import math

    if not pairs:
        raise DomainError("empty congruence system")
    M, X = 1, 0
    for m, r in pairs:
        if m <= 0:
            raise DomainError(f"modulus {m} must be positive")
        g = math.gcd(M, m)
        if g != 1:
            raise DomainError(f"moduli not pairwise coprime (gcd {g})")
        # x = X mod M, x = r mod m  ->  x = X + M*k, k = (r-X)/M mod m
        k = (r - X) * pow(M, -1, m) % m
        X = X + M * k
        M *= m
    return X % M


def _pollard_brent(n: int) -> int:
    """A proper divisor of an odd composite n, by Brent's cycle variant of
    Pollard rho; deterministic (parameters scanned in fixed order)."""
    import math

    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise DomainError(f"failed to split {n}")  # unreachable in practice


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: multiplicity}; n must be
    non-zero.  Trial division for small primes, then Pollard-Brent."""
    if n == 0:
        raise DomainError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 17
    while d * d <= n and d < 10_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out


# ---------------------------------------------------------------------------
# univariate polynomials over Q


def _norm(coeffs: Iterable) -> tuple[Rat, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UniPoly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _norm(coeffs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([Fraction(c)])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPoly":
        return cls([rat_from_str(s) for s in data])

    def to_json(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Rat:
        if self.is_zero:
            raise DomainError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{rat_to_str(c)}*x^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        return UniPoly([ci * c for ci in self.coeffs])

    def shift_degree(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise DomainError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        dlc = other.lc
        db = other.degree
        while len(r) - 1 >= db and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < db:
                break
            k = len(r) - 1 - db
            f = r[-1] / dlc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return UniPoly(q), UniPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise DomainError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise DomainError("monic normalization of the zero polynomial")
        if self.lc == 1:
            return self
        return self.scale(1 / self.lc)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (Euclid over Q)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a.monic()

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, other: "UniPoly") -> "UniPoly":
        """self(other(x)) by Horner."""
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * other + UniPoly.const(c)
        return out

    def __call__(self, x) -> Rat:
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def reverse(self) -> "UniPoly":
        """x^deg * self(1/x)."""
        if self.is_zero:
            return self
        return UniPoly(list(reversed(self.coeffs)))

    def primitive_scale(self) -> tuple[int, "UniPoly"]:
        """(d, d*self) for the least positive integer d clearing denominators."""
        import math

        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d, self.scale(d)


def squarefree_part(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise DomainError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UniPoly.const(1)
    g = f.gcd(f.derivative())
    return f.divexact(g).monic()


# ---------------------------------------------------------------------------
# generic subresultant PRS


class _RatDomain:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def is_zero(a):
        return a == 0

    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)
    mul = staticmethod(lambda a, b: a * b)
    neg = staticmethod(lambda a: -a)

    @staticmethod
    def divexact(a, b):
        return a / b


class _UniPolyDomain:
    zero = UniPoly()
    one = UniPoly.const(1)

    @staticmethod
    def is_zero(a: UniPoly):
        return a.is_zero

    add = staticmethod(UniPoly.__add__)
    sub = staticmethod(UniPoly.__sub__)
    mul = staticmethod(UniPoly.__mul__)
    neg = staticmethod(UniPoly.__neg__)
    divexact = staticmethod(UniPoly.divexact)


def _dpow(dom, a, n: int):
    out = dom.one
    for _ in range(n):
        out = dom.mul(out, a)
    return out


def _prem(dom, A: list, B: list) -> list:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B (coefficient
    lists over dom, no trailing zeros)."""
    dA, dB = len(A) - 1, len(B) - 1
    lcB = B[-1]
    e = dA - dB + 1
    R = list(A)
    while len(R) - 1 >= dB:
        lcR = R[-1]
        k = len(R) - 1 - dB
        R = [dom.mul(c, lcB) for c in R]
        for i, c in enumerate(B):
            R[k + i] = dom.sub(R[k + i], dom.mul(lcR, c))
        R.pop()
        while R and dom.is_zero(R[-1]):
            R.pop()
        e -= 1
        if not R:
            break
    for _ in range(e):
        R = [dom.mul(c, lcB) for c in R]
    return R


def _subresultant(dom, A: list, B: list):
    """Resultant of A, B (non-zero coefficient lists over dom) by the
    subresultant PRS; intermediate divisions stay in the domain."""
    dA, dB = len(A) - 1, len(B) - 1
    s = 1
    if dA < dB:
        A, B, dA, dB = B, A, dB, dA
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
    if dA == 0:
        return dom.one  # two constants
    if dB == 0:
        out = _dpow(dom, B[0], dA)
        return out if s == 1 else dom.neg(out)
    g = dom.one
    h = dom.one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(dom, A, B)
        if not R:
            return dom.zero
        A = B
        denom = dom.mul(g, _dpow(dom, h, delta))
        B = [dom.divexact(c, denom) for c in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = dom.divexact(_dpow(dom, g, delta), _dpow(dom, h, delta - 1))
        if len(B) - 1 == 0:
            dA = len(A) - 1
            out = dom.divexact(_dpow(dom, B[0], dA), _dpow(dom, h, dA - 1))
            return out if s == 1 else dom.neg(out)


# ---------------------------------------------------------------------------
# bivariate polynomials, resultants, discriminants


class BiPoly:
    """P(T, Y) as a tuple of rows: rows[i] is the UniPoly in T multiplying
    Y^i.  The covers this package handles are monic in Y."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[UniPoly]):
        rs = [r if isinstance(r, UniPoly) else UniPoly(r) for r in rows]
        while rs and rs[-1].is_zero:
            rs.pop()
        object.__setattr__(self, "rows", tuple(rs))

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "BiPoly":
        return cls([UniPoly.from_json(row) for row in data])

    def to_json(self) -> list[list[str]]:
        return [row.to_json() for row in self.rows]

    @property
    def degree_y(self) -> int:
        return len(self.rows) - 1

    @property
    def is_monic_in_y(self) -> bool:
        return bool(self.rows) and self.rows[-1] == UniPoly.const(1)

    def coeff(self, i: int) -> UniPoly:
        return self.rows[i] if 0 <= i < len(self.rows) else UniPoly()

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.rows == other.rows

    def __repr__(self):
        return f"BiPoly(deg_y={self.degree_y})"

    def eval_t(self, t0) -> UniPoly:
        """P(t0, Y) as a UniPoly in Y."""
        t0 = Fraction(t0)
        return UniPoly([row(t0) for row in self.rows])

    def deriv_y(self) -> "BiPoly":
        return BiPoly([row.scale(i) for i, row in enumerate(self.rows)][1:])

    def map_rows(self, fn) -> "BiPoly":
        return BiPoly([fn(row) for row in self.rows])


def resultant(f, g):
    """Resultant over the shared coefficient domain.

    (UniPoly, UniPoly) -> Rat; (BiPoly, BiPoly), both in Y over Q[T],
    -> UniPoly in T.  Errors on zero input.
    """
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        if f.is_zero or g.is_zero:
            raise DomainError("resultant with a zero polynomial")
        return _subresultant(_RatDomain, list(f.coeffs), list(g.coeffs))
    if isinstance(f, BiPoly) and isinstance(g, BiPoly):
        if not f.rows or not g.rows:
            raise DomainError("resultant with a zero polynomial")
        out = _subresultant(_UniPolyDomain, list(f.rows), list(g.rows))
        return out
    raise DomainError("resultant arguments must be two UniPoly or two BiPoly")


def discriminant(f: UniPoly) -> Rat:
    """Discriminant of a univariate f of degree >= 1 over Q."""
    n = f.degree
    if n < 1:
        raise DomainError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.lc


def disc_y(P: BiPoly) -> UniPoly:
    """Discriminant of P(T, Y) with respect to Y, a UniPoly in T.

    Requires P monic in Y of Y-degree >= 1.
    """
    n = P.degree_y
    if n < 1:
        raise DomainError("disc_y needs Y-degree >= 1")
    if not P.is_monic_in_y:
        raise DomainError("disc_y requires a polynomial monic in Y")
    if n == 1:
        return UniPoly.const(1)
    r = resultant(P, P.deriv_y())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return r.scale(sign)
