"""Exact univariate polynomials over the rationals.

A polynomial is a ``RatPoly`` holding an immutable tuple of
``fractions.Fraction`` coefficients, lowest degree first.  The zero
polynomial has an empty coefficient tuple and degree -1; otherwise the
leading coefficient is nonzero.  All arithmetic is exact.

Rationals travel as ``Fraction`` throughout the package and are
serialized as decimal-free "p/q" strings.
"""

from __future__ import annotations

import math
from fractions import Fraction


def rat(x) -> Fraction:
    """Coerce an int, string or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rat(x)
    return Fraction(x)


def parse_rat(s: str) -> Fraction:
    """Parse a "p/q" or bare "p" string."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rat(x: Fraction) -> str:
    """Render a rational as "p/q" (denominator always present)."""
    return f"{x.numerator}/{x.denominator}"


def isqrt_floor(n: int) -> int:
    return math.isqrt(n)


def isqrt_ceil(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def sqrt_lower(q: Fraction) -> Fraction:
    """A rational lower bound on sqrt(q), exact when q is a perfect square."""
    if q < 0:
        raise ValueError("negative radicand")
    # sqrt(a/b) = sqrt(ab)/b
    a, b = q.numerator, q.denominator
    return Fraction(isqrt_floor(a * b), b)

def sqrt_upper(q: Fraction) -> Fraction:
    """A rational upper bound on sqrt(q), exact when q is a perfect square."""
    if q < 0:
        raise ValueError("negative radicand")
    a, b = q.numerator, q.denominator
    return Fraction(isqrt_ceil(a * b), b)


def sqrt_bounds(q: Fraction, bits: int = 32) -> tuple[Fraction, Fraction]:
    """Rational bounds lo <= sqrt(q) <= hi with hi - lo <= 2^-bits * max(1, hi)."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0), Fraction(0)
    scale = 1 << (2 * bits)
    a, b = q.numerator, q.denominator
    lo = Fraction(isqrt_floor(a * b * scale), b << bits)
    hi = Fraction(isqrt_ceil(a * b * scale), b << bits)
    return lo, hi


class RatPoly:
    """Immutable dense polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("RatPoly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((1,))

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((0, 1))

    @staticmethod
    def constant(c) -> "RatPoly":
        return RatPoly((rat(c),))

    @staticmethod
    def from_roots(roots) -> "RatPoly":
        p = RatPoly.one()
        for r in roots:
            p = p * RatPoly((-rat(r), 1))
        return p

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "RatPoly(" + " + ".join(terms) + ")"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = RatPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i in range(d + 1):
                rem[k + i] -= f * other.coeffs[i]
            rem.pop()
        return RatPoly(q), RatPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(_coerce(other))[1]

    def scale(self, c) -> "RatPoly":
        c = rat(c)
        return RatPoly([a * c for a in self.coeffs])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x: Fraction) -> Fraction:
        """Horner evaluation at a rational point."""
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a: Fraction, b: Fraction) -> "RatPoly":
        """Return p(a*x + b)."""
        acc = RatPoly.zero()
        lin = RatPoly((rat(b), rat(a)))
        for c in reversed(self.coeffs):
            acc = acc * lin + RatPoly.constant(c)
        return acc

    def reverse(self) -> "RatPoly":
        """Reversed coefficients: x^deg * p(1/x)."""
        return RatPoly(tuple(reversed(self.coeffs)))

    # -- gcd / squarefree ------------------------------------------------

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd by Euclid's algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "RatPoly":
        """Product of distinct irreducible factors, monic."""
        if self.degree <= 0:
            return RatPoly.one()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    # -- integer form ------------------------------------------------------

    def primitive_integer_coeffs(self) -> list[int]:
        """Coefficients of the primitive integer multiple, lowest first.

        The primitive form clears denominators and divides by the content;
        the sign follows the leading coefficient.
        """
        if self.is_zero():
            return []
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*(abs(v) for v in ints))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    def height(self) -> int:
        """Max absolute coefficient of the primitive integer multiple."""
        ints = self.primitive_integer_coeffs()
        if not ints:
            return 0
        return max(abs(v) for v in ints)

    def is_integer_poly(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _coerce(x) -> RatPoly:
    if isinstance(x, RatPoly):
        return x
    return RatPoly.constant(x)


def falling_factorial_poly(j: int) -> RatPoly:
    """The polynomial n(n-1)...(n-j+1) in the variable n."""
    p = RatPoly.one()
    for i in range(j):
        p = p * RatPoly((-i, 1))
    return p


def crt_pair(t1: int, m1: int, t2: int, m2: int):
    """Solve n = t1 (mod m1), n = t2 (mod m2); None if inconsistent."""
    g = math.gcd(m1, m2)
    if (t1 - t2) % g != 0:
        return None
    l = m1 // g * m2
    # lift: n = t1 + m1*k with m1*k = t2-t1 (mod m2)
    k = ((t2 - t1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (t1 + m1 * k) % l, l


def crt_list(congruences) -> tuple[int, int] | None:
    """Merge a list of (residue, modulus) pairs; None if unsatisfiable."""
    t, m = 0, 1
    for t2, m2 in congruences:
        merged = crt_pair(t, m, t2 % m2, m2)
        if merged is None:
            return None
        t, m = merged
    return t, m
