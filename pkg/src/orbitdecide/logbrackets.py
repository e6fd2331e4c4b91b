"""Certified rational brackets, mainly for logarithms of rationals.

Effective bounds in this package are astronomically large products of
logarithms, so they travel as exact rational intervals [lo, hi]
guaranteed to contain the true real value.  Natural logs of positive
rationals are bracketed by the atanh series with an explicit remainder
bound after normalizing the argument into [1, 2) with powers of two;
base-2 logs of exact powers of two are returned as zero-width
brackets, which is what makes closed-form log2 values exact.

No floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .ratpoly import rat


class Bracket:
    """Closed rational interval [lo, hi] containing a real value."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = rat(lo)
        hi = lo if hi is None else rat(hi)
        if lo > hi:
            raise ValueError("bracket bounds out of order")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"Bracket({float(self.lo):.9g}, {float(self.hi):.9g})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __add__(self, other):
        other = _coerce(other)
        return Bracket(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Bracket(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Bracket(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("bracket division by an interval containing 0")
        quotients = (self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return Bracket(min(quotients), max(quotients))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def square(self) -> "Bracket":
        if self.lo >= 0:
            return Bracket(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Bracket(self.hi * self.hi, self.lo * self.lo)
        return Bracket(0, max(self.lo * self.lo, self.hi * self.hi))

    def max_with(self, other) -> "Bracket":
        other = _coerce(other)
        return Bracket(max(self.lo, other.lo), max(self.hi, other.hi))

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def floor_hi(self) -> int:
        """Largest integer any contained value could reach (floor of hi)."""
        return self.hi.numerator // self.hi.denominator

    def ceil_hi(self) -> int:
        return -((-self.hi.numerator) // self.hi.denominator)


# the spec-level name for brackets holding natural logarithms
LogRat = Bracket


def _coerce(x) -> Bracket:
    if isinstance(x, Bracket):
        return x
    return Bracket(rat(x))


def _atanh_bracket(z: Fraction, terms: int) -> Bracket:
    """Bracket of atanh(z) for 0 <= z < 1/2 via the odd power series."""
    if not (0 <= z < Fraction(1, 2)):
        raise ValueError("series argument out of range")
    if z == 0:
        return Bracket(0)
    total = Fraction(0)
    zpow = z
    z2 = z * z
    for k in range(terms):
        total += zpow / (2 * k + 1)
        zpow *= z2
    # remainder: sum_{k>=terms} z^(2k+1)/(2k+1) <= z^(2T+1)/((2T+1)(1-z^2))
    rem = zpow / ((2 * terms + 1) * (1 - z2))
    return Bracket(total, total + rem)


def _terms_for(bits: int) -> int:
    # with z <= 1/3 each extra term gains log2(9) > 3 bits
    return max(4, bits // 3 + 2)


_LN2_CACHE: dict[int, Bracket] = {}


def ln2_bracket(bits: int = 96) -> Bracket:
    """Certified bracket of ln 2 to roughly 2^-bits width."""
    if bits not in _LN2_CACHE:
        # ln 2 = 2 atanh(1/3)
        b = _atanh_bracket(Fraction(1, 3), _terms_for(bits))
        _LN2_CACHE[bits] = Bracket(2 * b.lo, 2 * b.hi)
    return _LN2_CACHE[bits]


def _split_pow2(q: Fraction) -> tuple[int, Fraction]:
    """Write q = 2^e * m with m in [1, 2)."""
    e = 0
    m = q
    while m >= 2:
        m /= 2
        e += 1
    while m < 1:
        m *= 2
        e -= 1
    return e, m


def ln_rat(q, bits: int = 96) -> Bracket:
    """Certified bracket of ln(q) for a positive rational q."""
    q = rat(q)
    if q <= 0:
        raise ValueError("logarithm of a nonpositive value")
    if q == 1:
        return Bracket(0)
    e, m = _split_pow2(q)
    # cap the size of m's numerator/denominator before the series
    if m.numerator.bit_length() + m.denominator.bit_length() > 4 * bits:
        scale = 1 << (2 * bits)
        lo_m = Fraction((m.numerator * scale) // m.denominator, scale)
        hi_m = lo_m + Fraction(1, scale)
        lo = _ln_reduced(lo_m, bits) if lo_m >= 1 else Bracket(0)
        hi = _ln_reduced(hi_m, bits)
        body = Bracket(lo.lo, hi.hi)
    else:
        body = _ln_reduced(m, bits)
    l2 = ln2_bracket(bits)
    return Bracket(e * (l2.lo if e >= 0 else l2.hi) + body.lo,
                   e * (l2.hi if e >= 0 else l2.lo) + body.hi)


def _ln_reduced(m: Fraction, bits: int) -> Bracket:
    # m in [1, 2): ln m = 2 atanh((m-1)/(m+1)), argument < 1/3
    z = (m - 1) / (m + 1)
    b = _atanh_bracket(z, _terms_for(bits))
    return Bracket(2 * b.lo, 2 * b.hi)


def log2_rat(q, bits: int = 96) -> Bracket:
    """Certified bracket of log2(q); exact for powers of two."""
    q = rat(q)
    if q <= 0:
        raise ValueError("logarithm of a nonpositive value")
    e, m = _split_pow2(q)
    if m == 1:
        return Bracket(e)
    return (ln_rat(q, bits + 8)) / ln2_bracket(bits + 8)


def ln_of_bracket(b: Bracket, bits: int = 96) -> Bracket:
    """Bracket of ln over a positive bracket."""
    if b.lo <= 0:
        raise ValueError("logarithm of a bracket touching zero")
    return Bracket(ln_rat(b.lo, bits).lo, ln_rat(b.hi, bits).hi)


def log2_of_bracket(b: Bracket, bits: int = 96) -> Bracket:
    if b.lo <= 0:
        raise ValueError("logarithm of a bracket touching zero")
    return Bracket(log2_rat(b.lo, bits).lo, log2_rat(b.hi, bits).hi)


def ublog2_int(n: int) -> Fraction:
    """Cheap rational upper bound on log2(n) for positive integers."""
    if n <= 0:
        raise ValueError("log of nonpositive integer")
    return Fraction(n.bit_length())
