"""Exact complex-rational points and certified disc arithmetic.

A ``CRat`` is a complex number with rational real and imaginary parts.
A ``ComplexBox`` is a closed disc with a CRat center and a rational
radius; it certifies containment of one true complex value.  Disc
("ball") arithmetic here is conservative: centers are combined exactly
and radii are inflated with rational upper bounds on the relevant
moduli, so the output disc always contains the image of the inputs.
Inversion of a disc not containing zero is an exact Moebius image and
needs no rounding at all.
"""

from __future__ import annotations

from fractions import Fraction

from .ratpoly import rat, sqrt_lower, sqrt_upper, format_rat, parse_rat


class CRat:
    """Complex number with rational coordinates."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re))
        object.__setattr__(self, "im", rat(im))

    def __setattr__(self, *a):
        raise AttributeError("CRat is immutable")

    def __eq__(self, other):
        if isinstance(other, CRat):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"CRat({self.re}, {self.im})"

    def __add__(self, o):
        o = _ccoerce(o)
        return CRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-_ccoerce(o))

    def __rsub__(self, o):
        return _ccoerce(o) + (-self)

    def __mul__(self, o):
        o = _ccoerce(o)
        return CRat(self.re * o.re - self.im * o.im,
                    self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CRat":
        return CRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "CRat":
        a2 = self.abs2()
        if a2 == 0:
            raise ZeroDivisionError("inverse of zero")
        return CRat(self.re / a2, -self.im / a2)

    def __truediv__(self, o):
        return self * _ccoerce(o).inverse()

    def abs_upper(self) -> Fraction:
        return sqrt_upper(self.abs2())

    def abs_lower(self) -> Fraction:
        return sqrt_lower(self.abs2())

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


def _ccoerce(x) -> CRat:
    if isinstance(x, CRat):
        return x
    if isinstance(x, (int, Fraction)):
        return CRat(x, 0)
    raise TypeError(f"cannot coerce {type(x)} to CRat")


class ComplexBox:
    """Closed disc {z : |z - center| <= radius} with rational data."""

    __slots__ = ("center", "radius")

    def __init__(self, center: CRat, radius=0):
        radius = rat(radius)
        if radius < 0:
            raise ValueError("negative radius")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    def __setattr__(self, *a):
        raise AttributeError("ComplexBox is immutable")

    def __repr__(self):
        return f"ComplexBox({self.center!r}, r={self.radius})"

    def __eq__(self, other):
        if isinstance(other, ComplexBox):
            return self.center == other.center and self.radius == other.radius
        return NotImplemented

    def __hash__(self):
        return hash((self.center, self.radius))

    @staticmethod
    def exact(re, im=0) -> "ComplexBox":
        return ComplexBox(CRat(re, im), 0)

    def conj(self) -> "ComplexBox":
        return ComplexBox(self.center.conj(), self.radius)

    def contains_point(self, z: CRat) -> bool:
        return (z - self.center).abs2() <= self.radius * self.radius

    def intersects(self, other: "ComplexBox") -> bool:
        d2 = (self.center - other.center).abs2()
        s = self.radius + other.radius
        return d2 <= s * s

    def is_inside(self, other: "ComplexBox") -> bool:
        """Whole disc contained in other (sufficient exact test)."""
        d = (self.center - other.center).abs_upper()
        return d + self.radius <= other.radius

    def contains_zero(self) -> bool:
        return self.center.abs2() <= self.radius * self.radius

    # -- modulus bounds ---------------------------------------------------

    def abs_upper(self) -> Fraction:
        """Rational upper bound on |z| over the disc."""
        return self.center.abs_upper() + self.radius

    def abs_lower(self) -> Fraction:
        """Rational lower bound on |z| over the disc (clamped at 0)."""
        lo = self.center.abs_lower() - self.radius
        return lo if lo > 0 else Fraction(0)

    # -- disc arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _bcoerce(other)
        return ComplexBox(self.center + other.center, self.radius + other.radius)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.center, self.radius)

    def __sub__(self, other):
        return self + (-_bcoerce(other))

    def __rsub__(self, other):
        return _bcoerce(other) + (-self)

    def __mul__(self, other):
        other = _bcoerce(other)
        c = self.center * other.center
        r = (self.center.abs_upper() * other.radius
             + other.center.abs_upper() * self.radius
             + self.radius * other.radius)
        return ComplexBox(c, r)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBox":
        """Exact disc image under z -> 1/z; requires 0 outside the disc."""
        a2 = self.center.abs2()
        r2 = self.radius * self.radius
        if a2 <= r2:
            raise ZeroDivisionError("disc contains zero")
        d = a2 - r2
        c = self.center.conj()
        return ComplexBox(CRat(c.re / d, c.im / d), self.radius / d)

    def __truediv__(self, other):
        return self * _bcoerce(other).inverse()

    def pow(self, k: int) -> "ComplexBox":
        if k < 0:
            raise ValueError("negative power")
        result = ComplexBox.exact(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> dict:
        return {
            "re": format_rat(self.center.re),
            "im": format_rat(self.center.im),
            "radius": format_rat(self.radius),
        }

    @staticmethod
    def from_json(d: dict) -> "ComplexBox":
        return ComplexBox(CRat(parse_rat(d["re"]), parse_rat(d["im"])),
                          parse_rat(d["radius"]))


def _bcoerce(x) -> ComplexBox:
    if isinstance(x, ComplexBox):
        return x
    if isinstance(x, CRat):
        return ComplexBox(x, 0)
    if isinstance(x, (int, Fraction)):
        return ComplexBox(CRat(x, 0), 0)
    raise TypeError(f"cannot coerce {type(x)} to ComplexBox")


def eval_poly_on_box(coeffs, box: ComplexBox) -> ComplexBox:
    """Horner evaluation of a rational-coefficient polynomial on a disc.

    The result disc contains p(z) for every z in the input disc.
    """
    acc = ComplexBox.exact(0)
    for c in reversed(list(coeffs)):
        acc = acc * box + ComplexBox.exact(c)
    return acc
