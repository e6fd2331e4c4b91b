"""Canonical exact arithmetic on algebraic numbers.

An algebraic number is represented by its monic irreducible minimal
polynomial over Q together with a certified isolating disc: exactly one
root of the polynomial lies in the disc.  Every stored disc keeps the
root within half its radius, so refinement always has room to produce a
strictly smaller disc inside the old one.

Numeric root approximations come from mpmath at doubling precision, but
they are only candidates: every certificate is an exact rational
computation.  The containment certificate is the classical bound
min_root_distance(z) <= deg(g) * |g(z)/g'(z)| for squarefree g, checked
without square roots by comparing squared moduli.  A set of deg(g)
pairwise disjoint certified discs then isolates every root by counting.

Minimal polynomials of sums and products are found through companion
matrices and Kronecker products: a+b is an eigenvalue of
C_a (x) I + I (x) C_b and a*b of C_a (x) C_b, so an exact integer
characteristic polynomial plus factorization and disc-based
identification yields the canonical result.  Subtraction and division
reduce to negation and inversion, which act on the minimal polynomial
by exact coefficient transforms.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import sympy

from .cball import ComplexBox, CRat, eval_poly_on_box
from .detpoly import charpoly_rat, companion_matrix, kron, kron_sum, mat_mul
from .ratpoly import RatPoly, format_rat, parse_rat, rat

_SYMPY_X = sympy.Symbol("x")

_factor_cache: dict[tuple, list] = {}
_root_cache: dict[tuple, list] = {}
_cyclotomic_cache: dict[int, RatPoly] = {}


class AlgebraicDomainError(ValueError):
    """Raised on domain violations such as division by zero."""


# ---------------------------------------------------------------------------
# factorization and separation
# ---------------------------------------------------------------------------

def factor_rational_poly(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Factor a nonzero rational polynomial into monic irreducibles.

    Returns (factor, multiplicity) pairs sorted by degree then
    coefficients; the product of factor^multiplicity equals p up to a
    rational constant.
    """
    if p.is_zero():
        raise AlgebraicDomainError("cannot factor the zero polynomial")
    key = p.coeffs
    if key in _factor_cache:
        return list(_factor_cache[key])
    if p.degree == 0:
        _factor_cache[key] = []
        return []
    sp = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)],
        _SYMPY_X,
        domain="QQ",
    )
    _, factors = sp.factor_list()
    out = []
    for f, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(f.all_coeffs())]
        out.append((RatPoly(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    _factor_cache[key] = out
    return list(out)


def separation_lower_bound(p: RatPoly) -> Fraction:
    """Positive rational lower bound on the distance between distinct roots.

    Uses the root-separation inequality sqrt(6) / (n^((n+1)/2) * H^(n-1))
    with n the degree and H the height of the primitive integer form,
    rounded outward (down) so the result never exceeds the true minimum.
    """
    n = p.degree
    if n < 2:
        raise AlgebraicDomainError("separation bound needs degree >= 2")
    if not p.is_squarefree():
        raise AlgebraicDomainError("separation bound needs a squarefree polynomial")
    h = p.height()
    # sqrt(6 / n^(n+1)) rounded down, then divided by H^(n-1)
    radicand_num = 6
    radicand_den = n ** (n + 1)
    scale = 1 << 64
    lo = Fraction(math.isqrt(radicand_num * radicand_den * scale * scale),
                  radicand_den * scale)
    bound = lo / Fraction(h) ** (n - 1)
    if bound <= 0:
        raise AssertionError("separation bound must be positive")
    return bound


def cyclotomic_poly(k: int) -> RatPoly:
    """The k-th cyclotomic polynomial as a RatPoly."""
    if k not in _cyclotomic_cache:
        sp = sympy.polys.specialpolys.cyclotomic_poly(k, _SYMPY_X, polys=True)
        coeffs = [Fraction(int(c)) for c in reversed(sp.all_coeffs())]
        _cyclotomic_cache[k] = RatPoly(coeffs)
    return _cyclotomic_cache[k]


# ---------------------------------------------------------------------------
# numeric candidates (mpmath) + exact certificates
# ---------------------------------------------------------------------------

def _mpf_exact(x) -> Fraction:
    """Exact value of an mpmath float (binary rational)."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("non-finite float from root approximation")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def _dyadic(x, bits: int) -> Fraction:
    """Round an mpmath float to the nearest multiple of 2^-bits, exactly."""
    scaled = _mpf_exact(x) * (1 << bits)
    n = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return Fraction(n, 1 << bits)


def _approx_roots(int_coeffs: list[int], prec_bits: int):
    with mpmath.workprec(prec_bits):
        try:
            return mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(int_coeffs)],
                maxsteps=100 + prec_bits,
                extraprec=prec_bits,
            )
        except mpmath.libmp.NoConvergence:
            return None


def _eval_crat(p: RatPoly, z: CRat) -> CRat:
    acc = CRat(0, 0)
    for c in reversed(p.coeffs):
        acc = acc * z + CRat(c, 0)
    return acc


def _near_root_certificate(g: RatPoly, gprime: RatPoly, z: CRat,
                           rho: Fraction) -> bool:
    """Exact check that the disc D(z, rho) contains a root of squarefree g.

    Certificate: deg(g) * |g(z)/g'(z)| <= rho, compared via squares.
    """
    gz = _eval_crat(g, z)
    gpz = _eval_crat(gprime, z)
    a2 = gpz.abs2()
    if a2 == 0:
        return False
    n = g.degree
    return n * n * gz.abs2() <= rho * rho * a2


def _isolate_irreducible(g: RatPoly, radius_target: Fraction) -> list[ComplexBox]:
    """Certified pairwise-disjoint discs around all roots of irreducible g.

    Each returned disc has the root within half its radius and radius
    <= radius_target.
    """
    n = g.degree
    if n == 1:
        return [ComplexBox(CRat(-g.coeffs[0], 0), 0)]
    rho = radius_target / 2
    int_coeffs = g.primitive_integer_coeffs()
    prec = 64
    while True:
        approx = _approx_roots(int_coeffs, prec)
        if approx is not None:
            bits = prec
            centers = [CRat(_dyadic(w.real, bits), _dyadic(w.imag, bits))
                       for w in approx]
            gp = g.derivative()
            boxes = []
            ok = True
            for z in centers:
                if not _near_root_certificate(g, gp, z, rho):
                    ok = False
                    break
                boxes.append(ComplexBox(z, 2 * rho))
            if ok and len(boxes) == n:
                disjoint = all(
                    not boxes[i].intersects(boxes[j])
                    for i in range(n) for j in range(i + 1, n)
                )
                if disjoint:
                    boxes.sort(key=lambda b: (b.center.re, b.center.im))
                    return boxes
        prec *= 2
        if prec > 1 << 22:
            raise RuntimeError(f"root isolation did not converge for {g!r}")


def _isolated_roots(g: RatPoly) -> list["AlgebraicNumber"]:
    """All roots of an irreducible monic g, canonically isolated (cached)."""
    key = g.coeffs
    if key not in _root_cache:
        if g.degree >= 2:
            sep = separation_lower_bound(g)
            target = sep / 8
        else:
            target = Fraction(0)
        boxes = _isolate_irreducible(g, target)
        _root_cache[key] = [AlgebraicNumber(g, b) for b in boxes]
    return _root_cache[key]


def isolate_roots(p: RatPoly) -> list["AlgebraicNumber"]:
    """Canonical representations of all distinct roots of p.

    Repeated roots collapse to a single entry whose minimal polynomial
    is the irreducible factor vanishing there.  Boxes are pairwise
    disjoint, including across factors.
    """
    if p.is_zero():
        raise AlgebraicDomainError("cannot isolate roots of the zero polynomial")
    factors = factor_rational_poly(p)
    out: list[AlgebraicNumber] = []
    for g, _ in factors:
        out.extend(AlgebraicNumber(r.min_poly, r.box) for r in _isolated_roots(g))
    # distinct roots of distinct irreducible factors never coincide; refine
    # until every cross-factor pair of boxes separates
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                a, b = out[i], out[j]
                if a.min_poly == b.min_poly:
                    continue
                while a.box.intersects(b.box):
                    a.refine(a.box.radius / 4)
                    b.refine(b.box.radius / 4)
                    changed = True
    out.sort(key=lambda r: (r.box.center.re, r.box.center.im))
    return out


# ---------------------------------------------------------------------------
# the canonical representation
# ---------------------------------------------------------------------------

class AlgebraicNumber:
    """A complex algebraic number: monic irreducible min_poly + isolating disc.

    Instances behave as immutable values; the stored disc only ever
    shrinks (refinement replaces it with a certified sub-disc).
    """

    __slots__ = ("min_poly", "_box", "_abs2")

    def __init__(self, min_poly: RatPoly, box: ComplexBox):
        self.min_poly = min_poly
        self._box = box
        self._abs2 = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(q) -> "AlgebraicNumber":
        q = rat(q)
        return AlgebraicNumber(RatPoly((-q, 1)), ComplexBox.exact(q))

    @staticmethod
    def of_root(p: RatPoly, near: complex) -> "AlgebraicNumber":
        """The root of p closest to a numeric hint (testing convenience)."""
        roots = isolate_roots(p)
        return min(roots, key=lambda r: abs(r.box.center.to_complex() - near))

    # -- structure --------------------------------------------------------

    @property
    def box(self) -> ComplexBox:
        return self._box

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def height(self) -> int:
        return self.min_poly.height()

    def is_rational(self) -> bool:
        return self.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise AlgebraicDomainError("not a rational number")
        return -self.min_poly.coeffs[0]

    def as_integer(self) -> int | None:
        """The value as a Python int if it is a rational integer, else None."""
        if not self.is_rational():
            return None
        q = self.as_fraction()
        return q.numerator if q.denominator == 1 else None

    def is_zero(self) -> bool:
        return self.is_rational() and self.as_fraction() == 0

    def is_one(self) -> bool:
        return self.is_rational() and self.as_fraction() == 1

    def is_real(self) -> bool:
        if self.is_rational():
            return True
        return alg_equals(self, complex_conjugate(self))

    def is_algebraic_integer(self) -> bool:
        return self.min_poly.is_integer_poly()

    def __repr__(self):
        c = self._box.center
        return (f"AlgebraicNumber({self.min_poly!r} near "
                f"{float(c.re):.6g}{float(c.im):+.6g}j)")

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            return alg_equals(self, other)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.min_poly)

    # -- refinement --------------------------------------------------------

    def refine(self, eps: Fraction) -> ComplexBox:
        """Shrink the isolating disc to radius <= eps and return it."""
        eps = rat(eps)
        if eps <= 0:
            raise AlgebraicDomainError("refinement radius must be positive")
        if self._box.radius <= eps:
            return self._box
        g = self.min_poly
        gp = g.derivative()
        old = self._box
        # the root sits within old.radius/2 of the old center, so a target
        # of at most old.radius/4 leaves room for strict containment
        rho = min(eps, old.radius / 4) / 2
        prec = 64
        int_coeffs = g.primitive_integer_coeffs()
        while True:
            approx = _approx_roots(int_coeffs, prec)
            if approx is not None:
                best = None
                for w in approx:
                    z = CRat(_dyadic(w.real, prec), _dyadic(w.imag, prec))
                    d2 = (z - old.center).abs2()
                    if best is None or d2 < best[0]:
                        best = (d2, z)
                z = best[1]
                new = ComplexBox(z, 2 * rho)
                if (_near_root_certificate(g, gp, z, rho)
                        and new.is_inside(old)):
                    self._box = new
                    return new
            prec *= 2
            if prec > 1 << 22:
                raise RuntimeError(f"refinement did not converge for {self!r}")

    def refined_bits(self, bits: int) -> ComplexBox:
        return self.refine(Fraction(1, 1 << bits))

    def abs_bounds(self, bits: int = 32) -> tuple[Fraction, Fraction]:
        """Rational bounds lo <= |a| <= hi from a disc refined to 2^-bits."""
        box = self.refined_bits(bits)
        return box.abs_lower(), box.abs_upper()

    # -- operators -----------------------------------------------------------

    def __add__(self, other):
        return binop("add", self, _acoerce(other))

    __radd__ = __add__

    def __neg__(self):
        return alg_neg(self)

    def __sub__(self, other):
        return binop("sub", self, _acoerce(other))

    def __rsub__(self, other):
        return binop("sub", _acoerce(other), self)

    def __mul__(self, other):
        return binop("mul", self, _acoerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return binop("div", self, _acoerce(other))

    def __rtruediv__(self, other):
        return binop("div", _acoerce(other), self)

    def __pow__(self, k: int):
        return alg_power(self, k)

    def conj(self) -> "AlgebraicNumber":
        return complex_conjugate(self)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        d = {"min_poly": [format_rat(c) for c in self.min_poly.coeffs]}
        d.update(self._box.to_json())
        return d

    @staticmethod
    def from_json(d: dict) -> "AlgebraicNumber":
        poly = RatPoly([parse_rat(s) for s in d["min_poly"]])
        box = ComplexBox.from_json(d)
        roots = isolate_roots(poly)
        for r in roots:
            if r.box.intersects(box) or box.contains_point(r.box.center):
                return AlgebraicNumber(r.min_poly, r.box)
        raise AlgebraicDomainError("serialized box isolates no root")


def _acoerce(x) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber.from_rational(x)
    raise TypeError(f"cannot coerce {type(x)} to AlgebraicNumber")


ALG_ZERO = AlgebraicNumber.from_rational(0)
ALG_ONE = AlgebraicNumber.from_rational(1)


# ---------------------------------------------------------------------------
# equality, conjugation, comparisons
# ---------------------------------------------------------------------------

def alg_equals(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    """Exact equality of the represented numbers."""
    if a.min_poly != b.min_poly:
        return False
    if a.degree == 1:
        return True
    if a._box is b._box:
        return True
    sep = separation_lower_bound(a.min_poly)
    ba = a.refine(sep / 16)
    bb = b.refine(sep / 16)
    return ba.intersects(bb)


def complex_conjugate(a: AlgebraicNumber) -> AlgebraicNumber:
    """Same minimal polynomial, disc reflected across the real axis."""
    return AlgebraicNumber(a.min_poly, a.box.conj())


def conjugates(a: AlgebraicNumber) -> list[AlgebraicNumber]:
    """All Galois conjugates (the distinct roots of min_poly), a included."""
    return [AlgebraicNumber(r.min_poly, r.box) for r in _isolated_roots(a.min_poly)]


def abs_squared(a: AlgebraicNumber) -> AlgebraicNumber:
    """|a|^2 as a real algebraic number (cached)."""
    if a._abs2 is None:
        if a.is_rational():
            q = a.as_fraction()
            a._abs2 = AlgebraicNumber.from_rational(q * q)
        else:
            a._abs2 = binop("mul", a, complex_conjugate(a))
    return a._abs2


def compare_real(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Exact trichotomy for real algebraic numbers: -1, 0 or 1."""
    if alg_equals(a, b):
        return 0
    bits = 8
    while True:
        ba = a.refined_bits(bits)
        bb = b.refined_bits(bits)
        alo, ahi = ba.center.re - ba.radius, ba.center.re + ba.radius
        blo, bhi = bb.center.re - bb.radius, bb.center.re + bb.radius
        if ahi < blo:
            return -1
        if bhi < alo:
            return 1
        bits *= 2
        if bits > 1 << 20:
            raise RuntimeError("compare_real did not separate")


def abs_compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Exact comparison of |a| and |b|: returns -1, 0 or 1."""
    return compare_real(abs_squared(a), abs_squared(b))


def abs_compare_to_rational(a: AlgebraicNumber, q: Fraction) -> int:
    """Exact comparison of |a| with a nonnegative rational."""
    q = rat(q)
    if q < 0:
        raise AlgebraicDomainError("comparing modulus against a negative value")
    return compare_real(abs_squared(a), AlgebraicNumber.from_rational(q * q))


def alg_is_natural(a: AlgebraicNumber) -> int | None:
    """The value as a nonnegative int when it is one, else None."""
    n = a.as_integer() if a.is_rational() else None
    if n is not None and n >= 0:
        return n
    return None


# ---------------------------------------------------------------------------
# norms and valuations
# ---------------------------------------------------------------------------

def abs_norm(a: AlgebraicNumber) -> Fraction:
    """Product of the Galois conjugates: (-1)^deg * constant term."""
    if a.min_poly.degree < 1:
        raise AlgebraicDomainError("invalid minimal polynomial")
    sign = -1 if a.degree % 2 else 1
    return sign * a.min_poly.coeffs[0]


def norm_valuation(a: AlgebraicNumber, p: int):
    """Exponent of the rational prime p in abs_norm(a); +inf for a = 0."""
    if a.is_zero():
        return math.inf
    n = abs_norm(a)
    v = 0
    num = abs(n.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = n.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


# ---------------------------------------------------------------------------
# arithmetic: exact transforms and the companion-matrix route
# ---------------------------------------------------------------------------

def alg_neg(a: AlgebraicNumber) -> AlgebraicNumber:
    if a.is_rational():
        return AlgebraicNumber.from_rational(-a.as_fraction())
    p = a.min_poly
    coeffs = [(-1) ** (p.degree - i) * c for i, c in enumerate(p.coeffs)]
    return AlgebraicNumber(RatPoly(coeffs).monic(), -a.box)


def alg_inverse(a: AlgebraicNumber) -> AlgebraicNumber:
    if a.is_zero():
        raise AlgebraicDomainError("inverse of zero")
    if a.is_rational():
        return AlgebraicNumber.from_rational(1 / a.as_fraction())
    while a.box.contains_zero():
        a.refine(a.box.radius / 4)
    return AlgebraicNumber(a.min_poly.reverse().monic(), a.box.inverse())


def _shift_rational(a: AlgebraicNumber, q: Fraction) -> AlgebraicNumber:
    """a + q by an exact minimal-polynomial shift."""
    if q == 0:
        return a
    p = a.min_poly.compose_linear(Fraction(1), -q)
    return AlgebraicNumber(p, a.box + ComplexBox.exact(q))


def _scale_rational(a: AlgebraicNumber, q: Fraction) -> AlgebraicNumber:
    """a * q by an exact minimal-polynomial rescale."""
    if q == 0:
        return ALG_ZERO
    if q == 1:
        return a
    p = a.min_poly
    n = p.degree
    coeffs = [c * q ** (n - i) for i, c in enumerate(p.coeffs)]
    return AlgebraicNumber(RatPoly(coeffs).monic(),
                           a.box * ComplexBox.exact(q))


def _identify(candidates: RatPoly, ball_fn) -> AlgebraicNumber:
    """Pick the root of `candidates` certified to equal the true value.

    ball_fn(bits) must return a disc containing the true value whose
    radius tends to zero as bits grows.  The true value is a root of
    `candidates`, so its own disc always intersects the ball; every
    other root is eventually excluded.
    """
    factors = [f for f, _ in factor_rational_poly(candidates)]
    roots = [r for f in factors for r in _isolated_roots(f)]
    bits = 48
    while True:
        ball = ball_fn(bits)
        target = ball.radius if ball.radius > 0 else Fraction(1, 1 << bits)
        hits = []
        for root in roots:
            box = root.box
            if box.radius > target:
                box = root.refine(target)
            if box.intersects(ball):
                hits.append(root)
        if len(hits) == 1:
            r = hits[0]
            return AlgebraicNumber(r.min_poly, r.box)
        bits *= 2
        if bits > 1 << 22:
            raise RuntimeError("root identification did not converge")


def identify_root(candidates: RatPoly, ball_fn) -> AlgebraicNumber:
    """Public entry to disc-based root identification (see _identify)."""
    return _identify(candidates, ball_fn)


def binop(kind: str, a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    """Canonical representation of a+b, a-b, a*b or a/b."""
    a, b = _acoerce(a), _acoerce(b)
    if kind == "sub":
        return binop("add", a, alg_neg(b))
    if kind == "div":
        return binop("mul", a, alg_inverse(b))
    if kind not in ("add", "mul"):
        raise ValueError(f"unknown binop kind {kind!r}")

    if a.is_rational() and b.is_rational():
        qa, qb = a.as_fraction(), b.as_fraction()
        return AlgebraicNumber.from_rational(qa + qb if kind == "add" else qa * qb)
    if a.is_rational():
        a, b = b, a
    if b.is_rational():
        q = b.as_fraction()
        return _shift_rational(a, q) if kind == "add" else _scale_rational(a, q)

    ca = companion_matrix(a.min_poly)
    cb = companion_matrix(b.min_poly)
    m = kron_sum(ca, cb) if kind == "add" else kron(ca, cb)
    charpoly = charpoly_rat(m)

    if kind == "add":
        def ball_fn(bits):
            return a.refined_bits(bits) + b.refined_bits(bits)
    else:
        def ball_fn(bits):
            return a.refined_bits(bits) * b.refined_bits(bits)

    return _identify(charpoly, ball_fn)


def alg_eval_poly(p: RatPoly, a: AlgebraicNumber) -> AlgebraicNumber:
    """Canonical representation of p(a) via the companion-matrix route."""
    if p.is_zero():
        return ALG_ZERO
    if a.is_rational():
        return AlgebraicNumber.from_rational(p.eval(a.as_fraction()))
    p = p % a.min_poly
    if p.is_zero():
        return ALG_ZERO
    if p.degree == 0:
        return AlgebraicNumber.from_rational(p.coeffs[0])
    if p.degree == 1:
        return _shift_rational(_scale_rational(a, p.coeffs[1]), p.coeffs[0])
    c = companion_matrix(a.min_poly)
    n = len(c)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for coeff in reversed(p.coeffs):
        acc = mat_mul(acc, c)
        for i in range(n):
            acc[i][i] += coeff
    charpoly = charpoly_rat(acc)

    def ball_fn(bits):
        return eval_poly_on_box(p.coeffs, a.refined_bits(bits))

    return _identify(charpoly, ball_fn)


def alg_power(a: AlgebraicNumber, k: int) -> AlgebraicNumber:
    """a^k for integer k (negative allowed when a is nonzero)."""
    if k < 0:
        return alg_power(alg_inverse(a), -k)
    if k == 0:
        return ALG_ONE
    if a.is_rational():
        return AlgebraicNumber.from_rational(a.as_fraction() ** k)
    # x^k mod min_poly, then one evaluation
    base = RatPoly.x()
    result = RatPoly.one()
    e = k
    while e:
        if e & 1:
            result = (result * base) % a.min_poly
        base = (base * base) % a.min_poly
        e >>= 1
    return alg_eval_poly(result, a)


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def root_of_unity_check(a: AlgebraicNumber) -> tuple[int, int] | None:
    """Detect whether a = exp(2*pi*i*j/k) with gcd(j,k)=1, k minimal.

    Returns (k, j) or None.  Candidate orders k satisfy phi(k) = deg(a)
    and k <= 2*deg^2 + 1, since phi(k) >= sqrt(k/2).
    """
    if a.is_zero():
        raise AlgebraicDomainError("zero is not on the unit circle")
    if a.is_rational():
        q = a.as_fraction()
        if q == 1:
            return (1, 0)
        if q == -1:
            return (2, 1)
        return None
    n = a.degree
    for k in range(2, 2 * n * n + 2):
        if sympy.totient(k) != n:
            continue
        if a.min_poly == cyclotomic_poly(k):
            return (k, _phase_of_unity_root(a, k))
    return None


def _phase_of_unity_root(a: AlgebraicNumber, k: int) -> int:
    # |a| = 1; angular uncertainty from a disc of radius r is at most
    # ~2r, so r <= 1/(16k) pins the phase among the k-th roots
    box = a.refine(Fraction(1, 16 * k))
    theta = math.atan2(float(box.center.im), float(box.center.re))
    j = round(theta * k / (2 * math.pi)) % k
    if math.gcd(j, k) != 1:
        raise AssertionError("phase of a primitive root must be coprime to order")
    return j


def is_root_of_unity(a: AlgebraicNumber) -> bool:
    return root_of_unity_check(a) is not None
