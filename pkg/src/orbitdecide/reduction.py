"""Reductions from orbit instances to equation systems over eigenvalues.

The pipeline follows the classical route: rescale the matrix to integer
entries, restrict to the Krylov subspace of the starting point (making
the restriction invertible unless the orbit dies into zero), intersect
the target with that subspace, convert target vectors to matrices, and
cut the matrix span down to polynomials in the restriction.  Membership
of A^n x in V is then equivalent to solvability of a small linear
system whose rows are derivative conditions at the eigenvalues.

Eigenvalues are grouped into classes whose pairwise ratios are roots of
unity; each class has a stem (a positive real modulus for
self-conjugate classes, a designated member for conjugate-paired
classes) and root-of-unity cofactors.  Fixing n modulo the lcm of the
cofactor orders collapses each class to equations at its stem plus
linear constraints on the coefficients, which is what removes the
root-of-unity degeneracies the bound lemmas cannot handle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algnum import (
    ALG_ONE,
    AlgebraicNumber,
    alg_equals,
    alg_eval_poly,
    alg_power,
    binop,
    complex_conjugate,
    identify_root,
    root_of_unity_check,
)
from .linalg import (
    RatMatrix,
    Subspace,
    Vector,
    krylov_reduce,
    intersect_to_polys,
    matrix_eigenvalues,
    nullspace_rat,
    rescale_to_integer,
    solve_linear,
    subspace_intersect,
    target_matrices,
    vec,
    vec_is_zero,
)
from .ratpoly import RatPoly, format_rat, parse_rat


@dataclass(frozen=True)
class OrbitInstance:
    """Does A^n x enter the subspace V for some natural n?"""

    a: RatMatrix
    x: Vector
    v: Subspace

    def __post_init__(self):
        if self.a.rows != self.a.cols:
            raise ValueError("matrix must be square")
        if len(self.x) != self.a.rows or self.v.ambient_dim != self.a.rows:
            raise ValueError("dimension mismatch")

    def to_json(self) -> dict:
        return {
            "matrix": self.a.to_json(),
            "point": [format_rat(e) for e in self.x],
            "target_basis": self.v.to_json(),
        }

    @staticmethod
    def from_json(d: dict) -> "OrbitInstance":
        a = RatMatrix.from_json(d["matrix"])
        x = vec(parse_rat(s) for s in d["point"])
        basis = [[parse_rat(s) for s in row] for row in d["target_basis"]]
        inst = OrbitInstance(a, x, Subspace(a.rows, basis))
        if "offset" in d:
            z = vec(parse_rat(s) for s in d["offset"])
            inst = affine_to_linear(a, x, inst.v, z)
        return inst


@dataclass
class MatrixPowerInstance:
    """Does M^n land in span{p_i(M)} for some n?  (M invertible unless
    the Krylov closure was nilpotent, which the solver handles first.)"""

    m: RatMatrix
    d: RatMatrix
    nu: int
    polys: list[RatPoly]
    eigen: list[tuple[AlgebraicNumber, int]]
    nilpotent: bool

    @property
    def s(self) -> int:
        return len(self.polys)

    def membership_normals(self) -> list[Vector]:
        """Normals of span{vec(p_i(M))} for direct power-membership tests."""
        flats = [_poly_at_matrix(p, self.m).flatten() for p in self.polys]
        if not flats:
            return [tuple(Fraction(1) if i == j else Fraction(0)
                          for j in range(self.m.rows ** 2))
                    for i in range(self.m.rows ** 2)]
        return nullspace_rat([list(f) for f in flats])

    def to_json(self) -> dict:
        return {
            "matrix": self.m.to_json(),
            "krylov_basis": self.d.to_json(),
            "nu": self.nu,
            "polys": [[format_rat(c) for c in p.coeffs] for p in self.polys],
            "nilpotent": self.nilpotent,
        }


def _poly_at_matrix(p: RatPoly, m: RatMatrix) -> RatMatrix:
    acc = RatMatrix.zero(m.rows, m.rows)
    ident = RatMatrix.identity(m.rows)
    for c in reversed(p.coeffs):
        acc = acc * m + ident.scale(c)
    return acc


@dataclass
class Equation:
    """The level-j derivative condition contributed by an eigenvalue:
    n(n-1)...(n-j+1) root^(n-j) = sum_t a_t * rhs_coeffs[t]."""

    root: AlgebraicNumber
    deriv: int
    rhs_coeffs: list[AlgebraicNumber]

    def lhs_label(self) -> str:
        j = self.deriv
        if j == 0:
            return "r^n"
        falling = "*".join(f"(n-{i})" if i else "n" for i in range(j))
        return f"{falling}*r^(n-{j})"

    def to_json(self) -> dict:
        return {
            "root": self.root.to_json(),
            "deriv": self.deriv,
            "lhs": self.lhs_label(),
            "rhs_coeffs": [c.to_json() for c in self.rhs_coeffs],
        }


@dataclass
class EqSystem:
    equations: list[Equation]
    unknowns: int

    def to_json(self) -> dict:
        return {
            "unknowns": self.unknowns,
            "equations": [e.to_json() for e in self.equations],
        }


def reduce_orbit_to_power(inst: OrbitInstance) -> MatrixPowerInstance:
    """Chain the full reduction; the answers are equivalent witness-for-witness."""
    if vec_is_zero(inst.x):
        raise ValueError("reduction needs a nonzero starting point")
    a = rescale_to_integer(inst.a)
    m, d, nu = krylov_reduce(a, inst.x)
    nilpotent = all(m[i, nu] == 0 for i in range(nu + 1))
    u = Subspace(a.rows, [d.col(j) for j in range(nu + 1)])
    w = subspace_intersect(u, inst.v)
    w_primes = []
    for wvec in w.basis:
        coords = solve_linear(d, wvec)
        if coords is None:
            raise AssertionError("intersection vector must lie in the Krylov span")
        w_primes.append(coords)
    t_mats = [target_matrices(m, wp) for wp in w_primes]
    polys = intersect_to_polys(t_mats, m) if t_mats else []
    eigen = matrix_eigenvalues(m)
    return MatrixPowerInstance(m, d, nu, polys, eigen, nilpotent)


def build_system(mp: MatrixPowerInstance) -> EqSystem:
    """Derivative equations at every eigenvalue of the minimal polynomial."""
    if not mp.polys:
        raise ValueError("system construction needs at least one polynomial")
    derivs: list[list[RatPoly]] = []
    max_mult = max(mult for _, mult in mp.eigen)
    for p in mp.polys:
        chain = [p]
        for _ in range(max_mult - 1):
            chain.append(chain[-1].derivative())
        derivs.append(chain)
    equations = []
    for root, mult in mp.eigen:
        for j in range(mult):
            rhs = [alg_eval_poly(derivs[t][j], root) for t in range(len(mp.polys))]
            equations.append(Equation(root, j, rhs))
    return EqSystem(equations, len(mp.polys))


# ---------------------------------------------------------------------------
# equivalence classes under "ratio is a root of unity"
# ---------------------------------------------------------------------------

@dataclass
class EigenClass:
    members: list[tuple[AlgebraicNumber, int]]
    stem: AlgebraicNumber
    omegas: list[tuple[AlgebraicNumber, int, int]] = field(default_factory=list)
    omega_orders: list[int] = field(default_factory=list)
    self_conjugate: bool = False
    conjugate_partner: int | None = None


@dataclass
class ClassDecomposition:
    classes: list[EigenClass]
    lcm_order: int

    @property
    def L(self) -> int:
        return self.lcm_order


def ratio_is_root_of_unity(a: AlgebraicNumber, b: AlgebraicNumber):
    """root_of_unity_check(a/b) with a cheap unequal-modulus rejection."""
    from .algnum import abs_compare
    if abs_compare(a, b) != 0:
        return None
    return root_of_unity_check(binop("div", a, b))


def alg_abs(a: AlgebraicNumber) -> AlgebraicNumber:
    """|a| as a real algebraic number."""
    from .algnum import abs_squared
    s2 = abs_squared(a)
    if s2.is_rational():
        q = s2.as_fraction()
        num_root = _exact_sqrt(q)
        if num_root is not None:
            return AlgebraicNumber.from_rational(num_root)
        candidates = RatPoly((-q, 0, 1))
    else:
        g = s2.min_poly
        candidates = RatPoly([c if i % 2 == 0 else Fraction(0)
                              for i in _interleave(g)])

    def ball_fn(bits):
        lo, hi = a.abs_bounds(bits)
        from .cball import ComplexBox, CRat
        return ComplexBox(CRat((lo + hi) / 2, 0), (hi - lo) / 2)

    return identify_root(candidates, ball_fn)


def _interleave(g: RatPoly):
    # coefficients of g(x^2) from those of g(y)
    out = []
    for c in g.coeffs:
        out.append(c)
        out.append(Fraction(0))
    return out[:-1]


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def class_decomposition(eigen: list[tuple[AlgebraicNumber, int]]) -> ClassDecomposition:
    """Partition eigenvalues into root-of-unity-ratio classes with stems."""
    if any(a.is_zero() for a, _ in eigen):
        raise ValueError("class decomposition requires nonzero eigenvalues")
    n = len(eigen)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j):
                continue
            if ratio_is_root_of_unity(eigen[i][0], eigen[j][0]) is not None:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    raw_classes = [sorted(idxs) for idxs in groups.values()]
    raw_classes.sort(key=lambda idxs: idxs[0])

    def class_of(value: AlgebraicNumber) -> int:
        for ci, idxs in enumerate(raw_classes):
            if any(alg_equals(value, eigen[i][0]) for i in idxs):
                return ci
        raise AssertionError("conjugate of an eigenvalue must be an eigenvalue")

    classes: list[EigenClass] = []
    partner: dict[int, int] = {}
    for ci, idxs in enumerate(raw_classes):
        members = [eigen[i] for i in idxs]
        conj_class = class_of(complex_conjugate(members[0][0]))
        if conj_class == ci:
            stem = alg_abs(members[0][0])
            cls = EigenClass(members, stem, self_conjugate=True)
        else:
            partner[ci] = conj_class
            cls = EigenClass(members, members[0][0], self_conjugate=False)
        classes.append(cls)

    # designate paired stems: lexicographically smallest refined center
    # among the union of both classes, conjugated for the partner
    for ci, cj in list(partner.items()):
        if ci > cj:
            continue
        pool = classes[ci].members + classes[cj].members
        for m, _ in pool:
            m.refined_bits(40)
        best = min((m for m, _ in pool),
                   key=lambda m: (m.box.center.re, m.box.center.im))
        classes[ci].stem = best if class_of(best) == ci else complex_conjugate(best)
        classes[cj].stem = complex_conjugate(classes[ci].stem)
        classes[ci].conjugate_partner = cj
        classes[cj].conjugate_partner = ci

    lcm_order = 1
    for cls in classes:
        for m, _ in cls.members:
            omega = binop("div", m, cls.stem)
            rk = root_of_unity_check(omega)
            if rk is None:
                raise AssertionError("member/stem cofactor must be a root of unity")
            order, phase = rk
            cls.omegas.append((omega, order, phase))
            cls.omega_orders.append(order)
            lcm_order = math.lcm(lcm_order, order)
    return ClassDecomposition(classes, lcm_order)


def collapse_class(cls: EigenClass, system: EqSystem, r: int,
                   modulus: int) -> tuple[list[Equation], list[list[AlgebraicNumber]]]:
    """Replace a class's equations with stem equations plus constraints.

    Valid for exponents n with n = r (mod modulus), where every cofactor
    order divides modulus.  Each member equation at derivative level i is
    divided by omega^(n-i); the first member's row becomes the stem
    equation and the differences become rows that the coefficient vector
    must annihilate.
    """
    if not (0 <= r < modulus):
        raise ValueError("residue out of range")
    if any(modulus % order for order in cls.omega_orders):
        raise ValueError("modulus must absorb every cofactor order")
    eq_by_member: dict[int, dict[int, Equation]] = {}
    for eq in system.equations:
        for mi, (m, _) in enumerate(cls.members):
            if alg_equals(eq.root, m):
                eq_by_member.setdefault(mi, {})[eq.deriv] = eq
                break
    collapsed: list[Equation] = []
    constraints: list[list[AlgebraicNumber]] = []
    max_mult = max(mult for _, mult in cls.members)
    for level in range(max_mult):
        rows = []
        for mi, (m, mult) in enumerate(cls.members):
            if level >= mult:
                continue
            eq = eq_by_member[mi][level]
            omega, order, _ = cls.omegas[mi]
            shift = alg_power(omega, (level - r) % order)
            rows.append([binop("mul", c, shift) for c in eq.rhs_coeffs])
        if not rows:
            continue
        collapsed.append(Equation(cls.stem, level, rows[0]))
        for other in rows[1:]:
            constraints.append([binop("sub", a, b)
                                for a, b in zip(rows[0], other)])
    return collapsed, constraints


# ---------------------------------------------------------------------------
# auxiliary whole-instance reductions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapExceeded:
    lcm_order: int


def nonsingular_split(inst: OrbitInstance, cap: int):
    """Split into instances (A^L, A^i x, V) with no root-of-unity ratios.

    Returns the list of instances, or CapExceeded(L) when L > cap.
    Exposed for cross-validation; the main path collapses classes
    instead.
    """
    a = rescale_to_integer(inst.a)
    eigen = matrix_eigenvalues(a)
    lcm_order = 1
    nonzero = [(e, m) for e, m in eigen if not e.is_zero()]
    for i in range(len(nonzero)):
        for j in range(len(nonzero)):
            if i == j:
                continue
            rk = ratio_is_root_of_unity(nonzero[i][0], nonzero[j][0])
            if rk is not None:
                lcm_order = math.lcm(lcm_order, rk[0])
    if lcm_order > cap:
        return CapExceeded(lcm_order)
    al = inst.a.power(lcm_order)
    out = []
    x = vec(inst.x)
    for _ in range(lcm_order):
        out.append(OrbitInstance(al, x, inst.v))
        x = inst.a.apply(x)
    return out


def affine_to_linear(a: RatMatrix, x, v: Subspace, z) -> OrbitInstance:
    """Homogenize the affine target V + z with a dummy coordinate."""
    d = a.rows
    x = vec(x)
    z = vec(z)
    if len(x) != d or len(z) != d or v.ambient_dim != d:
        raise ValueError("dimension mismatch")
    big = [[a[i, j] if j < d else Fraction(0) for j in range(d + 1)]
           for i in range(d)]
    big.append([Fraction(0)] * d + [Fraction(1)])
    basis = [list(b) + [Fraction(0)] for b in v.basis]
    basis.append(list(z) + [Fraction(1)])
    return OrbitInstance(RatMatrix.from_rows(big), tuple(x) + (Fraction(1),),
                         Subspace(d + 1, basis))


def skolem_to_orbit(xrow, a: RatMatrix, y) -> OrbitInstance:
    """Zero of the sequence x^T A^n y as an orbit instance with target x-perp."""
    xrow = vec(xrow)
    y = vec(y)
    if vec_is_zero(xrow):
        raise ValueError("row vector must be nonzero")
    perp = nullspace_rat([list(xrow)])
    return OrbitInstance(a, y, Subspace(a.rows, perp))
