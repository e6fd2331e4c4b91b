"""Exact linear algebra over the rationals and over algebraic numbers.

``RatMatrix`` is a dense row-major rational matrix; ``Subspace`` keeps a
basis in reduced row-echelon form so subspace equality is tuple
equality.  ``AlgMatrix`` holds algebraic-number entries and supports
exact Gaussian elimination with equality-tested pivots (no epsilons).

The Krylov reduction restricts a matrix to the invariant subspace
generated by a point, producing the companion-shaped matrix used by the
power-membership machinery; its output satisfies A^n x = D M^n e1 for
all n.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algnum import AlgebraicNumber, alg_equals, binop, isolate_roots
from .detpoly import charpoly_rat
from .ratpoly import RatPoly, format_rat, parse_rat, rat


Vector = tuple[Fraction, ...]


def vec(xs) -> Vector:
    return tuple(rat(x) for x in xs)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))

def vec_scale(a: Vector, c: Fraction) -> Vector:
    return tuple(x * c for x in a)

def vec_dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))

def vec_is_zero(a: Vector) -> bool:
    return all(x == 0 for x in a)


class RatMatrix:
    """Dense exact rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(rat(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "RatMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return RatMatrix(n, m, [e for r in rows for e in r])

    @staticmethod
    def from_columns(cols) -> "RatMatrix":
        cols = [list(c) for c in cols]
        m = len(cols)
        n = len(cols[0]) if cols else 0
        return RatMatrix(n, m, [cols[j][i] for i in range(n) for j in range(m)])

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(n, n, [1 if i == j else 0
                                for i in range(n) for j in range(n)])

    @staticmethod
    def zero(n: int, m: int) -> "RatMatrix":
        return RatMatrix(n, m, [0] * (n * m))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return (self.rows, self.cols, self.entries) == \
                   (other.rows, other.cols, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RatMatrix({self.row_list()})"

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols,
                         [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols,
                         [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "RatMatrix":
        c = rat(c)
        return RatMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            orows = other.row_list()
            for i in range(self.rows):
                srow = self.row(i)
                acc = [Fraction(0)] * other.cols
                for k, s in enumerate(srow):
                    if s == 0:
                        continue
                    orow = orows[k]
                    for j in range(other.cols):
                        acc[j] += s * orow[j]
                out.extend(acc)
            return RatMatrix(self.rows, other.cols, out)
        return NotImplemented

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(vec_dot(self.row(i), v) for i in range(self.rows))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         [self[j, i] for i in range(self.cols)
                          for j in range(self.rows)])

    def power(self, n: int) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = RatMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def flatten(self) -> Vector:
        return self.entries

    def charpoly(self) -> RatPoly:
        if self.rows != self.cols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        return charpoly_rat(self.row_list())

    def det(self) -> Fraction:
        p = self.charpoly()
        return p.eval(Fraction(0)) * (-1) ** self.rows

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def inverse(self) -> "RatMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(self.row(i)) + [Fraction(1) if i == j else Fraction(0)
                                    for j in range(n)] for i in range(n)]
        reduced, pivots = _rref_rows(aug)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise ValueError("matrix is singular")
        return RatMatrix.from_rows([r[n:] for r in reduced])

    def to_json(self) -> list[list[str]]:
        return [[format_rat(e) for e in self.row(i)] for i in range(self.rows)]

    @staticmethod
    def from_json(rows: list[list[str]]) -> "RatMatrix":
        return RatMatrix.from_rows([[parse_rat(e) for e in r] for r in rows])


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place-style reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(m):
        if r >= n:
            break
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(rows) -> int:
    return len(_rref_rows([list(r) for r in rows])[1])


def nullspace_rat(rows) -> list[Vector]:
    """Basis of {v : M v = 0} for a rational matrix given as row lists."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    m = len(rows[0])
    reduced, pivots = _rref_rows(rows)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for r_i, c in enumerate(pivots):
            v[c] = -reduced[r_i][f]
        basis.append(tuple(v))
    return basis


def solve_linear(a: RatMatrix, b: Vector) -> Vector | None:
    """One exact solution of A v = b, or None."""
    aug = [list(a.row(i)) + [b[i]] for i in range(a.rows)]
    reduced, pivots = _rref_rows(aug)
    if a.cols in pivots:
        return None
    v = [Fraction(0)] * a.cols
    for r_i, c in enumerate(pivots):
        v[c] = reduced[r_i][a.cols]
    return tuple(v)


class Subspace:
    """Rational subspace held as a reduced-row-echelon basis (canonical)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis):
        basis = [vec(b) for b in basis]
        if any(len(b) != ambient_dim for b in basis):
            raise ValueError("basis vector of wrong length")
        reduced, pivots = _rref_rows([list(b) for b in basis])
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(reduced[i]) for i in range(len(pivots)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if isinstance(other, Subspace):
            return (self.ambient_dim, self.basis) == (other.ambient_dim, other.basis)
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"

    def contains(self, v: Vector) -> bool:
        if vec_is_zero(v):
            return True
        return rank(list(self.basis) + [list(v)]) == self.dim

    def perp_basis(self) -> list[Vector]:
        """Basis of the orthogonal complement."""
        if not self.basis:
            return [tuple(Fraction(1) if i == j else Fraction(0)
                          for j in range(self.ambient_dim))
                    for i in range(self.ambient_dim)]
        return nullspace_rat([list(b) for b in self.basis])

    def to_json(self) -> list[list[str]]:
        return [[format_rat(e) for e in b] for b in self.basis]


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Basis of the intersection of two subspaces of the same ambient space."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if u.dim == 0 or v.dim == 0:
        return Subspace(u.ambient_dim, [])
    # solve sum c_i u_i = sum d_j v_j: nullspace of [U^T | -V^T]
    rows = []
    for k in range(u.ambient_dim):
        rows.append([b[k] for b in u.basis] + [-b[k] for b in v.basis])
    combos = nullspace_rat(rows)
    vectors = []
    for c in combos:
        w = tuple(sum((c[i] * u.basis[i][k] for i in range(u.dim)), Fraction(0))
                  for k in range(u.ambient_dim))
        vectors.append(w)
    return Subspace(u.ambient_dim, [w for w in vectors if not vec_is_zero(w)])


# ---------------------------------------------------------------------------
# reduction toolkit
# ---------------------------------------------------------------------------

def rescale_to_integer(a: RatMatrix) -> RatMatrix:
    """Multiply by the lcm of entry denominators; membership is preserved
    for subspace targets because V absorbs the scaling c^n."""
    if a.rows != a.cols:
        raise ValueError("rescale expects a square matrix")
    c = 1
    for e in a.entries:
        c = math.lcm(c, e.denominator)
    return a.scale(c)


def krylov_reduce(a: RatMatrix, x: Vector) -> tuple[RatMatrix, RatMatrix, int]:
    """Restrict a to the invariant subspace generated by x.

    Returns (M, D, nu) with D = [x Ax ... A^nu x] and M the
    companion-shaped restriction: subdiagonal ones, last column the
    coordinates of A^(nu+1) x in the Krylov basis.  For all n,
    A^n x = D M^n e1.
    """
    if a.rows != a.cols:
        raise ValueError("krylov reduction expects a square matrix")
    x = vec(x)
    if vec_is_zero(x):
        raise ValueError("krylov reduction needs a nonzero point")
    basis_rows: list[list[Fraction]] = []
    iterates = [x]
    cur = x
    while True:
        if rank(basis_rows + [list(cur)]) == len(basis_rows):
            break
        basis_rows.append(list(cur))
        cur = a.apply(cur)
        iterates.append(cur)
    nu = len(basis_rows) - 1
    d = RatMatrix.from_columns(iterates[:nu + 1])
    b = solve_linear(d, iterates[nu + 1])
    if b is None:
        raise AssertionError("krylov closure must be solvable")
    m = [[Fraction(0)] * (nu + 1) for _ in range(nu + 1)]
    for j in range(nu):
        m[j + 1][j] = Fraction(1)
    for i in range(nu + 1):
        m[i][nu] = b[i]
    return RatMatrix.from_rows(m), d, nu


def target_matrices(m: RatMatrix, w: Vector) -> RatMatrix:
    """[w  Mw  ...  M^nu w] for the (nu+1)-square matrix M."""
    cols = [vec(w)]
    for _ in range(m.rows - 1):
        cols.append(m.apply(cols[-1]))
    return RatMatrix.from_columns(cols)


def matrix_min_poly(a: RatMatrix) -> RatPoly:
    """Monic least-degree polynomial annihilating a."""
    from .algnum import factor_rational_poly
    cp = a.charpoly()
    factors = factor_rational_poly(cp)
    # per-factor exponents are independent: the other factors are
    # invertible on each generalized eigenspace
    exps = []
    for i, (f, mult) in enumerate(factors):
        e = mult
        for trial in range(1, mult + 1):
            cand = RatPoly.one()
            for j, (g, mg) in enumerate(factors):
                cand = cand * g ** (trial if j == i else mg)
            if _poly_at_matrix_is_zero(cand, a):
                e = trial
                break
        exps.append(e)
    out = RatPoly.one()
    for (f, _), e in zip(factors, exps):
        out = out * f ** e
    return out.monic()


def _poly_at_matrix_is_zero(p: RatPoly, a: RatMatrix) -> bool:
    n = a.rows
    acc = RatMatrix.zero(n, n)
    ident = RatMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc * a + ident.scale(c)
    return acc.is_zero()


def matrix_eigenvalues(a: RatMatrix) -> list[tuple[AlgebraicNumber, int]]:
    """Distinct eigenvalues with their multiplicities in the minimal polynomial."""
    from .algnum import factor_rational_poly
    mp = matrix_min_poly(a)
    factors = factor_rational_poly(mp)
    out = []
    for f, mult in factors:
        for root in isolate_roots(f):
            out.append((root, mult))
    return out


def polynomial_subspace(m: RatMatrix) -> Subspace:
    """Basis {I, M, ..., M^(d-1)} of {p(M)}, flattened; d = deg minpoly."""
    d = matrix_min_poly(m).degree
    flat = []
    cur = RatMatrix.identity(m.rows)
    for _ in range(d):
        flat.append(cur.flatten())
        cur = cur * m
    return Subspace(m.rows * m.cols, flat)


def intersect_to_polys(t_basis: list[RatMatrix], m: RatMatrix) -> list[RatPoly]:
    """Polynomials p_i with {p_i(M)} a basis of span(T) intersect {p(M)}."""
    d = matrix_min_poly(m).degree
    powers = []
    cur = RatMatrix.identity(m.rows)
    for _ in range(d):
        powers.append(cur.flatten())
        cur = cur * m
    t_flat = [t.flatten() for t in t_basis]
    t_space = Subspace(m.rows * m.cols, t_flat)
    p_space = Subspace(m.rows * m.cols, powers)
    w = subspace_intersect(t_space, p_space)
    polys = []
    for b in w.basis:
        # express b in the power basis (unique since powers independent)
        coeffs = solve_linear(RatMatrix.from_columns(powers), b)
        if coeffs is None:
            raise AssertionError("intersection element must lie in the power span")
        polys.append(RatPoly(coeffs))
    return polys


# ---------------------------------------------------------------------------
# algebraic-entry matrices
# ---------------------------------------------------------------------------

class AlgMatrix:
    """Dense matrix of algebraic numbers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "AlgMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return AlgMatrix(n, m, [e for r in rows for e in r])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[AlgebraicNumber]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[list[AlgebraicNumber]]:
        return [self.row(i) for i in range(self.rows)]


def nullspace_alg(b: AlgMatrix) -> list[list[AlgebraicNumber]]:
    """Exact basis of {v : B v = 0} over the algebraic numbers.

    Gaussian elimination with alg_equals pivot tests.
    """
    from .algnum import ALG_ZERO, ALG_ONE, alg_inverse, alg_neg
    rows = [list(r) for r in b.row_list()]
    n, m = len(rows), b.cols
    pivots = []
    r = 0
    for c in range(m):
        if r >= n:
            break
        pivot = next((i for i in range(r, n) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = alg_inverse(rows[r][c])
        rows[r] = [binop("mul", e, inv) for e in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [binop("sub", e, binop("mul", f, g))
                           for e, g in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f_col in free:
        v = [ALG_ZERO] * m
        v[f_col] = ALG_ONE
        for r_i, c in enumerate(pivots):
            v[c] = alg_neg(rows[r_i][f_col])
        basis.append(v)
    return basis


def alg_rank(rows: list[list[AlgebraicNumber]]) -> int:
    if not rows:
        return 0
    m = AlgMatrix.from_rows(rows)
    return m.cols - len(nullspace_alg(m))


def normal_vector(vectors: list[list[AlgebraicNumber]]) -> list[AlgebraicNumber]:
    """Nonzero vector orthogonal to k independent vectors in A^(k+1).

    Normalized so the first nonzero coordinate is 1.
    """
    from .algnum import alg_inverse
    k = len(vectors)
    if not vectors or any(len(v) != k + 1 for v in vectors):
        raise ValueError("need k independent vectors of length k+1")
    ns = nullspace_alg(AlgMatrix.from_rows(vectors))
    if len(ns) != 1:
        raise ValueError("input vectors are linearly dependent")
    v = ns[0]
    lead = next(e for e in v if not e.is_zero())
    inv = alg_inverse(lead)
    return [binop("mul", e, inv) for e in v]
