"""Straight-line programs for membership tests, with modular zero testing.

Membership of A^n x in a subspace is encoded as a division-free
integer circuit: A^n by repeated squaring, then every (k+1)x(k+1)
minor of the iterate against the target basis.  All outputs are zero
exactly when the point lies in the subspace.  The probabilistic zero
test evaluates the circuit modulo random 62-bit primes: a nonzero
residue certifies nonzeroness, while an all-zero answer errs with
probability controlled by the node magnitude bound (a nonzero value
below 2^b has fewer than b/61 prime divisors in [2^61, 2^62)).
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import sympy

from .linalg import RatMatrix, Subspace, vec, vec_dot
from .ratpoly import rat

PRIME_WINDOW_LOW = 1 << 61
PRIME_WINDOW_HIGH = 1 << 62
# primes in [2^61, 2^62): pi(2x)-pi(x) > x(2/ln(2x) - 1.25506/ln(x)) by the
# Rosser-Schoenfeld inequalities; 3e16 is a safe underestimate
PRIME_COUNT_LOWER = 3 * 10 ** 16


class SLP:
    """Division-free integer straight-line program.

    nodes: ('const', value) | ('input', index) | ('add'|'sub'|'mul', i, j);
    node operands always refer to earlier nodes.  magnitude_log2 bounds
    log2 of the absolute value of every node on the bound inputs.
    """

    __slots__ = ("nodes", "outputs", "input_values", "magnitude_log2")

    def __init__(self, nodes, outputs, input_values=(), magnitude_log2=Fraction(0)):
        self.nodes = list(nodes)
        self.outputs = list(outputs)
        self.input_values = tuple(int(v) for v in input_values)
        self.magnitude_log2 = rat(magnitude_log2)

    def eval_exact(self) -> list[int]:
        vals: list[int] = []
        for node in self.nodes:
            op = node[0]
            if op == "const":
                vals.append(node[1])
            elif op == "input":
                vals.append(self.input_values[node[1]])
            elif op == "add":
                vals.append(vals[node[1]] + vals[node[2]])
            elif op == "sub":
                vals.append(vals[node[1]] - vals[node[2]])
            elif op == "mul":
                vals.append(vals[node[1]] * vals[node[2]])
            else:
                raise ValueError(f"bad node {node!r}")
        return [vals[i] for i in self.outputs]

    def dump(self) -> str:
        lines = []
        for i, node in enumerate(self.nodes):
            if node[0] == "const":
                lines.append(f"t{i} = CONST {node[1]}")
            elif node[0] == "input":
                lines.append(f"t{i} = INPUT {node[1]}")
            else:
                lines.append(f"t{i} = {node[0].upper()} t{node[1]} t{node[2]}")
        lines.append("outputs: " + " ".join(f"t{i}" for i in self.outputs))
        return "\n".join(lines)


class SLPBuilder:
    """Incremental SLP construction with per-node magnitude tracking."""

    def __init__(self, input_values=()):
        self.nodes: list[tuple] = []
        self.bounds: list[Fraction] = []
        self.input_values = tuple(int(v) for v in input_values)
        self._const_cache: dict[int, int] = {}

    def _push(self, node, bound) -> int:
        self.nodes.append(node)
        self.bounds.append(bound)
        return len(self.nodes) - 1

    def const(self, v: int) -> int:
        v = int(v)
        if v not in self._const_cache:
            bound = Fraction(abs(v).bit_length())
            self._const_cache[v] = self._push(("const", v), bound)
        return self._const_cache[v]

    def input(self, i: int) -> int:
        bound = Fraction(abs(self.input_values[i]).bit_length())
        return self._push(("input", i), bound)

    def add(self, i: int, j: int) -> int:
        return self._push(("add", i, j), max(self.bounds[i], self.bounds[j]) + 1)

    def sub(self, i: int, j: int) -> int:
        return self._push(("sub", i, j), max(self.bounds[i], self.bounds[j]) + 1)

    def mul(self, i: int, j: int) -> int:
        return self._push(("mul", i, j), self.bounds[i] + self.bounds[j])

    def dot(self, xs, ys) -> int:
        acc = None
        for a, b in zip(xs, ys):
            term = self.mul(a, b)
            acc = term if acc is None else self.add(acc, term)
        if acc is None:
            return self.const(0)
        return acc

    def det(self, rows: list[list[int]]) -> int:
        """Cofactor-expansion determinant of a small matrix of node ids."""
        n = len(rows)
        if n == 1:
            return rows[0][0]
        if n == 2:
            return self.sub(self.mul(rows[0][0], rows[1][1]),
                            self.mul(rows[0][1], rows[1][0]))
        acc = None
        for j in range(n):
            minor = [[rows[i][c] for c in range(n) if c != j]
                     for i in range(1, n)]
            term = self.mul(rows[0][j], self.det(minor))
            if acc is None:
                acc = term
            elif j % 2 == 1:
                acc = self.sub(acc, term)
            else:
                acc = self.add(acc, term)
        return acc

    def build(self, outputs) -> SLP:
        mag = max(self.bounds, default=Fraction(0))
        return SLP(self.nodes, outputs, self.input_values, mag)


def _integerize_instance(a: RatMatrix, x, v_basis):
    """Clear all denominators; membership in a subspace is scale-invariant."""
    scale = 1
    for e in a.entries:
        scale = math.lcm(scale, e.denominator)
    a_int = [[int(e * scale) for e in a.row(i)] for i in range(a.rows)]
    x = vec(x)
    xs = 1
    for e in x:
        xs = math.lcm(xs, e.denominator)
    x_int = [int(e * xs) for e in x]
    vs_int = []
    for b in v_basis:
        b = vec(b)
        bs = 1
        for e in b:
            bs = math.lcm(bs, e.denominator)
        vs_int.append([int(e * bs) for e in b])
    return a_int, x_int, vs_int


def power_membership_slp(a: RatMatrix, x, v_basis, n: int) -> SLP:
    """Circuit whose outputs all vanish iff A^n x lies in span(v_basis).

    A^n is computed by repeated squaring inside the circuit; the
    outputs are the (k+1)x(k+1) minors of [A^n x | basis] over all
    coordinate subsets.
    """
    if n < 0:
        raise ValueError("negative power")
    a_int, x_int, vs_int = _integerize_instance(a, x, v_basis)
    d = len(a_int)
    k = len(vs_int)
    bld = SLPBuilder()
    if k >= d:
        return bld.build([])  # full-dimensional target: always a member
    # matrix power on node-index matrices
    cur = [[bld.const(a_int[i][j]) for j in range(d)] for i in range(d)]
    acc = [[bld.const(1 if i == j else 0) for j in range(d)] for i in range(d)]
    e = n
    while e:
        if e & 1:
            acc = _slp_matmul(bld, acc, cur)
        e >>= 1
        if e:
            cur = _slp_matmul(bld, cur, cur)
    xs = [bld.const(v) for v in x_int]
    y = [bld.dot(acc[i], xs) for i in range(d)]
    v_nodes = [[bld.const(c) for c in b] for b in vs_int]
    outputs = []
    for subset in itertools.combinations(range(d), k + 1):
        rows = [[y[i]] + [v[i] for v in v_nodes] for i in subset]
        outputs.append(bld.det(rows))
    return bld.build(outputs)


def _slp_matmul(bld: SLPBuilder, a, b):
    n = len(a)
    return [[bld.dot(a[i], [b[t][j] for t in range(n)]) for j in range(n)]
            for i in range(n)]


def eval_mod(slp: SLP, p: int) -> list[int]:
    """All outputs of the program evaluated modulo p."""
    vals: list[int] = []
    for node in slp.nodes:
        op = node[0]
        if op == "const":
            vals.append(node[1] % p)
        elif op == "input":
            vals.append(slp.input_values[node[1]] % p)
        elif op == "add":
            vals.append((vals[node[1]] + vals[node[2]]) % p)
        elif op == "sub":
            vals.append((vals[node[1]] - vals[node[2]]) % p)
        elif op == "mul":
            vals.append((vals[node[1]] * vals[node[2]]) % p)
        else:
            raise ValueError(f"bad node {node!r}")
    return [vals[i] for i in slp.outputs]


def random_prime_62(rng: random.Random) -> int:
    """Uniform prime from [2^61, 2^62); primality is deterministic here."""
    while True:
        c = rng.randrange(PRIME_WINDOW_LOW | 1, PRIME_WINDOW_HIGH, 2)
        if sympy.isprime(c):
            return c


def prob_zero_test(slp: SLP, error_budget: Fraction,
                   rng: random.Random | None = None):
    """('all_zero',) or ('some_nonzero', output_index).

    A nonzero answer is always correct; all_zero is wrong with
    probability at most error_budget.
    """
    error_budget = rat(error_budget)
    if not (0 < error_budget < 1):
        raise ValueError("error budget must be in (0, 1)")
    if not slp.outputs:
        return ("all_zero",)
    rng = rng if rng is not None else random.Random(0x5EED)
    divisors = int(slp.magnitude_log2 / 61) + 1
    per_round = Fraction(divisors, PRIME_COUNT_LOWER)
    rounds = 1
    failure = per_round
    while failure > error_budget:
        rounds += 1
        failure *= per_round
    for _ in range(rounds):
        p = random_prime_62(rng)
        residues = eval_mod(slp, p)
        for idx, r in enumerate(residues):
            if r != 0:
                return ("some_nonzero", idx)
    return ("all_zero",)


def exact_membership(a: RatMatrix, x, v: Subspace, n: int,
                     cap: int = 10 ** 6) -> bool:
    """Exact test of A^n x in V by repeated squaring and perp normals."""
    if n > cap:
        raise ValueError(f"exponent {n} exceeds the exact-computation cap {cap}")
    x = vec(x)
    y = a.power(n).apply(x) if n else x
    return v.contains(y)


class ModularOrbitScan:
    """Iterates the orbit modulo a prime, flagging membership candidates.

    Candidates are sound over-approximations: every true witness is
    flagged (the exact minors vanish, hence vanish mod p), while flagged
    non-witnesses are weeded out by exact verification.
    """

    def __init__(self, a: RatMatrix, x, v: Subspace, p: int):
        a_int, x_int, vs_int = _integerize_instance(a, x, list(v.basis))
        self.p = p
        self.d = len(a_int)
        self.a = [[e % p for e in row] for row in a_int]
        self.y = [e % p for e in x_int]
        self.n = 0
        self.v_rref = _rref_mod_p([[e % p for e in b] for b in vs_int], p)
        self.full = len(self.v_rref) >= self.d

    def member_now(self) -> bool:
        if self.full:
            return True
        y = list(self.y)
        p = self.p
        for pivot_col, row in self.v_rref:
            f = y[pivot_col]
            if f:
                for j in range(self.d):
                    y[j] = (y[j] - f * row[j]) % p
        return all(c == 0 for c in y)

    def step(self):
        p = self.p
        self.y = [sum(self.a[i][j] * self.y[j] for j in range(self.d)) % p
                  for i in range(self.d)]
        self.n += 1


def _rref_mod_p(rows: list[list[int]], p: int):
    rows = [list(r) for r in rows]
    out = []
    r = 0
    m = len(rows[0]) if rows else 0
    for c in range(m):
        if r >= len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        out.append((c, rows[r]))
        r += 1
    return out
