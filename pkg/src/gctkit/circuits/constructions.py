"""Circuit constructions: Ryser's permanent, determinant universality,
projection certificates, homogenization, weakly-skew to skew, and
coefficient extraction from circuits over truncated power series."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from ..errors import DomainError
from .circuit import (
    Circuit,
    CircuitBuilder,
    classify,
    evaluate,
    is_skew,
    separate_operand,
)
from .poly import Poly, SeriesConstant, matrix_variable

log = logging.getLogger(__name__)


# ---------------------------------------------------------------- reference polynomials

def _perm_sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def determinant_polynomial(n: int) -> Poly:
    """det_n over x11..xnn by the Leibniz expansion."""
    terms = {}
    for p in itertools.permutations(range(n)):
        mono = tuple(sorted((matrix_variable(i + 1, p[i] + 1, n), 1) for i in range(n)))
        terms[mono] = _perm_sign(p)
    return Poly(terms)


@lru_cache(maxsize=None)
def permanent_polynomial(m: int) -> Poly:
    """per_m as the m!-term sum over permutations."""
    terms = {}
    for p in itertools.permutations(range(m)):
        mono = tuple(sorted((matrix_variable(i + 1, p[i] + 1, m), 1) for i in range(m)))
        terms[mono] = 1
    return Poly(terms)


def symbolic_determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a matrix of polynomials by Laplace expansion along rows,
    memoised on the set of columns still free."""
    n = len(matrix)
    memo: dict = {}

    def rec(row: int, cols: int) -> Poly:
        if row == n:
            return Poly.const(1)
        key = cols
        if key in memo:
            return memo[key]
        total = Poly()
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                continue
            entry = matrix[row][j]
            if not entry.is_zero():
                total = total + (entry * rec(row + 1, cols | 1 << j) if sign > 0
                                 else -(entry * rec(row + 1, cols | 1 << j)))
            sign = -sign
        memo[key] = total
        return total

    return rec(0, 0)


def entry_poly(e) -> Poly:
    if isinstance(e, str):
        return Poly.var(e)
    return Poly.const(Fraction(e))


# ---------------------------------------------------------------- Ryser

def ryser_permanent(m: int, shared: bool = True) -> Circuit:
    """per_m by inclusion-exclusion over column subsets.

    per_m = sum_{S nonempty} (-1)^{m-|S|} prod_i sum_{j in S} x_ij.  With
    ``shared`` the row sums of S extend those of S minus its largest column,
    giving O(m 2^m) gates; without it each row sum is rebuilt, which keeps
    every product factor private and the circuit weakly skew.
    """
    if m < 1:
        raise DomainError("m must be positive")
    b = CircuitBuilder()
    x = {(i, j): b.var(matrix_variable(i, j, m)) for i in range(1, m + 1) for j in range(1, m + 1)}
    row_sum: dict = {}
    positive, negative = [], []
    for r in range(1, m + 1):
        for S in itertools.combinations(range(1, m + 1), r):
            sums = []
            for i in range(1, m + 1):
                if shared:
                    if len(S) == 1:
                        s = x[i, S[0]]
                    else:
                        s = b.add(row_sum[i, S[:-1]], x[i, S[-1]])
                    row_sum[i, S] = s
                else:
                    s = b.sum([b.var(matrix_variable(i, j, m), shared=False) for j in S])
                sums.append(s)
            prod = b.product(sums)
            (positive if (m - r) % 2 == 0 else negative).append(prod)
    out = b.sum(positive)
    if negative:
        out = b.add(out, b.mul(b.const(-1), b.sum(negative)))
    return b.build(out)


# ---------------------------------------------------------------- universality

class _ABP:
    """Edge-weighted DAG under construction; vertex 0 is the source."""

    def __init__(self):
        self.n = 1
        self.edges: dict = {}  # (u, v) -> label (str variable or Fraction)

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u, v, label):
        key = (u, v)
        if key in self.edges:
            old = self.edges[key]
            if isinstance(old, str) or isinstance(label, str):
                raise AssertionError("parallel edges must carry constants")
            self.edges[key] = old + label
        else:
            self.edges[key] = label


def _is_const(label) -> bool:
    return not isinstance(label, str)


class _Pending:
    """value = sum over (vertex, label) of pathsum(vertex) * label, not yet a vertex."""

    __slots__ = ("items",)

    def __init__(self, items):
        self.items = dict(items)


def _merge(p: _Pending, q: _Pending, fresh) -> _Pending:
    """Sum of two pending values.  When both attach something to the same
    vertex and the labels cannot be added as constants, the right-hand side
    is routed through a fresh vertex."""
    items = dict(p.items)
    if any(u in items and not (_is_const(items[u]) and _is_const(q.items[u])) for u in q.items):
        q = _Pending({fresh(q): Fraction(1)})
    for u, lab in q.items.items():
        items[u] = items[u] + lab if u in items else lab
    return _Pending({u: lab for u, lab in items.items() if not (_is_const(lab) and lab == 0)})


def _input_label(g):
    if g.op == "var":
        return g.name
    if isinstance(g.value, SeriesConstant):
        raise DomainError("series constants are not allowed in universality_projection")
    return Fraction(g.value)


def _build_abp(c: Circuit):
    abp = _ABP()
    vert: dict = {}  # (gate, ctx) -> vertex
    pend: dict = {}  # (gate, ctx) -> _Pending

    def fresh(p: _Pending) -> int:
        v = abp.vertex()
        for u, lab in sorted(p.items.items(), key=lambda t: t[0]):
            abp.add_edge(u, v, lab)
        return v

    def materialize(p: _Pending) -> int:
        if len(p.items) == 1:
            (u, lab), = p.items.items()
            if _is_const(lab) and lab == 1:
                return u
        return fresh(p)

    def vertex_of(g: int, ctx: int) -> int:
        key = (g, ctx)
        if key not in vert:
            vert[key] = materialize(pending(g, ctx))
        return vert[key]

    def pending(g: int, ctx: int) -> _Pending:
        key = (g, ctx)
        if key in vert:
            return _Pending({vert[key]: Fraction(1)})
        if key in pend:
            return pend[key]
        gate = c.gates[g]
        if gate.is_input:
            res = _Pending({ctx: _input_label(gate)})
        elif gate.op == "add":
            a, b = gate.args
            res = _merge(pending(a, ctx), pending(b, ctx), fresh)
        else:
            a, b = gate.args
            ga, gb = c.gates[a], c.gates[b]
            if ga.is_input and gb.is_input:
                w = materialize(_Pending({ctx: _input_label(ga)}))
                res = _Pending({w: _input_label(gb)})
            elif gb.is_input or ga.is_input:
                comp, inp = (a, gb) if gb.is_input else (b, ga)
                res = _Pending({vertex_of(comp, ctx): _input_label(inp)})
            else:
                sep = separate_operand(c, g)
                if sep is None:
                    raise DomainError("circuit is not weakly skew")
                other = a if sep == b else b
                res = pending(sep, vertex_of(other, ctx))
        pend[key] = res
        return res

    out = pending(c.output, 0)
    t = materialize(out)
    if t == 0:
        t = abp.vertex()
        abp.add_edge(0, t, Fraction(1))
    return abp, t


def universality_projection(c: Circuit) -> dict:
    """Matrix of variables and constants whose determinant is the circuit's polynomial.

    The weakly-skew circuit is first turned into an algebraic branching
    program (separate subcircuits are chained in series, sums become
    parallel routes); the sink is identified with the source and every
    other vertex gets a -1 self-loop, so the determinant is (-1)^(N-1)
    times the path sum.  A row swap fixes the sign and the matrix is padded
    with an identity block to size s+1.
    """
    cls = classify(c)
    if cls == "general":
        raise DomainError("universality_projection needs a weakly-skew circuit")
    abp, t = _build_abp(c)
    # vertices other than source and sink, in creation order
    others = [v for v in range(1, abp.n) if v != t]
    index = {0: 0, t: 0}
    for k, v in enumerate(others, start=1):
        index[v] = k
    N = 1 + len(others)
    s = c.size
    if N > s + 1:
        raise AssertionError(f"projection size {N} exceeds s+1 = {s + 1}")
    size = max(N, s + 1)
    M = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, size):
        M[k][k] = Fraction(-1) if k < N else Fraction(1)
    # the graph is acyclic and the source has no incoming edges, so every
    # edge lands on its own off-diagonal cell (or on (0, 0) for source -> sink)
    for (u, v), lab in abp.edges.items():
        M[index[u]][index[v]] = lab
    if (N - 1) % 2 == 1:
        M[0], M[1] = M[1], M[0]
    return {"matrix_size": size, "abp_size": N, "source_size": s, "entries": M}


def projection_determinant(result: dict) -> Poly:
    return symbolic_determinant([[entry_poly(e) for e in row] for row in result["entries"]])


# ---------------------------------------------------------------- projections

def _target_polynomial(g_name: str, circuit: Optional[Circuit] = None) -> Poly:
    if g_name == "circuit":
        if circuit is None:
            raise DomainError("g_name 'circuit' needs a circuit")
        return evaluate(circuit)
    for prefix, fn in (("det_", determinant_polynomial), ("per_", permanent_polynomial)):
        if g_name.startswith(prefix):
            try:
                n = int(g_name[len(prefix):])
            except ValueError:
                break
            if n < 1:
                break
            return fn(n)
    raise DomainError(f"unknown target {g_name!r}; use det_<n>, per_<m> or circuit")


def verify_projection(f: Poly, g_name: str, sigma: Mapping, circuit: Optional[Circuit] = None) -> bool:
    """True iff g with variables replaced per ``sigma`` expands to f.

    ``sigma`` maps variable names to variable names or rational constants;
    variables it does not mention are left as they are.
    """
    g = _target_polynomial(g_name, circuit)
    mapping = {}
    for k, v in sigma.items():
        if isinstance(v, str):
            mapping[k] = v
        elif isinstance(v, (int, Fraction)):
            mapping[k] = Fraction(v)
        else:
            raise DomainError(f"substitution for {k} must be a variable or a rational constant")
    return g.substitute(mapping) == f


# ---------------------------------------------------------------- homogenization

def homogenize(f: Poly, ell: str, n: int) -> Poly:
    """ell^n f(x / ell): each monomial of degree d gets the factor ell^(n-d)."""
    if ell in f.variables():
        raise DomainError(f"{ell} already occurs in the polynomial")
    if f.degree() > n:
        raise DomainError(f"degree {f.degree()} exceeds {n}")
    out = {}
    for m, c in f.terms.items():
        d = sum(e for _, e in m)
        mono = tuple(sorted(m + (((ell, n - d),) if n > d else ())))
        out[mono] = c
    return Poly(out)


# ---------------------------------------------------------------- skew conversion

def weakly_skew_to_skew(c: Circuit) -> Circuit:
    """Skew circuit for the same polynomial, at most twice the size.

    Every gate u is rebuilt as T(u, k) = k * value(u), where the context k is
    the gate computing the other factor of the nearest enclosing
    multiplication by a separate subcircuit (or nothing at top level).
    """
    if is_skew(c):
        return c
    if classify(c) == "general":
        raise DomainError("weakly_skew_to_skew needs a weakly-skew circuit")
    b = CircuitBuilder()
    inputs: dict = {}
    memo: dict = {}

    def inp(g: int) -> int:
        if g not in inputs:
            gate = c.gates[g]
            inputs[g] = b.var(gate.name, shared=False) if gate.op == "var" else b.const(gate.value)
        return inputs[g]

    def T(u: int, ctx: Optional[int]) -> int:
        key = (u, ctx)
        if key in memo:
            return memo[key]
        gate = c.gates[u]
        if gate.is_input:
            r = inp(u) if ctx is None else b.mul(ctx, inp(u))
        elif gate.op == "add":
            p, q = gate.args
            r = b.add(T(p, ctx), T(q, ctx))
        else:
            p, q = gate.args
            gp, gq = c.gates[p], c.gates[q]
            if gp.is_input and gq.is_input:
                r = b.mul(T(p, ctx), inp(q))
            elif gq.is_input:
                r = b.mul(T(p, ctx), inp(q))
            elif gp.is_input:
                r = b.mul(T(q, ctx), inp(p))
            else:
                sep = separate_operand(c, u)
                other = p if sep == q else q
                r = T(sep, T(other, ctx))
        memo[key] = r
        return r

    out = b.build(T(c.output, None))
    if out.size > 2 * c.size:
        raise AssertionError(f"skew circuit has size {out.size} > 2 * {c.size}")
    return out


# ---------------------------------------------------------------- coefficient extraction

def _series_of(value, q: int) -> list:
    if isinstance(value, SeriesConstant):
        return [value.coefficient(k) for k in range(q + 1)]
    return [Fraction(value)] + [Fraction(0)] * q


def coefficient_extract(c: Circuit, q: int) -> dict:
    """Circuits for f_0..f_q where the circuit computes sum_k f_k eps^k (mod eps^(q+1)).

    Each gate is replaced by q+1 gates, one per eps-power; sums act
    coefficientwise and products with a constant series become truncated
    convolutions.  All copies live in one shared circuit whose size is
    reported as ``shared_size`` and bounded by 4 (q+1)^2 size(c).
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    cls = classify(c)
    if cls == "general":
        raise DomainError("coefficient_extract needs a weakly-skew circuit")
    if not is_skew(c):
        c = weakly_skew_to_skew(c)
    b = CircuitBuilder()
    comps: list = []  # per gate: list of q+1 gate ids or None (zero)
    series: list = []  # per gate: constant series when the gate is a constant

    def add(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return b.add(x, y)

    for g in c.gates:
        if g.op == "var":
            v = b.var(g.name)
            comps.append([v] + [None] * q)
            series.append(None)
        elif g.op == "const":
            coeffs = _series_of(g.value, q)
            comps.append([b.const(x) if x else None for x in coeffs])
            series.append(coeffs)
        elif g.op == "add":
            x, y = (comps[a] for a in g.args)
            comps.append([add(x[k], y[k]) for k in range(q + 1)])
            series.append(None)
        else:
            a, bb = g.args
            ga, gb = c.gates[a], c.gates[bb]
            # the input operand plays the role of the multiplier
            inp, other = (bb, a) if gb.is_input else (a, bb)
            gi = c.gates[inp]
            out = []
            if gi.op == "var":
                v = b.var(gi.name)
                for k in range(q + 1):
                    out.append(None if comps[other][k] is None else b.mul(comps[other][k], v))
            else:
                cs = series[inp]
                for k in range(q + 1):
                    acc = None
                    for i in range(k + 1):
                        if comps[other][i] is None or not cs[k - i]:
                            continue
                        acc = add(acc, b.mul(comps[other][i], b.const(cs[k - i])))
                    out.append(acc)
            comps.append(out)
            series.append(None)
    shared_size = len(b.gates)
    circuits = []
    for k in range(q + 1):
        gid = comps[c.output][k]
        if gid is None:
            gid = b.const(0)
        circuits.append(b.build(gid))
    bound = 4 * (q + 1) ** 2 * c.size
    if shared_size > bound:
        raise AssertionError(f"extraction used {shared_size} gates > {bound}")
    return {"circuits": circuits, "shared_size": shared_size, "bound": bound, "source_size": c.size}
