"""Circuit generators for exhaustive and randomised testing."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .circuit import Circuit, CircuitBuilder, Gate
from .poly import Poly, SeriesConstant


def enumerate_circuits(max_size: int, inputs: Sequence = ("x", "y", "z")) -> Iterator[Circuit]:
    """Every circuit with at most ``max_size`` vertices, up to commuting operands.

    Inputs come first (a multiset drawn from ``inputs``; strings are
    variables, numbers constants), followed by binary gates with argument
    pairs i <= j.  Only circuits whose last gate is the unique sink are kept.
    """
    inputs = list(inputs)

    def input_gate(v):
        return Gate("var", name=v) if isinstance(v, str) else Gate("const", value=Fraction(v))

    def multisets(k, start):
        if k == 0:
            yield ()
            return
        for i in range(start, len(inputs)):
            for rest in multisets(k - 1, i):
                yield (i,) + rest

    def extend(gates, used, remaining):
        n = len(gates)
        if gates[-1].args and all(used[:-1]):
            yield Circuit(gates, n - 1)
        # each new gate lowers the number of unused gates by at most one,
        # and only the final sink may stay unused
        unused = used.count(False)
        if remaining == 0 or unused > remaining + 1:
            return
        for j in range(n):
            for i in range(j + 1):
                for op in ("add", "mul"):
                    u = used + [False]
                    u[i] = u[j] = True
                    yield from extend(gates + [Gate(op, args=(i, j))], u, remaining - 1)

    for k in range(1, max_size + 1):
        for ms in multisets(k, 0):
            gates = [input_gate(inputs[i]) for i in ms]
            if k == 1:
                yield Circuit(gates, 0)
            yield from extend(gates, [False] * k, max_size - k)


def random_circuit(
    rng: random.Random,
    n_gates: int,
    variables: Sequence[str] = ("x", "y", "z"),
    constants: Sequence = (Fraction(-1), Fraction(2), Fraction(1, 2)),
    p_input: float = 0.3,
) -> Circuit:
    """Random DAG; unused gates are pruned so the output is the unique sink."""
    b = CircuitBuilder()
    ids = [b.var(rng.choice(list(variables)), shared=False)]
    for _ in range(n_gates - 1):
        if rng.random() < p_input:
            if constants and rng.random() < 0.3:
                ids.append(b.const(rng.choice(list(constants))))
            else:
                ids.append(b.var(rng.choice(list(variables)), shared=False))
        else:
            a, c = rng.choice(ids), rng.choice(ids)
            ids.append(b.add(a, c) if rng.random() < 0.5 else b.mul(a, c))
    return b.build(ids[-1])


def random_skew_circuit(
    rng: random.Random,
    n_ops: int,
    variables: Sequence[str] = ("x", "y", "z"),
    max_order: int = 3,
) -> Circuit:
    """Random skew circuit whose constants are truncated series in eps."""
    b = CircuitBuilder()

    def series():
        k = rng.randint(0, max_order)
        return SeriesConstant([Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2])) for _ in range(k + 1)])

    def leaf():
        if rng.random() < 0.4:
            return b.const(series())
        return b.var(rng.choice(list(variables)), shared=rng.random() < 0.5)

    comp = [leaf()]
    for _ in range(n_ops):
        a = rng.choice(comp)
        if rng.random() < 0.5:
            g = b.add(a, rng.choice(comp) if rng.random() < 0.5 else leaf())
        else:
            g = b.mul(a, leaf()) if rng.random() < 0.5 else b.mul(leaf(), a)
        comp.append(g)
    return b.build(comp[-1])


def random_poly(rng: random.Random, variables: Sequence[str] = ("x", "y", "z"), max_degree: int = 4, terms: int = 5) -> Poly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        d = {}
        for _ in range(rng.randint(0, max_degree)):
            v = rng.choice(list(variables))
            d[v] = d.get(v, 0) + 1
        out[tuple(sorted(d.items()))] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(out)
