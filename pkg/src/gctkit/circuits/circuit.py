"""Arithmetic circuits: gates, evaluation, structural classes, JSON format.

A circuit is a topologically ordered gate list.  Input vertices are
variables or constants (rationals or truncated series); every other vertex
is a binary + or x gate.  Size is the number of vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Union

from ..errors import DomainError
from .poly import Poly, SeriesConstant

FORMAT = "gctkit-circuit"
FORMAT_VERSION = 1

CLASSES = ("formula", "skew", "weakly_skew", "general")


@dataclass(frozen=True)
class Gate:
    op: str  # "var", "const", "add", "mul"
    name: Optional[str] = None
    value: Union[Fraction, SeriesConstant, None] = None
    args: tuple = ()

    @property
    def is_input(self) -> bool:
        return self.op in ("var", "const")


class Circuit:
    """Immutable circuit with a single output (the unique sink)."""

    def __init__(self, gates, output: int):
        gates = tuple(gates)
        if not gates:
            raise DomainError("a circuit needs at least one gate")
        if not 0 <= output < len(gates):
            raise DomainError(f"output {output} out of range")
        outdeg = [0] * len(gates)
        for i, g in enumerate(gates):
            if g.op in ("var", "const"):
                if g.args:
                    raise DomainError(f"input gate {i} has arguments")
                if g.op == "var" and not g.name:
                    raise DomainError(f"variable gate {i} has no name")
                if g.op == "const" and not isinstance(g.value, (Fraction, SeriesConstant)):
                    raise DomainError(f"constant gate {i} has no exact value")
            elif g.op in ("add", "mul"):
                if len(g.args) != 2:
                    raise DomainError(f"gate {i} needs exactly two arguments")
                for a in g.args:
                    if not 0 <= a < i:
                        raise DomainError(f"gate {i} refers to {a}; gates must be topologically ordered")
                    outdeg[a] += 1
            else:
                raise DomainError(f"unknown gate kind {g.op!r}")
        sinks = [i for i, d in enumerate(outdeg) if d == 0]
        if sinks != [output]:
            raise DomainError(f"output must be the unique sink; sinks are {sinks}")
        self.gates = gates
        self.output = output
        self.outdeg = tuple(outdeg)

    @property
    def size(self) -> int:
        return len(self.gates)

    def __eq__(self, other):
        return isinstance(other, Circuit) and self.gates == other.gates and self.output == other.output

    def __hash__(self):
        return hash((self.gates, self.output))

    @cached_property
    def consumers(self) -> tuple:
        cons = [[] for _ in self.gates]
        for i, g in enumerate(self.gates):
            for a in g.args:
                cons[a].append(i)
        return tuple(tuple(c) for c in cons)

    @cached_property
    def ancestors(self) -> tuple:
        anc = []
        for i, g in enumerate(self.gates):
            s = {i}
            for a in g.args:
                s |= anc[a]
            anc.append(frozenset(s))
        return tuple(anc)

    def has_series_constants(self) -> bool:
        return any(isinstance(g.value, SeriesConstant) for g in self.gates)

    def variables(self) -> list:
        return sorted({g.name for g in self.gates if g.op == "var"})


class CircuitBuilder:
    """Append gates freely; :meth:`build` prunes unused gates and renumbers."""

    def __init__(self):
        self.gates: list[Gate] = []
        self._vars: dict = {}

    def _add(self, gate: Gate) -> int:
        self.gates.append(gate)
        return len(self.gates) - 1

    def var(self, name: str, shared: bool = True) -> int:
        if shared and name in self._vars:
            return self._vars[name]
        i = self._add(Gate("var", name=name))
        if shared:
            self._vars[name] = i
        return i

    def const(self, value) -> int:
        if not isinstance(value, SeriesConstant):
            value = Fraction(value)
        return self._add(Gate("const", value=value))

    def add(self, a: int, b: int) -> int:
        return self._add(Gate("add", args=(a, b)))

    def mul(self, a: int, b: int) -> int:
        return self._add(Gate("mul", args=(a, b)))

    def sum(self, items: list) -> int:
        acc = items[0]
        for x in items[1:]:
            acc = self.add(acc, x)
        return acc

    def product(self, items: list) -> int:
        acc = items[0]
        for x in items[1:]:
            acc = self.mul(acc, x)
        return acc

    def copy_from(self, c: Circuit) -> dict:
        """Append all gates of ``c``; returns the old -> new id map."""
        ids = {}
        for i, g in enumerate(c.gates):
            if g.op == "var":
                ids[i] = self.var(g.name, shared=False)
            elif g.op == "const":
                ids[i] = self.const(g.value)
            else:
                a, b = (ids[x] for x in g.args)
                ids[i] = self.add(a, b) if g.op == "add" else self.mul(a, b)
        return ids

    def build(self, output: int) -> Circuit:
        keep = set()
        stack = [output]
        while stack:
            i = stack.pop()
            if i in keep:
                continue
            keep.add(i)
            stack.extend(self.gates[i].args)
        order = sorted(keep)
        renum = {old: new for new, old in enumerate(order)}
        gates = []
        for old in order:
            g = self.gates[old]
            if g.args:
                g = Gate(g.op, args=tuple(renum[a] for a in g.args))
            gates.append(g)
        return Circuit(gates, renum[output])


def gate_polys(c: Circuit) -> list[Poly]:
    """Polynomial at every gate; series constants appear as polynomials in eps."""
    vals: list[Poly] = []
    for g in c.gates:
        if g.op == "var":
            vals.append(Poly.var(g.name))
        elif g.op == "const":
            if isinstance(g.value, SeriesConstant):
                vals.append(g.value.as_poly())
            else:
                vals.append(Poly.const(g.value))
        elif g.op == "add":
            vals.append(vals[g.args[0]] + vals[g.args[1]])
        else:
            vals.append(vals[g.args[0]] * vals[g.args[1]])
    return vals


def evaluate(c: Circuit) -> Poly:
    """Expanded polynomial computed by the circuit.

    For weakly-skew circuits without series constants the degree never
    exceeds the size; this is checked.
    """
    f = gate_polys(c)[c.output]
    if not c.has_series_constants() and is_weakly_skew(c) and f.degree() > c.size:
        raise DomainError(f"weakly-skew circuit of size {c.size} has degree {f.degree()}")
    return f


def is_formula(c: Circuit) -> bool:
    """Underlying graph is a tree: every vertex feeds at most one edge."""
    return all(d <= 1 for d in c.outdeg)


def is_skew(c: Circuit) -> bool:
    """Every multiplication has an input vertex as an operand."""
    return all(
        any(c.gates[a].is_input for a in g.args) for g in c.gates if g.op == "mul"
    )


def is_separate(c: Circuit, b: int, g: int) -> bool:
    """Whether operand ``b`` of gate ``g`` is computed by a separate subcircuit.

    Input vertices always count as separate.  A computation gate is separate
    when its only outgoing edge goes to ``g`` and no non-input vertex of its
    subcircuit feeds anything outside that subcircuit, so cutting the edge
    (b, g) detaches the subcircuit up to shared input vertices.
    """
    if c.gates[b].is_input:
        return True
    if c.outdeg[b] != 1 or c.consumers[b] != (g,):
        return False
    anc = c.ancestors[b]
    for v in anc:
        if v == b or c.gates[v].is_input:
            continue
        if any(u not in anc for u in c.consumers[v]):
            return False
    return True


def separate_operand(c: Circuit, g: int) -> Optional[int]:
    """A separate operand of multiplication ``g`` (right one preferred), or None."""
    a, b = c.gates[g].args
    if is_separate(c, b, g):
        return b
    if is_separate(c, a, g):
        return a
    return None


def is_weakly_skew(c: Circuit) -> bool:
    return all(separate_operand(c, i) is not None for i, g in enumerate(c.gates) if g.op == "mul")


def classify(c: Circuit) -> str:
    """Most specific of formula, skew, weakly_skew, general that applies.

    Formulas are checked first; a formula need not be skew (a product of two
    sums is a tree), but both formulas and skew circuits are weakly skew.
    """
    if is_formula(c):
        return "formula"
    if is_skew(c):
        return "skew"
    if is_weakly_skew(c):
        return "weakly_skew"
    return "general"


def _value_json(v):
    if isinstance(v, SeriesConstant):
        return {"series": [str(x) for x in v.coeffs]}
    return {"value": str(v)}


def to_json(c: Circuit) -> dict:
    gates = []
    for g in c.gates:
        if g.op == "var":
            gates.append({"op": "var", "name": g.name})
        elif g.op == "const":
            gates.append({"op": "const", **_value_json(g.value)})
        else:
            gates.append({"op": g.op, "args": list(g.args)})
    return {"format": FORMAT, "version": FORMAT_VERSION, "gates": gates, "output": c.output}


def from_json(doc) -> Circuit:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise DomainError("not a circuit document")
    if doc.get("version") != FORMAT_VERSION:
        raise DomainError(f"unsupported circuit format version {doc.get('version')!r}")
    gates = []
    try:
        for g in doc["gates"]:
            op = g["op"]
            if op == "var":
                gates.append(Gate("var", name=str(g["name"])))
            elif op == "const":
                if "series" in g:
                    gates.append(Gate("const", value=SeriesConstant(Fraction(x) for x in g["series"])))
                else:
                    gates.append(Gate("const", value=Fraction(g["value"])))
            elif op in ("add", "mul"):
                gates.append(Gate(op, args=tuple(int(a) for a in g["args"])))
            else:
                raise DomainError(f"unknown gate kind {op!r}")
        output = int(doc["output"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed circuit document: {exc}") from exc
    return Circuit(gates, output)


def dumps(c: Circuit) -> str:
    return json.dumps(to_json(c), sort_keys=True)


def loads(text: str) -> Circuit:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"circuit file is not JSON: {exc}") from exc
    return from_json(doc)
