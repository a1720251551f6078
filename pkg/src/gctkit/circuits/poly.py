"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..errors import DomainError

Number = Union[int, Fraction]

# reserved name for the formal series parameter
EPS = "ε"


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Immutable polynomial: a map monomial -> Fraction.

    A monomial is a sorted tuple of (variable, exponent) pairs; the empty
    tuple is the constant monomial.  Zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls({(): c})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=-1)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in m) for m in self.terms}) <= 1

    def substitute(self, mapping: Mapping[str, "Poly | Number | str"]) -> "Poly":
        """Replace variables by polynomials, numbers or other variable names."""
        images = {}
        for k, v in mapping.items():
            if isinstance(v, str):
                images[k] = Poly.var(v)
            else:
                images[k] = _lift(v)
        result = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            for v, e in m:
                base = images.get(v, Poly.var(v))
                term = term * base ** e
            result = result + term
        return result

    def coefficient_in(self, name: str, k: int) -> "Poly":
        """Coefficient of name^k, as a polynomial in the other variables."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(name, 0) == k:
                d.pop(name, None)
                out[tuple(sorted(d.items()))] = c
        return Poly(out)

    def truncate_in(self, name: str, q: int) -> "Poly":
        return Poly({m: c for m, c in self.terms.items() if dict(m).get(name, 0) <= q})

    def sorted_terms(self) -> list:
        """Terms by decreasing total degree, then by monomial."""
        return sorted(self.terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0]))

    def to_json(self) -> list:
        return [{"coeff": str(c), "monomial": {v: e for v, e in m}} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, doc: Iterable) -> "Poly":
        out = {}
        try:
            for t in doc:
                m = tuple(sorted((str(v), int(e)) for v, e in t["monomial"].items() if int(e)))
                out[m] = out.get(m, 0) + Fraction(t["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed polynomial: {exc}") from exc
        return cls(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _lift(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial")


class SeriesConstant:
    """Truncated power series c_0 + c_1 eps + ... + c_q eps^q with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            self.coeffs = (Fraction(0),)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def truncate(self, q: int) -> "SeriesConstant":
        return SeriesConstant([self.coefficient(k) for k in range(q + 1)])

    def __add__(self, other: "SeriesConstant") -> "SeriesConstant":
        q = max(self.order, other.order)
        return SeriesConstant([self.coefficient(k) + other.coefficient(k) for k in range(q + 1)])

    def mul(self, other: "SeriesConstant", q: int) -> "SeriesConstant":
        return SeriesConstant(
            [sum(self.coefficient(i) * other.coefficient(k - i) for i in range(k + 1)) for k in range(q + 1)]
        )

    def as_poly(self) -> Poly:
        return Poly({((EPS, k),) if k else (): c for k, c in enumerate(self.coeffs)})

    def __eq__(self, other):
        if not isinstance(other, SeriesConstant):
            return NotImplemented
        q = max(self.order, other.order)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(q + 1))

    def __hash__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return hash(tuple(c))

    def __repr__(self):
        return f"SeriesConstant({[str(c) for c in self.coeffs]})"


def series_coefficients(p: Poly, q: int) -> list[Poly]:
    """Split p = sum_k f_k eps^k into [f_0, ..., f_q]."""
    return [p.coefficient_in(EPS, k) for k in range(q + 1)]


def matrix_variable(i: int, j: int, n: int) -> str:
    """Name of the (i, j) entry (1-based) of a generic n x n matrix."""
    return f"x{i}{j}" if n <= 9 else f"x{i}_{j}"
