"""Irreducible characters of the symmetric group.

The working route is the Murnaghan-Nakayama rule, implemented with beta
numbers: stripping a border ribbon of length r from a shape is the same as
sliding one bead of its beta-set down by r, and the ribbon's height is the
number of beads jumped over.  Two independent checks sit next to it: the
Frobenius expansion of power sums in the Schur basis, and a literal
transcription of Stanley's formula for rectangular shapes.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

import numpy as np

from . import cache, config
from .errors import CeilingError, DomainError
from .parallel import ordered_map
from .partitions import (
    cycle_type_of,
    enumerate_partitions,
    format_partition,
    partition,
    rectangle,
    size,
)
from .symfun import power_sum_monomial_coefficient, schur_from_monomial

log = logging.getLogger(__name__)


def _ribbon_removals(shape: tuple, r: int):
    """Yield (smaller shape, height) for every border ribbon of length r."""
    L = len(shape)
    beta = [shape[i] + L - 1 - i for i in range(L)]
    occupied = set(beta)
    for i, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted([x for x in beta if x != b] + [target], reverse=True)
        new_shape = tuple(new_beta[j] - (L - 1 - j) for j in range(L))
        yield partition(new_shape), height


@lru_cache(maxsize=None)
def _mn(shape: tuple, cycles: tuple) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    total = 0
    for smaller, height in _ribbon_removals(shape, r):
        val = _mn(smaller, rest)
        if val:
            total += -val if height % 2 else val
    return total


def mn_character(p: Sequence[int], t: Sequence[int]) -> int:
    """chi^t_p by Murnaghan-Nakayama, removing the longest cycle first."""
    p = partition(p)
    t = tuple(sorted((x for x in t if x > 0), reverse=True))
    if size(p) != size(t):
        raise DomainError(f"size mismatch: {list(p)} vs cycle type {list(t)}")
    return _mn(p, t)


@dataclass
class CharacterTable:
    n: int
    partitions: list
    classes: list
    values: dict = field(repr=False)

    def __call__(self, p, t) -> int:
        return self.values[(tuple(p), tuple(t))]

    def row(self, p) -> list:
        return [self.values[(tuple(p), t)] for t in self.classes]

    def to_payload(self) -> dict:
        return {
            "classes": [format_partition(t) for t in self.classes],
            "rows": {format_partition(p): self.row(p) for p in self.partitions},
        }


def _row(args):
    p, classes = args
    return [_mn(p, t) for t in classes]


_tables: dict = {}


def _table(n: int, jobs: int = 1) -> CharacterTable:
    if n in _tables:
        return _tables[n]
    parts = enumerate_partitions(n)
    payload = cache.load("chartable", n)
    if payload is not None:
        values = {}
        for p in parts:
            for t, v in zip(parts, payload["rows"][format_partition(p)]):
                values[(p, t)] = v
        table = CharacterTable(n, parts, parts, values)
    else:
        rows = ordered_map(_row, [(p, tuple(parts)) for p in parts], jobs=jobs, chunksize=1)
        values = {(p, t): v for p, row in zip(parts, rows) for t, v in zip(parts, row)}
        table = CharacterTable(n, parts, parts, values)
        cache.store("chartable", n, table.to_payload())
    _tables[n] = table
    return table


def character_table(n: int, jobs: int = 1) -> CharacterTable:
    """Full character table of S_n, rows and columns in decreasing lex order."""
    if n < 1:
        raise DomainError("n must be positive")
    if n > config.max_table_n():
        raise CeilingError(
            f"character table for n={n} exceeds the ceiling {config.max_table_n()} "
            "(set GCTKIT_MAX_TABLE_N to raise it)"
        )
    return _table(n, jobs)


def character(p: Sequence[int], t: Sequence[int]) -> int:
    """Table lookup when a table is within the ceiling, else direct MN."""
    p = partition(p)
    t = tuple(sorted(t, reverse=True))
    n = size(p)
    if n != size(t):
        raise DomainError("size mismatch")
    if 1 <= n <= config.max_table_n():
        return _table(n)(p, t)
    return _mn(p, t)


def frobenius_expand(t: Sequence[int]) -> dict:
    """Schur coefficients of the power sum p_t, i.e. the column chi^t_*.

    Works in |t| variables: the monomial coefficients of p_t are counted
    directly, then Schur polynomials (Kostka expansions) are peeled off from
    the lex-largest monomial down.  No division occurs.
    """
    t = tuple(sorted((x for x in t if x > 0), reverse=True))
    n = size(t)
    mono = {mu: power_sum_monomial_coefficient(t, mu) for mu in enumerate_partitions(n)}
    return schur_from_monomial(mono, n)


def _hook_product(delta: int, n: int) -> int:
    return prod(i + j - 1 for i in range(1, delta + 1) for j in range(1, n + 1))


def _num_cycles(perm) -> int:
    return len(cycle_type_of(perm))


def stanley_rectangular_character(delta: int, n: int, w: Sequence[int]) -> Fraction:
    """Literal evaluation of the transcribed rectangular character formula.

    (-1)^{delta n} / prod_{i<=delta, j<=n} (i+j-1) * sum_{uv=w} delta^{k(u)} (-n)^{k(v)},
    k = number of cycles.  The result is returned as written; compare it with
    :func:`mn_character` of ``rectangle(delta, n)`` rather than trusting it.
    """
    N = delta * n
    w = tuple(w)
    if sorted(w) != list(range(N)):
        raise DomainError(f"w must be a permutation of 0..{N - 1}")
    if N > config.max_stanley_size():
        raise CeilingError(f"Stanley sum has {N}! terms; ceiling is size {config.max_stanley_size()}")
    total = 0
    for u in itertools.permutations(range(N)):
        uinv = [0] * N
        for i, x in enumerate(u):
            uinv[x] = i
        v = tuple(uinv[w[i]] for i in range(N))
        total += delta ** _num_cycles(u) * (-n) ** _num_cycles(v)
    return Fraction((-1) ** N * total, _hook_product(delta, n))


def _stanley_all(delta: int, n: int):
    """Stanley sums for every w in S_N at once (vectorised over u)."""
    N = delta * n
    perms = np.array(list(itertools.permutations(range(N))), dtype=np.int64).reshape(-1, N)
    radix = N ** np.arange(N, dtype=np.int64)
    lookup = np.full(N ** N if N else 1, -1, dtype=np.int64)
    codes = perms @ radix if N else np.zeros(1, dtype=np.int64)
    lookup[codes] = np.arange(len(perms))
    kappa = np.array([_num_cycles(p) for p in perms.tolist()], dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    du = delta ** kappa
    nv = (-n) ** kappa
    sums = np.empty(len(perms), dtype=object)
    for wi, w in enumerate(perms):
        v_codes = inv[:, w] @ radix if N else codes
        sums[wi] = int((du * nv[lookup[v_codes]]).sum())
    return perms, sums


def stanley_audit(max_size: int = 6) -> list[dict]:
    """Evaluate the transcribed formula for every w in S_{delta n}, delta n <= max_size.

    Returns one record per (delta, n, cycle type), listing how many
    permutations were evaluated, the distinct values obtained, the MN value
    and whether they match.  The character of the transposed rectangle is
    reported alongside for diagnosis only.  Ordered by (delta*n, delta, cycle type desc).
    """
    if max_size > config.max_stanley_size():
        raise CeilingError(f"audit size {max_size} exceeds ceiling {config.max_stanley_size()}")
    records = []
    for N in range(1, max_size + 1):
        for delta in range(1, N + 1):
            if N % delta:
                continue
            n = N // delta
            perms, sums = _stanley_all(delta, n)
            denom = _hook_product(delta, n)
            shape = rectangle(delta, n)
            by_class: dict = {}
            for w, s in zip(perms.tolist(), sums):
                ct = cycle_type_of(w)
                by_class.setdefault(ct, []).append(Fraction((-1) ** N * s, denom))
            for ct in sorted(by_class, reverse=True):
                vals = sorted(set(by_class[ct]))
                mn = mn_character(shape, ct)
                mn_t = mn_character(rectangle(n, delta), ct)
                records.append({
                    "delta": delta,
                    "n": n,
                    "shape": list(shape),
                    "cycle_type": list(ct),
                    "w_count": len(by_class[ct]),
                    "formula_values": [str(v) for v in vals],
                    "mn_value": mn,
                    "match": len(vals) == 1 and vals[0] == mn,
                    "mn_value_transposed_shape": mn_t,
                    "matches_transposed_shape": len(vals) == 1 and vals[0] == mn_t,
                })
    return records
