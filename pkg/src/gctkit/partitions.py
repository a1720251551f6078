"""Integer partitions, cycle types and the GL/SL weight dictionary.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros; ``()`` is the partition of 0.  Functions accept any
integer sequence and normalise it through :func:`partition`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Optional, Sequence

from .errors import DomainError

Partition = tuple


def partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise DomainError(f"partition parts must be positive: {list(parts)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"partition must be weakly decreasing: {list(parts)}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the canonical text form ``"[3,1]"`` (a JSON array)."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"not a JSON array: {text!r}") from exc
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise DomainError(f"not an integer array: {text!r}")
    return partition(value)


def format_partition(p: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def size(p: Sequence[int]) -> int:
    return sum(p)


def length(p: Sequence[int]) -> int:
    return sum(1 for x in p if x > 0)


def part(p: Sequence[int], i: int) -> int:
    """Zero-padded 0-based access."""
    return p[i] if i < len(p) else 0


def enumerate_partitions(
    n: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> list[Partition]:
    """All partitions of ``n`` within the bounds, in decreasing lexicographic order."""
    if n < 0:
        raise DomainError("size must be nonnegative")
    return list(_partitions(n, n if max_part is None else max_part,
                            n if max_length is None else max_length))


def _partitions(n: int, max_part: int, max_length: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_length <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # remaining parts cannot make up the rest
        if first * max_length < n:
            break
        for rest in _partitions(n - first, first, max_length - 1):
            yield (first,) + rest


def conjugate(p: Sequence[int]) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` sits inside that of ``outer``."""
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def interlaces(p: Sequence[int], q: Sequence[int]) -> bool:
    """``p -> q`` in the Pieri sense: p1 >= q1 >= p2 >= q2 >= ... >= 0."""
    n = max(len(p), len(q)) + 1
    for i in range(n):
        if not part(p, i) >= part(q, i) >= part(p, i + 1):
            return False
    return True


def interlacing_lifts(q: Sequence[int], total: int) -> list[Partition]:
    """All partitions p of ``total`` with ``p -> q``, decreasing lex order.

    Row 1 is unbounded above by q; row i+1 ranges over [q_{i+1}, q_i]; at most
    len(q) + 1 rows.
    """
    q = partition(q)
    if total < size(q):
        return []
    if not q:
        return [(total,)] if total > 0 else [()]
    floor = [sum(q[i:]) for i in range(len(q))] + [0, 0]
    out = []

    def rec(i, tail, rem):
        if i == len(q) + 1:
            if rem >= q[0]:
                out.append(partition((rem,) + tail))
            return
        for v in range(q[i - 1], part(q, i) - 1, -1):
            # first row still needs q_1, later rows at least their lower bounds
            if rem - v >= q[0] + floor[i + 1]:
                rec(i + 1, tail + (v,), rem - v)

    rec(1, (), total)
    return sorted(out, reverse=True)


def count_in_rectangle(b: int, rows: int, cols: int) -> int:
    """P(b; rows x cols): partitions of b with at most ``rows`` parts, each <= ``cols``.

    Both the number of parts and the part bound act symmetrically, so the
    count does not depend on which side of the rectangle is called the rows.
    """
    if b < 0:
        return 0
    return _rect_count(b, rows, cols)


@lru_cache(maxsize=None)
def _rect_count(b: int, rows: int, cols: int) -> int:
    if b == 0:
        return 1
    if rows <= 0 or cols <= 0 or b > rows * cols:
        return 0
    # largest part equal to cols, or all parts < cols
    return _rect_count(b - cols, rows - 1, cols) + _rect_count(b, rows, cols - 1)


def rectangle(width: int, height: int) -> Partition:
    """The partition ``width^height`` (``width`` repeated ``height`` times)."""
    return partition((width,) * height) if width > 0 else ()


def rectangle_complement(p: Sequence[int], width: int, height: int) -> Optional[Partition]:
    """180-degree rotated complement of ``p`` inside ``width^height``, or None."""
    p = partition(p)
    if not contains(rectangle(width, height), p):
        return None
    return partition(tuple(width - part(p, height - 1 - i) for i in range(height)))


@dataclass(frozen=True)
class SLWeight:
    """Dominant SL_M weight in fundamental-weight coordinates."""

    coeffs: tuple
    rank: int

    def __post_init__(self):
        if len(self.coeffs) != self.rank - 1:
            raise DomainError(f"SL_{self.rank} weight needs {self.rank - 1} coordinates")
        if any(c < 0 for c in self.coeffs):
            raise DomainError("dominant weights have nonnegative coordinates")

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def sl_weight_of(p: Sequence[int], rank: int) -> SLWeight:
    """Highest weight of S_p C^M restricted to SL_M: sum_j (p_j - p_{j+1}) w_j."""
    p = partition(p)
    if len(p) > rank:
        raise DomainError(f"partition {list(p)} has more than {rank} parts")
    return SLWeight(tuple(part(p, j) - part(p, j + 1) for j in range(rank - 1)), rank)


def min_partition_of(weight: SLWeight) -> Partition:
    """Smallest partition whose Schur module restricts to the given SL weight."""
    c = weight.coeffs
    return partition(tuple(sum(c[j:]) for j in range(len(c))))


def strip_full_columns(p: Sequence[int], rank: int) -> Partition:
    """Remove the columns of height ``rank`` (determinant twists)."""
    p = partition(p)
    k = part(p, rank - 1)
    return partition(tuple(x - k for x in p))


def add_full_columns(p: Sequence[int], rank: int, count: int) -> Partition:
    p = partition(p)
    if len(p) > rank:
        raise DomainError("partition longer than rank")
    return partition(tuple(part(p, i) + count for i in range(rank)))


def cycle_multiplicities(t: Sequence[int]) -> Counter:
    return Counter(x for x in t if x > 0)


def z_value(t: Sequence[int]) -> int:
    """Centraliser order z_t = prod_i i^{m_i} m_i!."""
    return prod(i ** m * factorial(m) for i, m in cycle_multiplicities(t).items())


def class_size(t: Sequence[int]) -> int:
    """Number of permutations of cycle type ``t`` in S_{|t|}."""
    t = partition(sorted(t, reverse=True))
    return factorial(size(t)) // z_value(t)


def sign_of_cycle_type(t: Sequence[int]) -> int:
    return -1 if (size(t) - length(t)) % 2 else 1


def hooks(p: Sequence[int]) -> list[int]:
    p = partition(p)
    pc = conjugate(p)
    return [p[i] - j + pc[j] - i - 1 for i in range(len(p)) for j in range(p[i])]


def irrep_dimension(p: Sequence[int]) -> int:
    """dim [p] by the hook-length formula."""
    p = partition(p)
    return factorial(size(p)) // prod(hooks(p))


def gl_dimension(p: Sequence[int], n: int) -> int:
    """dim S_p(C^n) by the hook-content formula (0 if len(p) > n)."""
    p = partition(p)
    if len(p) > n:
        return 0
    num = prod(n + j - i for i in range(len(p)) for j in range(p[i]))
    return num // prod(hooks(p))


def cycle_type_of(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line 0-based notation."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def pad(p: Sequence[int], n: int) -> tuple:
    if len(p) > n:
        raise DomainError(f"{list(p)} has more than {n} parts")
    return tuple(p) + (0,) * (n - len(p))


def add_partitions(p: Sequence[int], q: Sequence[int]) -> Partition:
    n = max(len(p), len(q))
    return partition(tuple(part(p, i) + part(q, i) for i in range(n)))


def bar(p: Sequence[int]) -> Partition:
    """The partition with its first part removed."""
    return partition(tuple(p[1:]))


def dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += part(p, i)
        sq += part(q, i)
        if sp < sq:
            return False
    return True
