"""Littlewood-Richardson coefficients by LR-tableau enumeration.

A tableau of skew shape outer/inner is filled one row at a time, top to
bottom.  Rows are weakly increasing, so a row is determined by how many of
each letter it holds; the reverse reading word (right to left, top to
bottom) being a lattice word then reduces to a per-row count condition,
which is what prunes the search.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import (
    contains,
    part,
    partition,
    rectangle,
    rectangle_complement,
    size,
)


def _row_fillings(cells, above, max_letter, counts, content):
    """Weakly increasing fillings of one row segment.

    ``cells`` is the column range of the row, ``above`` maps column -> the
    letter in the row above (0 where the cell above belongs to the inner
    shape or is absent).  Yields per-letter count tuples of the row.
    """
    lo, hi = cells
    width = hi - lo
    k = len(content)

    def rec(col, prev, row_counts):
        if col == hi:
            yield tuple(row_counts)
            return
        start = max(prev, above.get(col, 0) + 1)
        for letter in range(start, max_letter + 1):
            idx = letter - 1
            if counts[idx] + row_counts[idx] >= content[idx]:
                continue
            row_counts[idx] += 1
            yield from rec(col + 1, letter, row_counts)
            row_counts[idx] -= 1

    if width == 0:
        yield (0,) * k
        return
    yield from rec(lo, 1, [0] * k)


@lru_cache(maxsize=None)
def _lr(outer: tuple, inner: tuple, content: tuple) -> int:
    k = len(content)
    rows = len(outer)

    def rec(r, counts, prev_row):
        # prev_row: dict column -> letter for row r-1
        if r == rows:
            return 1 if list(counts) == list(content) else 0
        lo, hi = part(inner, r), outer[r]
        above = {c: v for c, v in prev_row.items() if c >= lo}
        # entries in row r (0-based) are at most r+1
        max_letter = min(k, r + 1)
        total = 0
        for row_counts in _row_fillings((lo, hi), above, max_letter, counts, content):
            # lattice: reading this row right to left adds letter j before j-1
            ok = True
            for j in range(1, k):
                if counts[j] + row_counts[j] > counts[j - 1]:
                    ok = False
                    break
            if not ok:
                continue
            new_counts = tuple(a + b for a, b in zip(counts, row_counts))
            row = {}
            col = lo
            for letter, c in enumerate(row_counts, start=1):
                for _ in range(c):
                    row[col] = letter
                    col += 1
            total += rec(r + 1, new_counts, row)
        return total

    return rec(0, (0,) * k, {})


def lr_coefficient(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> int:
    """c^outer_{inner, content}: LR tableaux of shape outer/inner with the given content."""
    outer, inner, content = partition(outer), partition(inner), partition(content)
    if size(outer) != size(inner) + size(content) or not contains(outer, inner):
        return 0
    if not contains(outer, content):
        return 0
    if not content:
        return 1
    return _lr(outer, inner, content)


def shapes_between(inner: Sequence[int], outer: Sequence[int], total: int) -> list:
    """Partitions lam with inner <= lam <= outer and |lam| = total, lex decreasing."""
    inner, outer = partition(inner), partition(outer)
    n = len(outer)
    out = []

    def rec(i, acc, left):
        if i == n:
            if left == 0:
                out.append(partition(acc))
            return
        hi = outer[i] if i == 0 else min(outer[i], acc[-1])
        lo = part(inner, i)
        rest_cap = sum(outer[i + 1:])
        for v in range(min(hi, left), lo - 1, -1):
            if left - v > rest_cap:
                break
            rec(i + 1, acc + (v,), left - v)

    rec(0, (), total)
    return out


@lru_cache(maxsize=None)
def _multi(target: tuple, current: tuple, factors: tuple) -> int:
    if not factors:
        return 1 if current == target else 0
    first, rest = factors[0], factors[1:]
    step = size(first)
    total = 0
    for lam in shapes_between(current, target, size(current) + step):
        c = lr_coefficient(lam, current, first)
        if c:
            total += c * _multi(target, lam, rest)
    return total


def multi_lr(target: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """Multiplicity of S_target in S_{a_1} (x) ... (x) S_{a_l}, folding left to right."""
    target = partition(target)
    factors = tuple(partition(f) for f in factors)
    if size(target) != sum(size(f) for f in factors):
        return 0
    return _multi(target, (), factors)


def rectangle_duality_check(alpha: Sequence[int], beta: Sequence[int], width: int, height: int) -> dict:
    """c^{width^height}_{alpha, beta} next to the rotated-complement test.

    The two are expected to agree exactly: the coefficient is 1 when beta is
    the complement of alpha in the rectangle and 0 otherwise.
    """
    alpha, beta = partition(alpha), partition(beta)
    rect = rectangle(width, height)
    coefficient = lr_coefficient(rect, alpha, beta)
    comp = rectangle_complement(alpha, width, height)
    return {"coefficient": coefficient, "is_complementary_pair": comp is not None and comp == beta}
