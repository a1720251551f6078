"""Division-free symmetric-function primitives in the monomial basis.

These feed the two oracle routes (Frobenius expansion, dominant-weight
peeling) and deliberately share nothing with Murnaghan-Nakayama or the
alternating sums they check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .partitions import enumerate_partitions, part, partition


@lru_cache(maxsize=None)
def _kostka(shape: tuple, content: tuple) -> int:
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    if sum(shape) != sum(content):
        return 0
    # the cells holding the largest letter form a horizontal strip
    total = 0
    for inner in _horizontal_strip_removals(shape, last):
        total += _kostka(inner, rest)
    return total


def _horizontal_strip_removals(shape: tuple, k: int):
    """Partitions inner with shape/inner a horizontal strip of size k."""
    n = len(shape)
    out = []

    def rec(i, acc, left):
        if i == n:
            if left == 0:
                out.append(partition(acc))
            return
        # inner_i in [shape_{i+1}, shape_i]
        lo = part(shape, i + 1)
        for v in range(shape[i], lo - 1, -1):
            take = shape[i] - v
            if take > left:
                break
            rec(i + 1, acc + (v,), left - take)

    rec(0, (), k)
    return out


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content.

    The content may be any weak composition; Kostka numbers are invariant
    under permuting it, so it is sorted first.
    """
    c = tuple(sorted((x for x in content if x > 0), reverse=True))
    return _kostka(partition(shape), c)


@lru_cache(maxsize=None)
def power_sum_monomial_coefficient(cycle_type: tuple, exponents: tuple) -> int:
    """Coefficient of x^exponents in p_{cycle_type} = prod_i (x_1^{t_i} + x_2^{t_i} + ...)."""
    if not cycle_type:
        return 1 if not any(exponents) else 0
    first, rest = cycle_type[0], cycle_type[1:]
    total = 0
    for j, e in enumerate(exponents):
        if e >= first:
            reduced = exponents[:j] + (e - first,) + exponents[j + 1:]
            total += power_sum_monomial_coefficient(rest, tuple(sorted(reduced, reverse=True)))
    return total


def schur_from_monomial(coeffs: Mapping[tuple, int], n: int) -> dict:
    """Rewrite a symmetric polynomial of degree n (given on partition-indexed
    monomials) in the Schur basis by peeling the lex-largest monomial.
    """
    remaining = {p: coeffs.get(p, 0) for p in enumerate_partitions(n)}
    result = {}
    for lam in enumerate_partitions(n):
        c = remaining[lam]
        if c == 0:
            continue
        result[lam] = c
        for mu in remaining:
            if mu <= lam:
                remaining[mu] -= c * kostka(lam, mu)
    return result
