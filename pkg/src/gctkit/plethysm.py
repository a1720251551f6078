"""Multiplicities of Schur modules in S^n(S^d C^n).

The weight multiplicity of mu in S^n(S^d V) is p(mu; n, d), the number of
ways to write x^mu as a product of n degree-d monomials.  Weyl's character
formula turns these into multiplicities through an alternating sum over S_n;
independently, the same weight function can be decomposed by peeling off
dominant weights with Kostka numbers.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from math import comb
from typing import Sequence

from . import config
from .errors import CeilingError, DomainError
from .partitions import enumerate_partitions, gl_dimension, length, pad, partition, size
from .symfun import kostka

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def degree_monomials(k: int, d: int) -> tuple:
    """Exponent vectors of degree d in k variables, lex decreasing."""
    out = []

    def rec(i, acc, left):
        if i == k - 1:
            out.append(acc + (left,))
            return
        for e in range(left, -1, -1):
            rec(i + 1, acc + (e,), left - e)

    if k == 0:
        return ((),) if d == 0 else ()
    rec(0, (), d)
    return tuple(out)


@lru_cache(maxsize=None)
def _count(rem: tuple, start: int, left: int, d: int) -> int:
    if left == 0:
        return 1 if not any(rem) else 0
    monos = degree_monomials(len(rem), d)
    total = 0
    for j in range(start, len(monos)):
        m = monos[j]
        if all(a <= b for a, b in zip(m, rem)):
            total += _count(tuple(b - a for a, b in zip(m, rem)), j, left - 1, d)
    return total


@lru_cache(maxsize=None)
def _p(weight: tuple, n: int, d: int) -> int:
    return _count(weight, 0, n, d)


def monomial_product_count(mu: Sequence[int], n: int, d: int) -> int:
    """p(mu; n, d): multisets of n degree-d monomials with exponent sum mu."""
    mu = tuple(mu)
    if any(x < 0 for x in mu):
        return 0
    if sum(mu) != n * d:
        log.warning("weight %s has degree %d, expected %d; returning 0", list(mu), sum(mu), n * d)
        return 0
    # p is symmetric in the entries of mu, and zero entries only add idle variables
    key = tuple(sorted((x for x in mu if x), reverse=True))
    if n == 0:
        return 1 if not key else 0
    return _p(key, n, d)


def _sign(w) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _perms_with_sign(n: int) -> tuple:
    return tuple((w, _sign(w)) for w in itertools.permutations(range(n)))


def plethysm_mult(pi: Sequence[int], n: int, d: int) -> int:
    """N(pi; n, d) = sum_w sgn(w) p(w(pi + rho) - rho; n, d), rho = (n, ..., 1)."""
    pi = partition(pi)
    if size(pi) != n * d:
        raise DomainError(f"{list(pi)} is not a partition of {n * d}")
    if length(pi) > n:
        log.warning("%s has more than %d parts; multiplicity is 0", list(pi), n)
        return 0
    shifted = [x + (n - i) for i, x in enumerate(pad(pi, n))]
    total = 0
    for w, s in _perms_with_sign(n):
        weight = []
        for i in range(n):
            v = shifted[w[i]] - (n - i)
            if v < 0:
                break
            weight.append(v)
        else:
            total += s * _p(tuple(sorted((x for x in weight if x), reverse=True)), n, d)
    if total < 0:
        raise DomainError(f"negative multiplicity {total} for {list(pi)}")
    return total


def decompose_sym_power(n: int, d: int) -> dict:
    """Full decomposition of S^n(S^d C^n) by dominant-weight peeling (oracle route)."""
    if n * d > config.max_plethysm_size():
        raise CeilingError(
            f"n*delta = {n * d} exceeds the plethysm ceiling {config.max_plethysm_size()}"
        )
    weights = enumerate_partitions(n * d, max_length=n)
    remaining = {mu: monomial_product_count(mu, n, d) for mu in weights}
    result = {}
    for lam in weights:
        c = remaining[lam]
        if c == 0:
            continue
        if c < 0:
            raise DomainError(f"negative remainder at {list(lam)}")
        result[lam] = c
        for mu in weights:
            if mu <= lam:
                remaining[mu] -= c * kostka(lam, mu)
    return result


def sym_power_dimension(n: int, d: int) -> int:
    """dim S^n(S^d C^n)."""
    return comb(comb(n + d - 1, d) + n - 1, n)


def decomposition_dimension(decomp: dict, n: int) -> int:
    return sum(c * gl_dimension(p, n) for p, c in decomp.items())


def contains_schur(pi: Sequence[int], n: int, d: int) -> bool:
    return plethysm_mult(pi, n, d) > 0
