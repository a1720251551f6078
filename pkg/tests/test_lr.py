import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import character_table_bruteforce, lr_bruteforce, ssyt_count

from gctkit.lr import lr_coefficient, multi_lr, rectangle_duality_check, shapes_between
from gctkit.partitions import enumerate_partitions, irrep_dimension, rectangle_complement

TABLES = {n: character_table_bruteforce(n) for n in range(1, 7)}


def test_multi_lr_examples():
    assert multi_lr((3, 1), [(3, 1)]) == 1
    assert multi_lr((2, 1), [(1,), (1,), (1,)]) == 2 == irrep_dimension((2, 1))
    assert multi_lr((2, 2), [(2,), (2,)]) == 1


def test_multi_lr_empty_and_mismatch():
    assert multi_lr((), []) == 1
    assert multi_lr((2,), []) == 0
    assert multi_lr((2, 1), [(2,), (2,)]) == 0


def test_lr_basic_values():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), ()) == 1
    assert lr_coefficient((2, 1), (3,), ()) == 0


@pytest.mark.parametrize("total", range(1, 7))
def test_lr_against_restriction_oracle(total):
    big = TABLES[total]
    for lam in enumerate_partitions(total):
        for a in range(1, total):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    expected = lr_bruteforce(big, TABLES, lam, mu, nu)
                    assert lr_coefficient(lam, mu, nu) == expected, (lam, mu, nu)


@pytest.mark.parametrize("total", range(2, 9))
def test_lr_symmetry(total):
    for lam in enumerate_partitions(total):
        for a in range(1, total):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


@pytest.mark.parametrize("total", range(2, 7))
def test_lr_induction_dimension_identity(total):
    # dim Ind(mu x nu) = binom(total, a) dim mu dim nu
    from math import comb

    for a in range(1, total):
        for mu in enumerate_partitions(a):
            for nu in enumerate_partitions(total - a):
                lhs = sum(lr_coefficient(lam, mu, nu) * irrep_dimension(lam) for lam in enumerate_partitions(total))
                assert lhs == comb(total, a) * irrep_dimension(mu) * irrep_dimension(nu)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_multi_lr_of_rows_is_kostka(content):
    # iterated Pieri: multiplicity of s_lam in h_c1 h_c2 ... is K_{lam, c}
    total = sum(content)
    for lam in enumerate_partitions(total):
        assert multi_lr(lam, [(c,) for c in content]) == ssyt_count(lam, content)


def test_multi_lr_factor_order_irrelevant():
    factors = [(2, 1), (1,), (2,)]
    for lam in enumerate_partitions(6):
        vals = {multi_lr(lam, list(p)) for p in itertools.permutations(factors)}
        assert len(vals) == 1


def test_shapes_between():
    assert shapes_between((1,), (2, 2), 3) == [(2, 1)]
    assert shapes_between((), (2, 2), 2) == [(2,), (1, 1)]


def test_rectangle_duality_examples():
    assert rectangle_duality_check((2, 1), (1,), 2, 2) == {"coefficient": 1, "is_complementary_pair": True}
    assert rectangle_duality_check((2, 2), (), 2, 2) == {"coefficient": 1, "is_complementary_pair": True}


def test_rectangle_duality_row_pair_in_square():
    # c^{(2,2)}_{(2),(2)} = 1 by Pieri, and (2) is its own rotated complement in 2x2
    assert lr_coefficient((2, 2), (2,), (2,)) == 1
    assert rectangle_duality_check((2,), (2,), 2, 2) == {"coefficient": 1, "is_complementary_pair": True}


@pytest.mark.parametrize("w,h", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_rectangle_duality_is_iff(w, h):
    area = w * h
    for a in range(area + 1):
        for alpha in enumerate_partitions(a, max_length=h, max_part=w):
            for beta in enumerate_partitions(area - a, max_length=h, max_part=w):
                r = rectangle_duality_check(alpha, beta, w, h)
                assert r["coefficient"] in (0, 1)
                assert bool(r["coefficient"]) == r["is_complementary_pair"]
                assert r["is_complementary_pair"] == (rectangle_complement(alpha, w, h) == beta)
