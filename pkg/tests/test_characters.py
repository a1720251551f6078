import math

import pytest
from fractions import Fraction

from oracles import character_table_bruteforce

from gctkit.characters import (
    character,
    character_table,
    frobenius_expand,
    mn_character,
    stanley_audit,
    stanley_rectangular_character,
)
from gctkit.errors import CeilingError, DomainError
from gctkit.partitions import (
    class_size,
    conjugate,
    enumerate_partitions,
    irrep_dimension,
    rectangle,
    sign_of_cycle_type,
)


def test_mn_examples():
    for t in enumerate_partitions(5):
        assert mn_character((5,), t) == 1
        assert mn_character((1,) * 5, t) == (-1) ** (5 - len(t))
    assert mn_character((2, 1), (3,)) == -1


def test_size_mismatch():
    with pytest.raises(DomainError):
        mn_character((2, 1), (2,))


def test_table_examples():
    assert character_table(1).row((1,)) == [1]
    t3 = character_table(3)
    assert t3.classes == [(3,), (2, 1), (1, 1, 1)]
    # rows over classes (1^3), (2,1), (3)
    assert t3.row((3,))[::-1] == [1, 1, 1]
    assert t3.row((2, 1))[::-1] == [2, 0, -1]
    assert t3.row((1, 1, 1))[::-1] == [1, -1, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_mn_matches_tabloid_oracle(n):
    oracle = character_table_bruteforce(n)
    table = character_table(n)
    for p in enumerate_partitions(n):
        for t in enumerate_partitions(n):
            assert table(p, t) == oracle[p][t], (p, t)


@pytest.mark.parametrize("n", range(1, 8))
def test_mn_matches_frobenius(n):
    table = character_table(n)
    for t in enumerate_partitions(n):
        col = frobenius_expand(t)
        for p in enumerate_partitions(n):
            assert col.get(p, 0) == table(p, t)


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    table = character_table(n)
    parts = enumerate_partitions(n)
    for i, s in enumerate(parts):
        for t in parts[i:]:
            dot = sum(table(p, s) * table(p, t) for p in parts)
            expected = math.factorial(n) // class_size(s) if s == t else 0
            assert dot == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_conjugation_twists_by_sign(n):
    table = character_table(n)
    for p in enumerate_partitions(n):
        for t in enumerate_partitions(n):
            assert table(conjugate(p), t) == sign_of_cycle_type(t) * table(p, t)


@pytest.mark.parametrize("n", range(1, 11))
def test_identity_column_is_dimension(n):
    table = character_table(n)
    for p in enumerate_partitions(n):
        assert table(p, (1,) * n) == irrep_dimension(p)


def test_character_convenience_uses_table():
    assert character((3, 2), (2, 2, 1)) == mn_character((3, 2), (2, 2, 1))


def test_table_ceiling(monkeypatch):
    monkeypatch.setenv("GCTKIT_MAX_TABLE_N", "5")
    with pytest.raises(CeilingError):
        character_table(6)


def test_table_cache_round_trip(tmp_path, monkeypatch):
    from gctkit import cache
    from gctkit import characters as ch

    monkeypatch.setenv("GCTKIT_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(ch, "_tables", {})
    first = character_table(5)
    assert any(p.name.startswith("chartable") for p in cache.files())
    monkeypatch.setattr(ch, "_tables", {})
    second = character_table(5)  # now read back from disk
    assert first.values == second.values


def test_stanley_small_examples():
    # delta = 1, n = 2 on S_2; w = identity then the transposition
    assert stanley_rectangular_character(1, 2, (0, 1)) == 1
    assert stanley_rectangular_character(1, 2, (1, 0)) == 1
    assert mn_character(rectangle(1, 2), (2,)) == -1
    assert stanley_rectangular_character(2, 2, (0, 1, 2, 3)) == Fraction(irrep_dimension((2, 2)))


def test_stanley_rejects_non_permutation():
    with pytest.raises(DomainError):
        stanley_rectangular_character(1, 2, (0, 0))


def test_stanley_audit_reports_known_mismatch():
    records = stanley_audit(4)
    bad = [r for r in records if r["delta"] == 1 and r["n"] == 2 and not r["match"]]
    assert bad, "the delta=1, n=2 transposition mismatch must be reported"
    assert stanley_audit(4) == records


def test_stanley_audit_matches_literal_evaluation():
    from oracles import representative

    for r in stanley_audit(4):
        # the formula is a class function, so one value per cycle type
        assert len(r["formula_values"]) == 1
        w = representative(tuple(r["cycle_type"]))
        literal = stanley_rectangular_character(r["delta"], r["n"], w)
        assert Fraction(r["formula_values"][0]) == literal
        assert r["match"] == (literal == r["mn_value"])


def test_stanley_ceiling(monkeypatch):
    monkeypatch.setenv("GCTKIT_MAX_STANLEY_SIZE", "3")
    with pytest.raises(CeilingError):
        stanley_audit(4)
