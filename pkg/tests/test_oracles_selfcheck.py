"""The brute-force oracles agree with textbook values before we lean on them."""

from oracles import character_table_bruteforce, ssyt_count


def test_s3_table_matches_textbook():
    chi = character_table_bruteforce(3)
    assert [chi[(2, 1)][t] for t in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    assert [chi[(1, 1, 1)][t] for t in [(1, 1, 1), (2, 1), (3,)]] == [1, -1, 1]


def test_kostka_small():
    assert ssyt_count((2, 1), (1, 1, 1)) == 2
    assert ssyt_count((3, 2), (2, 2, 1)) == 2
    assert ssyt_count((2, 2), (3, 1)) == 0
