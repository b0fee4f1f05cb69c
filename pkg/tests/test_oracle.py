import pytest
from hypothesis import given
from hypothesis import strategies as st

from streakcount import oracle
from streakcount.core import parse_sequence, score
from streakcount.oracle import (
    OracleCapExceeded,
    bits_to_word,
    close_call_table,
    effective_cap,
    enumerate_distribution,
    sequences_with,
    word_score,
    word_to_bits,
)


def test_base_distributions():
    one = enumerate_distribution(1)
    assert one.heady == {0: 1}
    assert one.taily == {0: 1}
    two = enumerate_distribution(2)
    assert two.heady == {1: 1, 0: 1}
    assert two.taily == {0: 1, -1: 1}
    three = enumerate_distribution(3)
    assert three.heady == {2: 1, 1: 1, 0: 1, -1: 1}
    assert three.taily == {0: 2, -1: 2}


def test_word_round_trip():
    for n in range(1, 10):
        for word in range(1 << n):
            assert bits_to_word(word_to_bits(word, n)) == word


@given(st.integers(1, 30))
def test_word_score_matches_pair_walk(n):
    # spot-check the popcount shortcut against the plain definition
    for word in (0, 1, (1 << n) - 1, (1 << n) // 3, (1 << n) - 2):
        word %= 1 << n
        assert word_score(word, n) == score(word_to_bits(word, n))


@given(st.integers(1, 14), st.data())
def test_word_score_matches_random_words(n, data):
    word = data.draw(st.integers(0, (1 << n) - 1))
    assert word_score(word, n) == score(word_to_bits(word, n))


def test_chunking_does_not_change_the_census():
    default = enumerate_distribution(10)
    assert enumerate_distribution(10, chunk=7) == default
    assert enumerate_distribution(10, chunk=1 << 12) == default


def test_close_call_table_rows():
    assert close_call_table(2).heady_row() == (0, 1, 1, 0, 0)
    assert close_call_table(2).taily_row() == (0, 0, 1, 1, 0)
    assert close_call_table(3).heady_row() == (1, 1, 1, 1, 0)
    assert close_call_table(3).taily_row() == (0, 0, 2, 2, 0)
    assert close_call_table(8).h2 == 23


def test_win_gap_small_lengths():
    assert [oracle.win_gap(n) for n in range(2, 11)] == [0, 1, 2, 3, 7, 14, 24, 47, 93]


def test_sequences_with_orders_by_packed_word():
    found = sequences_with(4, -1, "taily")
    assert found == [
        parse_sequence("1000"),
        parse_sequence("0100"),
        parse_sequence("0010"),
    ]
    assert sequences_with(2, 1, "heady") == [(1, 1)]
    assert sequences_with(2, 1, "taily") == []


def test_sequences_with_rejects_unknown_mode():
    with pytest.raises(ValueError, match="mode"):
        sequences_with(3, 0, "sideways")


def test_cap_default_and_overrides(monkeypatch):
    monkeypatch.delenv(oracle.CAP_ENV_VAR, raising=False)
    assert effective_cap() == oracle.DEFAULT_CAP
    assert effective_cap(30) == 30
    monkeypatch.setenv(oracle.CAP_ENV_VAR, "10")
    assert effective_cap() == 10
    assert effective_cap(12) == 12
    monkeypatch.setenv(oracle.CAP_ENV_VAR, "not-a-number")
    with pytest.raises(ValueError):
        effective_cap()


def test_cap_guards_every_entry_point(monkeypatch):
    monkeypatch.delenv(oracle.CAP_ENV_VAR, raising=False)
    with pytest.raises(OracleCapExceeded, match="STREAKCOUNT_ORACLE_CAP"):
        enumerate_distribution(oracle.DEFAULT_CAP + 1)
    monkeypatch.setenv(oracle.CAP_ENV_VAR, "6")
    with pytest.raises(OracleCapExceeded):
        close_call_table(7)
    with pytest.raises(OracleCapExceeded):
        oracle.win_gap(7)
    with pytest.raises(OracleCapExceeded):
        sequences_with(7, 0, "heady")
    # an explicit cap argument beats the environment
    assert enumerate_distribution(7, cap=7).total() == 128


def test_rejects_nonpositive_length():
    with pytest.raises(ValueError):
        enumerate_distribution(0)
