import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from streakcount.core import parse_sequence, score, sequence_to_text
from streakcount.counting import binom
from streakcount.oracle import word_to_bits
from streakcount.signatures import (
    complement,
    compositions,
    generate_sequences,
    min_length,
    min_length_sequence,
    sequence_count,
    signature_of,
    signature_score,
)

marks = st.text(alphabet="+-", min_size=1, max_size=6)
heady_marks = marks
taily_marks = marks.filter(lambda s: not s.endswith("+"))


def all_signatures(max_marks):
    for length in range(1, max_marks + 1):
        for combo in itertools.product("+-", repeat=length):
            yield "".join(combo)


def test_signature_of_examples():
    assert signature_of(parse_sequence("00111001")) == "++-"
    assert signature_of(parse_sequence("01010011")) == "--+"
    assert signature_of((0, 0, 0)) == ""
    assert signature_of((0, 0, 1)) == ""
    assert signature_of((1,)) == ""


@given(st.lists(st.integers(0, 1), min_size=1, max_size=30))
def test_signature_score_matches_sequence_score(bits):
    seq = tuple(bits)
    assert signature_score(signature_of(seq)) == score(seq)


def test_complement_swaps_marks():
    assert complement("++-") == "--+"
    assert complement("+-+-+") == "-+-+-"
    assert complement("") == ""


@given(marks)
def test_complement_is_an_involution_negating_the_score(sig):
    assert complement(complement(sig)) == sig
    assert signature_score(complement(sig)) == -signature_score(sig)


def test_min_length_spot_values():
    assert min_length("++-", "heady") == 5
    assert min_length("--+", "heady") == 6
    assert min_length("+-+-+", "heady") == 8
    assert min_length("-+-+-", "heady") == 9
    assert min_length("-", "taily") == 2
    assert min_length("-", "heady") == 3
    assert min_length("+", "heady") == 2


def test_min_length_depends_only_on_mark_counts_and_mode():
    seen = {}
    for sig in all_signatures(8):
        key = (sig.count("+"), sig.count("-"))
        length = min_length(sig, "heady")
        assert seen.setdefault(("heady", key), length) == length
        if not sig.endswith("+"):
            length = min_length(sig, "taily")
            assert seen.setdefault(("taily", key), length) == length


def test_min_length_sequence_realizes_the_signature():
    assert min_length_sequence("--+", "heady").bits == (1, 0, 1, 0, 1, 1)
    assert min_length_sequence("++-", "heady").bits == (1, 1, 1, 0, 1)
    assert min_length_sequence("-", "taily").bits == (1, 0)
    for sig in all_signatures(7):
        for mode in ("heady", "taily"):
            if mode == "taily" and sig.endswith("+"):
                continue
            mls = min_length_sequence(sig, mode)
            assert mls.length == min_length(sig, mode) == len(mls.bits)
            assert signature_of(mls.bits) == sig
            assert mls.bits[-1] == (1 if mode == "heady" else 0)


def test_min_length_sequence_is_unique_at_its_length():
    # below the minimum nothing realizes the signature; at it, one thing does
    for sig in ("++-", "--+", "+", "--"):
        for mode in ("heady", "taily"):
            if mode == "taily" and sig.endswith("+"):
                continue
            length = min_length(sig, mode)
            wanted_last = 1 if mode == "heady" else 0
            for n in (length - 1, length):
                hits = [
                    word_to_bits(w, n)
                    for w in range(1 << n)
                    if signature_of(word_to_bits(w, n)) == sig
                    and word_to_bits(w, n)[-1] == wanted_last
                ]
                assert len(hits) == (0 if n < length else 1)
                if n == length:
                    assert hits[0] == min_length_sequence(sig, mode).bits


def test_signature_validation():
    with pytest.raises(ValueError, match="only '\\+' and '-'"):
        min_length("+x-")
    with pytest.raises(ValueError, match="mode"):
        min_length("+", "sideways")
    with pytest.raises(ValueError, match="null signature"):
        min_length("")
    with pytest.raises(ValueError, match="ending in '\\+'"):
        min_length("-+", "taily")
    with pytest.raises(ValueError, match="null signature"):
        list(generate_sequences("", 4, "taily"))


def test_compositions_order_and_census():
    assert list(compositions(3, 2)) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    fives = list(compositions(5, 3))
    assert len(fives) == 21
    assert len(set(fives)) == 21
    assert all(sum(c) == 5 for c in fives)
    assert [c[0] for c in fives] == sorted((c[0] for c in fives), reverse=True)
    with pytest.raises(ValueError, match="nonnegative"):
        list(compositions(-1, 2))
    with pytest.raises(ValueError, match="positive"):
        list(compositions(3, 0))


@given(st.integers(0, 8), st.integers(1, 5))
def test_compositions_count_is_stars_and_bars(total, bins):
    found = list(compositions(total, bins))
    assert len(found) == binom(total + bins - 1, bins - 1)
    assert len(set(found)) == len(found)


def test_generate_short_signature():
    assert [sequence_to_text(b) for b in generate_sequences("+", 2, "heady")] == ["11"]
    assert sequence_count("+", 2, "heady") == 1


def test_generate_walks_compositions_in_order():
    outputs = [sequence_to_text(b) for b in generate_sequences("++-", 8, "heady")]
    assert outputs == ["00011101", "00111001", "01110001", "11100001"]
    assert sequence_count("++-", 8, "heady") == 4


def test_generate_rejects_short_lengths_eagerly():
    with pytest.raises(ValueError, match="minimum feasible length is 5"):
        generate_sequences("++-", 4, "heady")
    with pytest.raises(ValueError, match="minimum feasible length"):
        sequence_count("--+", 5, "heady")


def test_fixed_leading_one_drops_the_front_slot():
    free = list(generate_sequences("++-", 9, "heady"))
    pinned = list(generate_sequences("++-", 9, "heady", fixed_leading_one=True))
    assert [b for b in free if b[0] == 1] == pinned
    assert sequence_count("++-", 9, "heady", fixed_leading_one=True) == len(pinned)
    with pytest.raises(ValueError, match="fixing the leading head"):
        generate_sequences("+", 3, "heady", fixed_leading_one=True)


@given(heady_marks, st.integers(0, 4))
def test_generated_heady_sequences_are_sound_and_distinct(sig, spare):
    n = min_length(sig, "heady") + spare
    outputs = list(generate_sequences(sig, n, "heady"))
    assert len(outputs) == sequence_count(sig, n, "heady")
    assert len(set(outputs)) == len(outputs)
    for bits in outputs:
        assert len(bits) == n
        assert bits[-1] == 1
        assert signature_of(bits) == sig


@given(taily_marks, st.integers(0, 4))
def test_generated_taily_sequences_are_sound_and_distinct(sig, spare):
    n = min_length(sig, "taily") + spare
    outputs = list(generate_sequences(sig, n, "taily"))
    assert len(outputs) == sequence_count(sig, n, "taily")
    assert len(set(outputs)) == len(outputs)
    for bits in outputs:
        assert len(bits) == n
        assert bits[-1] == 0
        assert signature_of(bits) == sig


def test_generation_is_complete_against_enumeration():
    for n in range(1, 9):
        by_group = {}
        for word in range(1 << n):
            bits = word_to_bits(word, n)
            sig = signature_of(bits)
            if not sig:
                continue
            mode = "heady" if bits[-1] == 1 else "taily"
            by_group.setdefault((sig, mode), set()).add(bits)
        for (sig, mode), expected in by_group.items():
            assert set(generate_sequences(sig, n, mode)) == expected
