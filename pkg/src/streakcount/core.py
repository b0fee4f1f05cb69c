"""Toss sequences and the pair score of the heads-heads versus heads-tails game.

Alice scores a point for every adjacent heads-heads pair in a sequence of
coin tosses and Bob scores a point for every adjacent heads-tails pair.
The score of a sequence is Alice's total minus Bob's.  Heads are written 1
and tails 0, and positions read left to right.

A sequence whose final toss is heads is called heady, otherwise taily.
Splitting counts by the final toss is what makes every recurrence in this
package close, so the distribution type keeps the two halves separate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

TossSequence = tuple[int, ...]


class Outcome(Enum):
    ALICE_WIN = "alice"
    BOB_WIN = "bob"
    TIE = "tie"


def score(bits: Sequence[int]) -> int:
    """Count of 11 pairs minus count of 10 pairs over adjacent positions.

    A single toss, or the empty sequence, scores 0.
    """
    total = 0
    for a, b in zip(bits, bits[1:]):
        if a == 1:
            total += 1 if b == 1 else -1
    return total


def classify(bits: Sequence[int]) -> Outcome:
    """Game outcome for one sequence: a positive score is an Alice win."""
    s = score(bits)
    if s > 0:
        return Outcome.ALICE_WIN
    if s < 0:
        return Outcome.BOB_WIN
    return Outcome.TIE


def parse_sequence(text: str) -> TossSequence:
    """Parse a string of '0'/'1' characters, leftmost toss first."""
    if not text:
        raise ValueError("empty sequence literal")
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(
            f"sequence literal may contain only '0' and '1', got {sorted(bad)!r}")
    return tuple(1 if c == "1" else 0 for c in text)


def sequence_to_text(bits: Sequence[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


@dataclass(frozen=True)
class ScoreDistribution:
    """Counts of length-n sequences keyed by score, split by final toss.

    heady maps score to count over sequences ending in heads, taily over
    sequences ending in tails.  Only nonzero counts are stored, so two
    distributions compare equal exactly when they tally the same sets.
    """

    n: int
    heady: dict[int, int]
    taily: dict[int, int]

    def total(self) -> int:
        return sum(self.heady.values()) + sum(self.taily.values())

    def count(self, s: int) -> int:
        return self.heady.get(s, 0) + self.taily.get(s, 0)

    def alice_wins(self) -> int:
        return sum(v for s, v in self.heady.items() if s > 0) + sum(
            v for s, v in self.taily.items() if s > 0)

    def bob_wins(self) -> int:
        return sum(v for s, v in self.heady.items() if s < 0) + sum(
            v for s, v in self.taily.items() if s < 0)

    def ties(self) -> int:
        return self.count(0)

    def win_gap(self) -> int:
        """Bob's winning sequences minus Alice's."""
        return self.bob_wins() - self.alice_wins()


@dataclass(frozen=True)
class CloseCallTable:
    """The ten close-call buckets for one length.

    Final toss crossed with the score bands s > 1, s = 1, s = 0, s = -1,
    s < -1.  The h row holds heady counts, the t row taily counts; each
    row totals 2**(n-1).
    """

    n: int
    h1: int
    h2: int
    h3: int
    h4: int
    h5: int
    t1: int
    t2: int
    t3: int
    t4: int
    t5: int

    def heady_row(self) -> tuple[int, int, int, int, int]:
        return (self.h1, self.h2, self.h3, self.h4, self.h5)

    def taily_row(self) -> tuple[int, int, int, int, int]:
        return (self.t1, self.t2, self.t3, self.t4, self.t5)


def close_call_buckets(dist: ScoreDistribution) -> CloseCallTable:
    """Collapse a full distribution into the five score bands per row."""

    def bands(counts: dict[int, int]) -> tuple[int, int, int, int, int]:
        high = sum(v for s, v in counts.items() if s > 1)
        low = sum(v for s, v in counts.items() if s < -1)
        return (high, counts.get(1, 0), counts.get(0, 0), counts.get(-1, 0), low)

    return CloseCallTable(dist.n, *bands(dist.heady), *bands(dist.taily))
