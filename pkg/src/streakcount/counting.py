"""Exact closed-form counts of toss sequences by score and final toss.

All arithmetic is integer and exact.  The binomial convention C(a, b) = 0
for a < 0, b < 0 or b > a makes every summation bound self-truncating, so
the formulas return 0 outside their supported score ranges without any
separate casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import ScoreDistribution


def binom(a: int, b: int) -> int:
    """C(a, b) with out-of-range argument pairs mapped to 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _require_length(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise ValueError(f"sequence length must be at least {minimum}, got {n}")


def heady_count(s: int, n: int) -> int:
    """Number of length-n sequences with score s that end in heads.

    Summed over the number k of heads-tails pairs; a sequence scoring s
    with k such pairs has k + s heads-heads pairs, C(2k + s, k) orderings
    of its scoring pairs and C(n - s - 1 - 2k, k) placements of the spare
    tails.
    """
    _require_length(n)
    ns = n - s - 1
    return sum(binom(2 * k + s, k) * binom(ns - 2 * k, k)
               for k in range(max(0, -s), ns // 3 + 1))


def taily_count(s: int, n: int) -> int:
    """Number of length-n sequences with score s that end in tails.

    The all-tails sequence is the lone taily sequence with no scoring
    pair, hence the s == 0 indicator outside the sum.  Sequences inside
    the sum have k >= 1 heads-tails pairs, the last of which must close
    the sequence, leaving C(2k + s - 1, k - 1) orderings.
    """
    _require_length(n)
    base = 1 if s == 0 else 0
    ns = n - s
    return base + sum(binom(2 * k + s - 1, k - 1) * binom(ns - 2 * k, k)
                      for k in range(max(1, -s), ns // 3 + 1))


def heady_support(n: int) -> tuple[int, int]:
    """Inclusive score range where heady counts are nonzero."""
    _require_length(n)
    return -((n - 1) // 2), n - 1


def taily_support(n: int) -> tuple[int, int]:
    """Inclusive score range where taily counts are nonzero."""
    _require_length(n)
    return -(n // 2), max(0, n - 3)


def score_support(n: int) -> tuple[int, int]:
    """Inclusive score range spanning both families."""
    _require_length(n)
    return -(n // 2), n - 1


def closed_distribution(n: int) -> ScoreDistribution:
    """Full score distribution assembled cell by cell from the closed forms."""
    _require_length(n)
    heady: dict[int, int] = {}
    lo, hi = heady_support(n)
    for s in range(lo, hi + 1):
        v = heady_count(s, n)
        if v:
            heady[s] = v
    taily: dict[int, int] = {}
    lo, hi = taily_support(n)
    for s in range(lo, hi + 1):
        v = taily_count(s, n)
        if v:
            taily[s] = v
    return ScoreDistribution(n, heady, taily)


def heady_close_calls(n: int) -> int:
    """Direct census of score-one heady sequences.

    Grouped by the number k of heads runs: such a sequence has k
    heads-heads pairs, k - 1 heads-tails pairs, C(2k - 1, k) orderings of
    those pairs and C(n - 2k, k - 1) placements of the spare tails.  The
    derivation is separate from heady_count(1, n) and the two are held
    equal by the verification suites.
    """
    _require_length(n, 2)
    return sum(binom(2 * k - 1, k) * binom(n - 2 * k, k - 1)
               for k in range(1, (n + 1) // 3 + 1))


def win_gap(n: int) -> int:
    """Bob-winning sequences minus Alice-winning sequences at length n.

    Computed through the single cell the whole gap collapses onto, the
    score minus-one heady count.  win_odds recomputes the same number by
    brute summation over every score.  Defined for n >= 2.
    """
    _require_length(n, 2)
    return heady_count(-1, n)


def win_gap_step(n: int) -> int:
    """Growth of the win gap from length n - 1 to n.  Defined for n >= 3.

    Equals the score-one heady count one length back.
    """
    _require_length(n, 3)
    return heady_count(1, n - 1)


def decimal_ratio(num: int, den: int, digits: int) -> str:
    """Exact decimal rendering of num / den, rounded half to even.

    Integer long division end to end; no floating point touches the
    value, so the rendering is faithful for arbitrarily large operands.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    sign = "-" if num < 0 else ""
    scaled, rem = divmod(abs(num) * 10 ** digits, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2 == 1):
        scaled += 1
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class WinOdds:
    """Win, loss and tie counts for one length, with share renderings.

    Shares are exact decimal strings of count / 2**n rounded half to even
    in the final digit.
    """

    n: int
    alice: int
    bob: int
    ties: int
    gap: int
    digits: int
    alice_share: str
    bob_share: str
    tie_share: str
    gap_share: str

    @property
    def total(self) -> int:
        return 1 << self.n


def win_odds(n: int, digits: int = 6) -> WinOdds:
    """Aggregate wins, losses and ties at length n by direct summation.

    Sums closed-form counts over every supported score, deliberately not
    presupposing the single-cell identity that win_gap uses.
    """
    _require_length(n)
    lo, hi = score_support(n)
    alice = bob = ties = 0
    for s in range(lo, hi + 1):
        c = heady_count(s, n) + taily_count(s, n)
        if s > 0:
            alice += c
        elif s < 0:
            bob += c
        else:
            ties = c
    gap = bob - alice
    den = 1 << n
    return WinOdds(
        n=n,
        alice=alice,
        bob=bob,
        ties=ties,
        gap=gap,
        digits=digits,
        alice_share=decimal_ratio(alice, den, digits),
        bob_share=decimal_ratio(bob, den, digits),
        tie_share=decimal_ratio(ties, den, digits),
        gap_share=decimal_ratio(gap, den, digits),
    )
