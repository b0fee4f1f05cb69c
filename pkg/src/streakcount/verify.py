"""Invariant suites that play the computation paths against each other.

Every count in this package is reachable along several independent routes:
closed forms, the appended-toss dynamic program, in-place term updates,
constructive generation and raw enumeration.  Each suite here pins two or
more routes together, or pins one route to a structural identity it never
used in its own derivation.  A suite stops at its first broken check and
reports what broke; nothing in this module prints or exits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import core, counting, oracle, recurrence, signatures


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    checks: int
    detail: str = ""


class _CheckFailed(Exception):
    pass


class _Recorder:
    def __init__(self) -> None:
        self.checks = 0

    def expect(self, cond: bool, detail: str) -> None:
        self.checks += 1
        if not cond:
            raise _CheckFailed(detail)


def _run(name: str, body: Callable[[_Recorder], None]) -> SuiteResult:
    rec = _Recorder()
    try:
        body(rec)
    except _CheckFailed as stop:
        return SuiteResult(name, False, rec.checks, str(stop))
    return SuiteResult(name, True, rec.checks)


# hand-tallied tables for the three shortest lengths, keyed by n
_BASE = {
    1: ({0: 1}, {0: 1}),
    2: ({1: 1, 0: 1}, {0: 1, -1: 1}),
    3: ({2: 1, 1: 1, 0: 1, -1: 1}, {0: 2, -1: 2}),
}


def _base_tables(rec: _Recorder) -> None:
    for n, (heady, taily) in _BASE.items():
        want = core.ScoreDistribution(n, dict(heady), dict(taily))
        for label, build in (
            ("closed", counting.closed_distribution),
            ("dp", recurrence.dp_distribution),
            ("incremental", recurrence.incremental_distribution),
        ):
            rec.expect(build(n) == want, f"{label} table wrong at n={n}")
    odds = counting.win_odds(2)
    rec.expect((odds.alice, odds.bob, odds.ties, odds.gap) == (1, 1, 2, 0),
               f"win tallies wrong at n=2: {odds}")
    odds = counting.win_odds(3)
    rec.expect((odds.alice, odds.bob, odds.ties, odds.gap) == (2, 3, 3, 1),
               f"win tallies wrong at n=3: {odds}")
    rec.expect(counting.taily_count(-1, 4) == 3,
               "score -1 taily count at n=4 should be 3")


def _normalization(rec: _Recorder, max_n: int) -> None:
    # each final-toss family covers exactly half the 2**n sequences
    for n in range(1, max_n + 1):
        dist = counting.closed_distribution(n)
        half = 1 << (n - 1)
        rec.expect(sum(dist.heady.values()) == half,
                   f"heady counts at n={n} do not sum to 2**{n - 1}")
        rec.expect(sum(dist.taily.values()) == half,
                   f"taily counts at n={n} do not sum to 2**{n - 1}")


def _support_bounds(rec: _Recorder, max_n: int) -> None:
    for n in range(1, max_n + 1):
        lo, hi = counting.heady_support(n)
        rec.expect(counting.heady_count(lo, n) > 0,
                   f"heady support low edge empty: s={lo} n={n}")
        rec.expect(counting.heady_count(hi, n) == 1,
                   f"all-heads cell should be 1: n={n}")
        for s in (lo - 2, lo - 1, hi + 1, hi + 2):
            rec.expect(counting.heady_count(s, n) == 0,
                       f"heady count leaked outside support: s={s} n={n}")
        lo, hi = counting.taily_support(n)
        rec.expect(counting.taily_count(lo, n) > 0,
                   f"taily support low edge empty: s={lo} n={n}")
        rec.expect(counting.taily_count(hi, n) > 0,
                   f"taily support high edge empty: s={hi} n={n}")
        for s in (lo - 2, lo - 1, hi + 1, hi + 2):
            rec.expect(counting.taily_count(s, n) == 0,
                       f"taily count leaked outside support: s={s} n={n}")


def _heady_recursion(rec: _Recorder, max_n: int) -> None:
    # an appended head extends a heady sequence (score up one) or a taily one
    for n in range(1, max_n):
        lo, hi = counting.score_support(n + 1)
        for s in range(lo - 1, hi + 2):
            want = counting.heady_count(s - 1, n) + counting.taily_count(s, n)
            rec.expect(counting.heady_count(s, n + 1) == want,
                       f"heady recursion broken at s={s} n={n + 1}")


def _taily_recursion(rec: _Recorder, max_n: int) -> None:
    # an appended tail extends a taily sequence or drops a heady one by one
    for n in range(1, max_n):
        lo, hi = counting.score_support(n + 1)
        for s in range(lo - 1, hi + 2):
            want = counting.taily_count(s, n) + counting.heady_count(s + 1, n)
            rec.expect(counting.taily_count(s, n + 1) == want,
                       f"taily recursion broken at s={s} n={n + 1}")


def _close_call_census(rec: _Recorder, max_n: int) -> None:
    # two unrelated derivations of the score-one heady count must agree
    for n in range(2, max_n + 1):
        rec.expect(counting.heady_close_calls(n) == counting.heady_count(1, n),
                   f"close-call census disagrees with the closed form at n={n}")
    for n in range(3, max_n + 1):
        rec.expect(counting.win_gap_step(n) == counting.heady_close_calls(n - 1),
                   f"gap step is not the previous close-call count at n={n}")


def _gap_definition(rec: _Recorder, max_n: int) -> None:
    # the one-cell gap formula versus brute summation over every score
    for n in range(2, max_n + 1):
        gap = counting.win_gap(n)
        rec.expect(counting.win_odds(n, digits=4).gap == gap,
                   f"summed gap disagrees with the one-cell gap at n={n}")
        rec.expect(counting.closed_distribution(n).win_gap() == gap,
                   f"distribution gap disagrees with the one-cell gap at n={n}")


def _gap_recursion(rec: _Recorder, max_n: int) -> None:
    for n in range(2, max_n):
        want = counting.win_gap(n) + counting.win_gap_step(n + 1)
        rec.expect(counting.win_gap(n + 1) == want,
                   f"gap recursion broken at n={n + 1}")
        rec.expect(counting.heady_count(-1, n + 1)
                   == counting.heady_count(1, n) + counting.heady_count(-1, n),
                   f"close-call cell recursion broken at n={n + 1}")
        # the step also equals the whole gap minus the close-call imbalance
        dist = counting.closed_distribution(n)
        table = core.close_call_buckets(dist)
        rec.expect(
            counting.win_gap_step(n + 1) == dist.win_gap() - (table.h4 - table.h2),
            f"step-from-imbalance identity broken at n={n + 1}")


def _gap_growth(rec: _Recorder, max_n: int) -> None:
    rec.expect(counting.win_gap(2) == 0, "the gap at n=2 should be 0")
    running = 0
    for n in range(3, max_n + 1):
        running += counting.win_gap_step(n)
        rec.expect(counting.win_gap(n) == running,
                   f"gap does not telescope over its steps at n={n}")
        rec.expect(counting.win_gap(n) > counting.win_gap(n - 1),
                   f"gap should grow strictly from n=3 on, flat at n={n}")
    for n in range(2, max_n + 1):
        rec.expect(counting.heady_close_calls(n) >= 1,
                   f"there is always a score-one heady sequence, none at n={n}")


def _term_shape_ok(vec: recurrence.TermVector) -> bool:
    # every live term must equal its defining product of two binomials,
    # and the number of live terms must match the summation bound
    s = vec.score
    if vec.kind == "heady":
        budget = vec.n - s - 1

        def product(k: int) -> int:
            return counting.binom(2 * k + s, k) * counting.binom(budget - 2 * k, k)
    else:
        budget = vec.n - s

        def product(k: int) -> int:
            return counting.binom(2 * k + s - 1, k - 1) * counting.binom(
                budget - 2 * k, k)

    if len(vec.terms) != max(0, budget // 3 - vec.k_start + 1):
        return False
    return all(t == product(vec.k_start + i) for i, t in enumerate(vec.terms))


def _term_updates(rec: _Recorder, max_n: int) -> None:
    # walk single cells from birth, one length at a time, against the
    # closed form; exercises deep positive and negative scores alike
    lo = -min(20, max_n // 2)
    hi = min(20, max_n - 1)
    for s in range(lo, hi + 1):
        if recurrence.first_heady_n(s) <= max_n:
            vec = recurrence.heady_terms_start(s)
            rec.expect(recurrence.terms_value(vec) == counting.heady_count(s, vec.n),
                       f"heady cell wrong at birth: s={s} n={vec.n}")
            while vec.n < max_n:
                vec = recurrence.extend_heady_terms(vec)
                rec.expect(recurrence.terms_value(vec) == counting.heady_count(s, vec.n),
                           f"heady term update drifted: s={s} n={vec.n}")
                rec.expect(_term_shape_ok(vec),
                           f"heady terms lost their binomial shape: s={s} n={vec.n}")
        if recurrence.first_taily_n(s) <= max_n:
            vec = recurrence.taily_terms_start(s)
            rec.expect(recurrence.terms_value(vec) == counting.taily_count(s, vec.n),
                       f"taily cell wrong at birth: s={s} n={vec.n}")
            while vec.n < max_n:
                vec = recurrence.extend_taily_terms(vec)
                rec.expect(recurrence.terms_value(vec) == counting.taily_count(s, vec.n),
                           f"taily term update drifted: s={s} n={vec.n}")
                rec.expect(_term_shape_ok(vec),
                           f"taily terms lost their binomial shape: s={s} n={vec.n}")


def _method_agreement(rec: _Recorder, max_n: int) -> None:
    sweep_dp = recurrence.dp_sweep(max_n)
    sweep_terms = recurrence.table_sweep(max_n)
    for n, dp_dist, term_dist in zip(range(1, max_n + 1), sweep_dp, sweep_terms):
        closed = counting.closed_distribution(n)
        rec.expect(dp_dist == closed, f"dp table disagrees with closed forms at n={n}")
        rec.expect(term_dist == closed,
                   f"term-update table disagrees with closed forms at n={n}")
    for dist in recurrence.table_sweep(min(max_n, 12), mode="heady"):
        closed = counting.closed_distribution(dist.n)
        rec.expect(dist.heady == closed.heady and not dist.taily,
                   f"heady-only sweep wrong at n={dist.n}")
    for dist in recurrence.table_sweep(min(max_n, 12), mode="taily"):
        closed = counting.closed_distribution(dist.n)
        rec.expect(dist.taily == closed.taily and not dist.heady,
                   f"taily-only sweep wrong at n={dist.n}")


def _all_signatures(max_marks: int) -> Iterator[str]:
    for length in range(1, max_marks + 1):
        for marks in itertools.product("+-", repeat=length):
            yield "".join(marks)


def _rejected(call: Callable[[], object]) -> bool:
    try:
        call()
    except ValueError:
        return True
    return False


def _min_length_formula(rec: _Recorder) -> None:
    for sig in _all_signatures(8):
        modes = ["heady"] if sig.endswith("+") else ["heady", "taily"]
        for mode in modes:
            mls = signatures.min_length_sequence(sig, mode)
            rec.expect(mls.length == signatures.min_length(sig, mode),
                       f"built length disagrees with the formula: {sig!r} {mode}")
            rec.expect(signatures.signature_of(mls.bits) == sig,
                       f"shortest sequence carries the wrong marks: {sig!r} {mode}")
            rec.expect(mls.bits[-1] == (1 if mode == "heady" else 0),
                       f"shortest sequence ends on the wrong toss: {sig!r} {mode}")
            built = list(signatures.generate_sequences(sig, mls.length, mode))
            rec.expect(built == [mls.bits],
                       f"generation at the minimum length is not unique: {sig!r} {mode}")
            if mls.length > 1:
                rec.expect(
                    _rejected(lambda: list(
                        signatures.generate_sequences(sig, mls.length - 1, mode))),
                    f"generation below the minimum length succeeded: {sig!r} {mode}")
        if sig.endswith("+"):
            rec.expect(_rejected(lambda: signatures.min_length(sig, "taily")),
                       f"taily mode accepted a '+'-ending signature: {sig!r}")


def _insertion_census(rec: _Recorder, max_n: int) -> None:
    # summing the generator's closed-form counts over every realizable
    # signature must rebuild the whole distribution, score by score
    for n in range(1, max_n + 1):
        heady: dict[int, int] = {0: 1}     # the lone mark-free heady sequence
        taily: dict[int, int] = {0: 1}     # the all-tails sequence
        for sig in _all_signatures(max(0, n - 1)):
            s = signatures.signature_score(sig)
            if signatures.min_length(sig, "heady") <= n:
                heady[s] = heady.get(s, 0) + signatures.sequence_count(sig, n, "heady")
            if not sig.endswith("+") and signatures.min_length(sig, "taily") <= n:
                taily[s] = taily.get(s, 0) + signatures.sequence_count(sig, n, "taily")
        closed = counting.closed_distribution(n)
        rec.expect(heady == closed.heady,
                   f"signature census misses the heady table at n={n}")
        rec.expect(taily == closed.taily,
                   f"signature census misses the taily table at n={n}")


def _insertion_bijection(rec: _Recorder, max_marks: int, n_span: int) -> None:
    # a score-one signature at length n and its complement, pinned to a
    # leading head, at length n + 1 generate equally many sequences
    for sig in _all_signatures(max_marks):
        if signatures.signature_score(sig) != 1:
            continue
        twin = signatures.complement(sig)
        first = signatures.min_length(sig, "heady")
        for n in range(first, first + n_span + 1):
            ours = signatures.sequence_count(sig, n, "heady")
            theirs = signatures.sequence_count(twin, n + 1, "heady",
                                               fixed_leading_one=True)
            rec.expect(ours == theirs,
                       f"complement pairing miscounts: {sig!r} n={n}")
            if len(sig) <= 5:
                built = list(signatures.generate_sequences(
                    twin, n + 1, "heady", fixed_leading_one=True))
                rec.expect(len(built) == ours and len(set(built)) == ours,
                           f"complement generation miscounts: {sig!r} n={n}")


def _generator_coverage(rec: _Recorder, gen_max: int) -> None:
    # every sequence of every length must be produced exactly once, under
    # exactly the signature and final toss it actually carries
    for n in range(1, gen_max + 1):
        groups: dict[tuple[str, str], set[core.TossSequence]] = {}
        for word in range(1 << n):
            bits = oracle.word_to_bits(word, n)
            mode = "heady" if bits[-1] == 1 else "taily"
            groups.setdefault((signatures.signature_of(bits), mode), set()).add(bits)
        rec.expect(groups.pop(("", "taily")) == {(0,) * n},
                   f"mark-free taily sequences at n={n} should be the all-tails one")
        rec.expect(groups.pop(("", "heady")) == {(0,) * (n - 1) + (1,)},
                   f"mark-free heady sequences at n={n} should be tails-then-head")
        for (sig, mode), want in groups.items():
            got = list(signatures.generate_sequences(sig, n, mode))
            rec.expect(len(got) == len(set(got)),
                       f"duplicate outputs: {sig!r} {mode} n={n}")
            rec.expect(set(got) == want, f"coverage gap: {sig!r} {mode} n={n}")
            rec.expect(signatures.sequence_count(sig, n, mode) == len(want),
                       f"closed-form count wrong: {sig!r} {mode} n={n}")
            pinned = {bits for bits in want if bits[0] == 1}
            if pinned:
                got_pinned = set(signatures.generate_sequences(
                    sig, n, mode, fixed_leading_one=True))
                rec.expect(got_pinned == pinned,
                           f"pinned-head coverage gap: {sig!r} {mode} n={n}")
                rec.expect(
                    signatures.sequence_count(sig, n, mode, fixed_leading_one=True)
                    == len(pinned),
                    f"pinned-head count wrong: {sig!r} {mode} n={n}")
            else:
                rec.expect(
                    _rejected(lambda: signatures.sequence_count(
                        sig, n, mode, fixed_leading_one=True)),
                    f"pinned head accepted with nowhere to put tails: "
                    f"{sig!r} {mode} n={n}")


def _oracle_agreement(rec: _Recorder, oracle_max: int) -> None:
    for n in range(1, oracle_max + 1):
        seen = oracle.enumerate_distribution(n)
        closed = counting.closed_distribution(n)
        rec.expect(seen == closed, f"enumeration disagrees with closed forms at n={n}")
        table = core.close_call_buckets(closed)
        rec.expect(oracle.close_call_table(n) == table,
                   f"enumerated close-call buckets disagree at n={n}")
        half = 1 << (n - 1)
        rec.expect(sum(table.heady_row()) == half and sum(table.taily_row()) == half,
                   f"close-call rows do not each cover half the sequences at n={n}")
        if n >= 2:
            rec.expect(oracle.win_gap(n) == counting.win_gap(n),
                       f"enumerated gap disagrees at n={n}")
            rec.expect(table.h4 == counting.win_gap(n),
                       f"the gap should sit in the score minus-one heady bucket, n={n}")
    n = min(oracle_max, 6)
    dist = counting.closed_distribution(n)
    for mode, counts in (("heady", dist.heady), ("taily", dist.taily)):
        want_last = 1 if mode == "heady" else 0
        for s, c in counts.items():
            found = oracle.sequences_with(n, s, mode)
            rec.expect(len(found) == c,
                       f"sequence listing count wrong: s={s} {mode} n={n}")
            rec.expect(all(core.score(b) == s and b[-1] == want_last for b in found),
                       f"sequence listing contents wrong: s={s} {mode} n={n}")


def run_suites(max_n: int = 64, oracle_max: int = 12,
               gen_max: int | None = None) -> list[SuiteResult]:
    """Run every suite and return the results in a fixed order.

    max_n bounds the pure-arithmetic sweeps, oracle_max the 2**n
    enumeration sweeps and gen_max the exhaustive generator sweeps;
    gen_max defaults to min(10, max_n).
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if oracle_max < 1:
        raise ValueError(f"oracle_max must be at least 1, got {oracle_max}")
    if gen_max is None:
        gen_max = min(10, max_n)
    if gen_max < 1:
        raise ValueError(f"gen_max must be at least 1, got {gen_max}")
    suites: list[tuple[str, Callable[[_Recorder], None]]] = [
        ("base-tables", _base_tables),
        ("normalization", lambda rec: _normalization(rec, max_n)),
        ("support-bounds", lambda rec: _support_bounds(rec, max_n)),
        ("heady-recursion", lambda rec: _heady_recursion(rec, max_n)),
        ("taily-recursion", lambda rec: _taily_recursion(rec, max_n)),
        ("close-call-census", lambda rec: _close_call_census(rec, max_n)),
        ("gap-definition", lambda rec: _gap_definition(rec, max_n)),
        ("gap-recursion", lambda rec: _gap_recursion(rec, max_n)),
        ("gap-growth", lambda rec: _gap_growth(rec, max_n)),
        ("term-updates", lambda rec: _term_updates(rec, max_n)),
        ("method-agreement", lambda rec: _method_agreement(rec, max_n)),
        ("min-length-formula", _min_length_formula),
        ("insertion-census", lambda rec: _insertion_census(rec, min(gen_max + 2, 14))),
        ("insertion-bijection", lambda rec: _insertion_bijection(rec, 7, 6)),
        ("generator-coverage", lambda rec: _generator_coverage(rec, gen_max)),
        ("oracle-agreement", lambda rec: _oracle_agreement(rec, oracle_max)),
    ]
    return [_run(name, body) for name, body in suites]
