"""Exact counting for the heads-heads versus heads-tails coin tossing game.

Alice scores each adjacent heads-heads pair, Bob each heads-tails pair,
and a sequence's score is Alice's total minus Bob's.  The package counts
sequences by score and final toss along four independent routes (closed
forms, an appended-toss dynamic program, in-place term updates and raw
enumeration), builds the sequences behind any count constructively, and
cross-checks every route against the others.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    CloseCallTable,
    Outcome,
    ScoreDistribution,
    TossSequence,
    classify,
    close_call_buckets,
    parse_sequence,
    score,
    sequence_to_text,
)
from .counting import (
    WinOdds,
    binom,
    closed_distribution,
    decimal_ratio,
    heady_close_calls,
    heady_count,
    heady_support,
    score_support,
    taily_count,
    taily_support,
    win_gap,
    win_gap_step,
    win_odds,
)
from .oracle import (
    OracleCapExceeded,
    enumerate_distribution,
    sequences_with,
)
from .oracle import win_gap as oracle_win_gap
from .recurrence import (
    DpTable,
    TermVector,
    dp_distribution,
    dp_extend,
    dp_start,
    dp_sweep,
    extend_heady_terms,
    extend_taily_terms,
    first_heady_n,
    first_taily_n,
    heady_terms_start,
    incremental_distribution,
    table_sweep,
    taily_terms_start,
    terms_value,
)
from .signatures import (
    MinLengthSeq,
    complement,
    compositions,
    generate_sequences,
    min_length,
    min_length_sequence,
    sequence_count,
    signature_of,
    signature_score,
)
from .verify import SuiteResult, run_suites

__all__ = [
    "CloseCallTable",
    "DpTable",
    "MinLengthSeq",
    "Outcome",
    "OracleCapExceeded",
    "ScoreDistribution",
    "SuiteResult",
    "TermVector",
    "TossSequence",
    "WinOdds",
    "binom",
    "classify",
    "close_call_buckets",
    "closed_distribution",
    "complement",
    "compositions",
    "decimal_ratio",
    "dp_distribution",
    "dp_extend",
    "dp_start",
    "dp_sweep",
    "enumerate_distribution",
    "extend_heady_terms",
    "extend_taily_terms",
    "first_heady_n",
    "first_taily_n",
    "generate_sequences",
    "heady_close_calls",
    "heady_count",
    "heady_support",
    "heady_terms_start",
    "incremental_distribution",
    "min_length",
    "min_length_sequence",
    "oracle_win_gap",
    "parse_sequence",
    "run_suites",
    "score",
    "score_support",
    "sequence_count",
    "sequence_to_text",
    "sequences_with",
    "signature_of",
    "signature_score",
    "table_sweep",
    "taily_count",
    "taily_support",
    "taily_terms_start",
    "terms_value",
    "win_gap",
    "win_gap_step",
    "win_odds",
]
