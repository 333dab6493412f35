"""Prefix generators and finite-window deciders for binary word order structure."""

from .checks import (
    APPARENTLY_APERIODIC,
    BOTH_EXTENSIONS,
    CONSISTENT,
    INDETERMINATE,
    NON_RECURRENT,
    NOT_STURMIAN,
    PREFIX_BUDGET,
    PREFIX_CASE,
    RECURRENT_CONSISTENT,
    STURMIAN_CONSISTENT,
    ULTIMATELY_PERIODIC,
    VIOLATED,
    WINDOW_INDETERMINATE,
    HarnessOutcome,
    HarnessReport,
    ImbalanceWitness,
    NfopViolation,
    SturmianReport,
    Verdict,
    check_balance,
    check_hamming2,
    check_nfop,
    check_ones_monotone,
    classify_imbalance,
    equivalence_harness,
    find_extension_exclusion,
    find_nfop_violation,
    minimal_imbalance,
    periodicity_certificate,
    recurrence_heuristic,
    saturated_table,
    sturmian_verdict,
)
from .christoffel import (
    ChristoffelPair,
    ChristoffelReport,
    SingularWord,
    christoffel_pair,
    conjugates,
    lower_christoffel,
    singular_word,
    upper_christoffel,
    verify_christoffel_properties,
)
from .factors import FactorTable, SaturationEntry, is_unbordered
from .words import (
    FIBONACCI_RULES,
    KnownFlags,
    Literal,
    MechanicalRational,
    Morphic,
    Periodic,
    StandardSequence,
    UltimatelyPeriodic,
    WordSpec,
    format_spec,
    generate_prefix,
    known_flags,
    parse_spec,
)

__version__ = "0.1.0"
