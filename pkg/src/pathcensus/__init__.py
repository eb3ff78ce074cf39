"""Exact per-type counts of oriented Hamiltonian paths in transitive
tournaments, with a brute-force oracle and scan/ranking tools."""

from .analysis import (
    DEFAULT_SCAN_LIMIT,
    ConjectureVerdict,
    Discrepancy,
    FamilyResult,
    OracleDiffReport,
    PropertySuiteReport,
    ScanReport,
    check_conjecture,
    report_from_json,
    report_to_json,
    run_property_suite,
    runner_up_pattern,
    scan,
    tt_count,
    verify_against_oracle,
    verify_tournament_invariants,
)
from .engine import MemoTable, f_two_block, f_value, memo_load, memo_save
from .errors import (
    CacheFormatError,
    CacheIoError,
    InvalidOrder,
    OrderTooLarge,
    ParseError,
    PathCensusError,
    ScanTooLarge,
    TheoremViolation,
    TypeOrderMismatch,
    UndefinedType,
)
from .oracle import (
    CENSUS_LIMIT,
    Tournament,
    TypeCensus,
    census,
    complement,
    count_type,
    make_nearly_transitive,
    make_random,
    make_tournament,
    make_transitive,
    tournament_from_text,
    tournament_to_text,
)
from .types import (
    canonical_key,
    compositions,
    derive_children,
    derive_signed_children,
    format_entries,
    is_symmetric,
    negate,
    normalize,
    parse_composition,
    parse_signed_type,
    reverse,
    same_path_set,
    signed_lift,
    unsigned,
)

__version__ = "0.1.0"
