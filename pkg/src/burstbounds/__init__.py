"""Exact code-rate bounds for multiple phased-burst and single-burst correction."""
from .bounds import (
    BoundQuery,
    BoundResult,
    CodeGeometry,
    FullSubblock,
    GapLimited,
    SymbolLimited,
    abramson_rhs,
    cbc_limit,
    evaluate,
    full_subblock_rhs,
    is_cbc_conforming,
    mpbc_gap_rhs,
    mpbc_nogap_rhs,
    sbc_rhs,
    subblock_burst_count,
    to_bound_result,
)
from .combinatorics import (
    InvalidParameter,
    binomial,
    count_run_at_most,
    count_run_exact,
    interior_count,
    min_burst_weight,
)

__version__ = "0.1.0"
