"""Exact #XSAT model counting.

Formulas are lists of clauses, each a list of nonzero DIMACS literals.
"""

from ._core import (
    BOUND_TOLERANCE,
    CLAIMED_BOUND,
    OracleRefused,
    ParseError,
    UsageError,
    branching_number,
    brute_force_count,
    count,
    count_with_profile,
    generate,
    parse_dimacs,
    to_dimacs,
    verify_bounds,
)

__all__ = [
    "BOUND_TOLERANCE",
    "CLAIMED_BOUND",
    "OracleRefused",
    "ParseError",
    "UsageError",
    "branching_number",
    "brute_force_count",
    "count",
    "count_with_profile",
    "generate",
    "parse_dimacs",
    "to_dimacs",
    "verify_bounds",
]
