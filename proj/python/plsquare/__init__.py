"""Partial Latin squares with prescribed row, column and symbol parameters."""

from ._core import (
    BudgetExceeded,
    Condition,
    Error,
    FeasibilityReport,
    FormatError,
    InfeasibleError,
    NoSaturation,
    PreconditionViolated,
    ValidationError,
    build_corollary,
    build_proposition,
    build_theorem,
    check_construction,
    check_row_params,
    check_sizes,
    conjugate,
    dominance_check,
    enumerate,
    exists_full,
    fill_symbols,
    normalize,
    parameters_of,
    parse_document,
    realize_degree_matrix,
    split_symbols,
    to_document,
    to_grid,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
