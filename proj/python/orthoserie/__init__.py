"""Orthogonal polynomial expansions for exponential weights w = exp(-Q)."""

from ._core import (
    BVFunction,
    GaussRule,
    RecurrenceTable,
    Weight,
    build_table,
    christoffel,
    coefficients,
    eval_weighted,
    gauss,
    kernel,
    partial_sum,
    tail_integral,
    theorem_rhs,
    v_delta,
)

__all__ = [
    "BVFunction",
    "GaussRule",
    "RecurrenceTable",
    "Weight",
    "build_table",
    "christoffel",
    "coefficients",
    "eval_weighted",
    "gauss",
    "kernel",
    "partial_sum",
    "tail_integral",
    "theorem_rhs",
    "v_delta",
]
