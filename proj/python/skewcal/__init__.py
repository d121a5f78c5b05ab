"""Exact calculus for skew, Lie, and Jacobi algebroid structures."""

from ._core import (
    Expr,
    canonical,
    contactify,
    example_text,
    examples,
    parse_diagnostics,
    poissonize,
    run_suite,
    suite_names,
)

__version__ = "0.1.0"

__all__ = [
    "Expr",
    "canonical",
    "contactify",
    "example_text",
    "examples",
    "parse_diagnostics",
    "poissonize",
    "run_suite",
    "suite_names",
]
