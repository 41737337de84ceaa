"""Exact counts of n x n matrices over GF(q) with a given characteristic polynomial.

Polynomials and matrices use the same text formats as the ``mcensus`` CLI:
``"x^2+x+1"`` and ``"0,1;1,1"``.
"""

from ._core import (
    BudgetExceeded,
    DomainError,
    Error,
    Field,
    InternalError,
    ParseError,
    are_similar,
    census,
    centralizer,
    charpoly,
    count_irreducible_case,
    count_monic_irreducibles,
    count_with_charpoly,
    f_product,
    factor,
    gl_order,
    is_irreducible,
    minpoly,
    orbit_stabilizer,
    rcf,
    run_cli,
    verify_partition,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "Field",
    "InternalError",
    "ParseError",
    "are_similar",
    "census",
    "centralizer",
    "charpoly",
    "count_irreducible_case",
    "count_monic_irreducibles",
    "count_with_charpoly",
    "f_product",
    "factor",
    "gl_order",
    "is_irreducible",
    "minpoly",
    "orbit_stabilizer",
    "rcf",
    "run_cli",
    "verify_partition",
]
