"""Finite quasigroup analysis: conjugate tables, subquasigroup search, isotopy."""

from quasigroups.core import (
    AssociativityVerdict,
    MalformedInput,
    NotLatin,
    OrderMismatch,
    Permutation,
    QuasigroupTable,
    cyclic_table,
    direct_product,
    format_table,
    load_table,
    parse_table,
)

__version__ = "0.1.0"

__all__ = [
    "AssociativityVerdict",
    "MalformedInput",
    "NotLatin",
    "OrderMismatch",
    "Permutation",
    "QuasigroupTable",
    "cyclic_table",
    "direct_product",
    "format_table",
    "load_table",
    "parse_table",
    "__version__",
]
