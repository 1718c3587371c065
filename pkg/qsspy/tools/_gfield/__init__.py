from ._field import (
    GFMatrix,
    PrimeField,
    columns_independent,
    enumerate_preimage,
    in_row_span,
    rank,
    row_reduce,
)

__all__ = [
    "PrimeField",
    "GFMatrix",
    "row_reduce",
    "rank",
    "in_row_span",
    "columns_independent",
    "enumerate_preimage",
]
