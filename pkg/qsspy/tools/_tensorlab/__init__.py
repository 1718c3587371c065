from ._layout import MAX_TOTAL_DIM, SystemLayout
from ._operations import (
    eig_hermitian,
    is_product,
    mutual_information,
    partial_trace,
    purify,
    random_density,
    random_state,
    subsystem_entropy,
    tensor,
    von_neumann_entropy,
)
from ._states import DensityOperator, PureState

__all__ = [
    "MAX_TOTAL_DIM",
    "SystemLayout",
    "PureState",
    "DensityOperator",
    "tensor",
    "partial_trace",
    "eig_hermitian",
    "von_neumann_entropy",
    "subsystem_entropy",
    "mutual_information",
    "purify",
    "is_product",
    "random_state",
    "random_density",
]
