"""Top-level package for qsspy."""

__version__ = "0.1.0"

from . import data as dt
from . import tools as tl
from qsspy.tools import (
    MSP,
    AdversaryStructure,
    DensityOperator,
    PauliOperator,
    PureState,
    SchemeInstance,
    SecretSpec,
    StabilizerCode,
    SystemLayout,
    VerificationReport,
)

__all__ = [
    "dt",
    "tl",
    "SystemLayout",
    "PureState",
    "DensityOperator",
    "PauliOperator",
    "StabilizerCode",
    "AdversaryStructure",
    "MSP",
    "SecretSpec",
    "SchemeInstance",
    "VerificationReport",
]
