from qsspy.data._dataloader import (
    dumps_report,
    load_code,
    load_msp,
    load_secret,
    load_structure,
    parse_threshold,
    write_report,
)
from qsspy.data._datasets import (
    five_qubit_code,
    identity_msp,
    repetition_code,
    shamir_msp,
    trivial_code,
    weighted_threshold_msp,
)

__all__ = [
    "trivial_code",
    "five_qubit_code",
    "repetition_code",
    "shamir_msp",
    "identity_msp",
    "weighted_threshold_msp",
    "load_code",
    "load_msp",
    "load_secret",
    "load_structure",
    "parse_threshold",
    "dumps_report",
    "write_report",
]
