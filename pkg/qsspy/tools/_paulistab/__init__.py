from ._code import StabilizerCode, code_distance, codewords, is_quantum_mds, remain_independent, stabilizer_group
from ._pauli import (
    PauliOperator,
    apply_pauli,
    commutes,
    compose,
    independent,
    pauli_parse,
    restrict,
    symplectic_rank,
)

__all__ = [
    "PauliOperator",
    "pauli_parse",
    "commutes",
    "compose",
    "restrict",
    "independent",
    "symplectic_rank",
    "apply_pauli",
    "StabilizerCode",
    "codewords",
    "code_distance",
    "stabilizer_group",
    "remain_independent",
    "is_quantum_mds",
]
