from qsspy.tools._gfield import (
    GFMatrix,
    PrimeField,
    columns_independent,
    enumerate_preimage,
    in_row_span,
    rank,
    row_reduce,
)
from qsspy.tools._paulistab import (
    PauliOperator,
    StabilizerCode,
    apply_pauli,
    code_distance,
    codewords,
    commutes,
    compose,
    independent,
    is_quantum_mds,
    pauli_parse,
    remain_independent,
    restrict,
    stabilizer_group,
    symplectic_rank,
)
from qsspy.tools._schemes import (
    OUTCOMES,
    MixedSchemeInstance,
    SchemeInstance,
    SecretSpec,
    bell_vector,
    discard_share,
    encode_ghz_direct,
    encode_msp,
    encode_stabilizer_qts,
    ghz_isometry,
    msp_eigensystem,
    msp_isometry,
    stabilizer_isometry,
    teleport_protocol,
)
from qsspy.tools._structures import (
    MSP,
    AdversaryStructure,
    is_self_dual,
    msp_accepts,
    msp_structure,
    player_subsets,
    ranks,
    threshold_structure,
)
from qsspy.tools._tensorlab import (
    DensityOperator,
    PureState,
    SystemLayout,
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
from qsspy.tools._verifier import (
    AuditResult,
    DualityResult,
    ExpectationResult,
    SubsetResult,
    Tolerance,
    Verdict,
    VerificationReport,
    Verifier,
    audit_msp_entropies,
    audit_stabilizer_entropies,
    check_pure_duality,
    erasure_correctable,
    subset_report,
    verify_against,
)

__all__ = [
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
    "PrimeField",
    "GFMatrix",
    "row_reduce",
    "rank",
    "in_row_span",
    "columns_independent",
    "enumerate_preimage",
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
    "AdversaryStructure",
    "player_subsets",
    "threshold_structure",
    "is_self_dual",
    "MSP",
    "msp_accepts",
    "msp_structure",
    "ranks",
    "SecretSpec",
    "SchemeInstance",
    "MixedSchemeInstance",
    "stabilizer_isometry",
    "msp_isometry",
    "ghz_isometry",
    "encode_stabilizer_qts",
    "encode_msp",
    "msp_eigensystem",
    "encode_ghz_direct",
    "OUTCOMES",
    "bell_vector",
    "teleport_protocol",
    "discard_share",
    "Verifier",
    "Tolerance",
    "SubsetResult",
    "Verdict",
    "VerificationReport",
    "subset_report",
    "ExpectationResult",
    "verify_against",
    "erasure_correctable",
    "DualityResult",
    "check_pure_duality",
    "AuditResult",
    "audit_stabilizer_entropies",
    "audit_msp_entropies",
]
