from ._audits import AuditResult, DualityResult, audit_msp_entropies, audit_stabilizer_entropies, check_pure_duality
from ._report import (
    ExpectationResult,
    SubsetResult,
    Tolerance,
    Verdict,
    VerificationReport,
    erasure_correctable,
    subset_report,
    verify_against,
)
from ._verifier import Verifier

__all__ = [
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
