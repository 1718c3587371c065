from __future__ import annotations

from typing import TYPE_CHECKING

import pandas as pd
from rich.progress import track

from ._audits import AuditResult, DualityResult, audit_msp_entropies, audit_stabilizer_entropies, check_pure_duality
from ._report import (
    ExpectationResult,
    Tolerance,
    VerificationReport,
    erasure_correctable,
    subset_report,
    verify_against,
)

if TYPE_CHECKING:
    from collections.abc import Iterable

    from qsspy.tools._schemes import MixedSchemeInstance, SchemeInstance
    from qsspy.tools._structures import MSP, AdversaryStructure
    from qsspy.tools._tensorlab import DensityOperator, PureState


class Verifier:
    """Exhaustively verify a quantum secret sharing scheme over all player subsets.

    Calling the verifier on a scheme evaluates ``S`` and ``I(R:·)`` for every nonempty player subset
    and classifies the scheme. The remaining methods compare the report with an expected structure,
    check the duality identity and erasure correctability, and audit entropies against closed forms.
    All of them share the tolerance and progress settings of the instance.

    Args:
        tol: Classification tolerance in bits. Resolved from ``QSS_TOL`` or ``1e-6`` when None.
        show_progressbar: Whether to show progress bars over the subsets.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), qs.tl.SecretSpec.uniform(2))
        >>> verifier = qs.tl.Verifier(tol=1e-8)
        >>> report = verifier(scheme)
        >>> verifier.compare(report, qs.tl.threshold_structure(3, 5)).passed
        True
    """

    def __init__(self, tol: float | Tolerance | None = None, show_progressbar: bool = False):
        self.tol = tol if isinstance(tol, Tolerance) else Tolerance.resolve(tol)
        self.show_progressbar = show_progressbar

    def __call__(self, scheme: SchemeInstance | MixedSchemeInstance) -> VerificationReport:
        """Subset report of ``scheme``; see :func:`~qsspy.tools.subset_report`.

        Args:
            scheme: Pure or mixed scheme.

        Returns:
            Report with subsets in size-then-lexicographic order and the verdict.

        Examples:
            >>> import qsspy as qs
            >>> scheme = qs.tl.encode_ghz_direct(3, qs.tl.SecretSpec.uniform(2))
            >>> qs.tl.Verifier()(scheme).verdict.kind
            'NON_PERFECT'
        """
        return subset_report(scheme, self.tol, self.show_progressbar)

    def compare(self, report: VerificationReport, expected: AdversaryStructure) -> ExpectationResult:
        """Check ``report`` against ``expected``; see :func:`~qsspy.tools.verify_against`."""
        return verify_against(report, expected, self.tol)

    def erasure_correctable(self, state: PureState | DensityOperator, subset: Iterable[str]) -> bool:
        """Whether erasing the subsystems ``subset`` of ``state`` is correctable."""
        return erasure_correctable(state, subset, self.tol)

    def erasure_bridge(
        self, scheme: SchemeInstance | MixedSchemeInstance, report: VerificationReport | None = None
    ) -> pd.DataFrame:
        """Match erasure correctability of every subset with a vanishing ``I(R:·)``.

        Args:
            scheme: Pure or mixed scheme.
            report: Report of ``scheme``; computed when None.

        Returns:
            One row per subset with columns ``players``, ``is_zero``, ``correctable`` and ``passed``.
        """
        report = self(scheme) if report is None else report
        results = report.results
        if self.show_progressbar:
            results = track(results, description="Checking erasures...")
        rows = []
        for result in results:
            correctable = self.erasure_correctable(scheme.state, scheme.shares_of(result.players))
            rows.append((result.players, result.is_zero, correctable, correctable == result.is_zero))
        return pd.DataFrame(rows, columns=["players", "is_zero", "correctable", "passed"])

    def check_duality(self, scheme: SchemeInstance | PureState) -> DualityResult:
        """``I(R:S) = I(R:A) + I(R:B)`` over complementary pairs; see :func:`~qsspy.tools.check_pure_duality`."""
        return check_pure_duality(scheme, self.tol)

    def audit(self, scheme: SchemeInstance, msp: MSP | None = None) -> AuditResult:
        """Entropy audit matching the scheme kind.

        Args:
            scheme: Stabilizer or MSP scheme.
            msp: Span program of an MSP scheme; taken from the scheme parameters when None.

        Returns:
            Pass flag and the audit table.
        """
        if scheme.kind == "stabilizer":
            return audit_stabilizer_entropies(scheme, self.tol, self.show_progressbar)
        if scheme.kind == "msp":
            return audit_msp_entropies(scheme, msp, self.tol, self.show_progressbar)
        raise ValueError(f"No entropy audit exists for {scheme.kind} schemes.")
