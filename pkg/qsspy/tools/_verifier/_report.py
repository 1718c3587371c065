from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

import pandas as pd
from lamin_utils import logger
from rich.progress import track

from qsspy.tools._schemes import REFERENCE
from qsspy.tools._structures import AdversaryStructure, is_self_dual, player_subsets
from qsspy.tools._tensorlab import mutual_information, subsystem_entropy

if TYPE_CHECKING:
    from collections.abc import Iterable

    from qsspy.tools._schemes import MixedSchemeInstance, SchemeInstance
    from qsspy.tools._tensorlab import DensityOperator, PureState

DEFAULT_EPS = 1e-6
TOL_ENV_VAR = "QSS_TOL"
SIGNIFICANT_DIGITS = 12

SubsetClass = Literal["FULL", "ZERO", "PARTIAL"]
VerdictKind = Literal["PERFECT", "NON_PERFECT", "INVALID"]


def round_sig(value: float) -> float:
    """Round to 12 significant digits for serialization."""
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}") + 0.0


@dataclass(frozen=True)
class Tolerance:
    """Classification threshold for mutual informations and entropies, in bits."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not 0 < self.eps < 1e-2:
            raise ValueError(f"Tolerance must satisfy 0 < eps < 1e-2, got {self.eps}.")

    @classmethod
    def resolve(cls, eps: float | None = None) -> Tolerance:
        """Explicit value, else the ``QSS_TOL`` environment variable, else the default."""
        if eps is not None:
            return cls(float(eps))
        env = os.environ.get(TOL_ENV_VAR)
        if env:
            try:
                return cls(float(env))
            except ValueError as e:
                raise ValueError(f"Invalid {TOL_ENV_VAR}={env!r}: {e}") from e
        return cls()


@dataclass(frozen=True)
class SubsetResult:
    """Entropy and information of one player subset.

    Attributes:
        players: The subset, sorted.
        entropy_bits: ``S`` of the aggregated shares.
        mutual_info_bits: ``I(R : shares)``, clamped to 0 within the tolerance.
        classification: ``FULL`` if it equals ``I(R:S)``, ``ZERO`` if it vanishes, ``PARTIAL`` otherwise.
        is_full: Whether the subset holds all of the information.
        is_zero: Whether the subset holds no information.
    """

    players: tuple[int, ...]
    entropy_bits: float
    mutual_info_bits: float
    classification: SubsetClass
    is_full: bool
    is_zero: bool

    def describe(self) -> str:
        """Short witness form such as ``{1}: PARTIAL I=1.0``."""
        players = "{" + ", ".join(map(str, self.players)) + "}"
        return f"{players}: {self.classification} I={round(self.mutual_info_bits, 6)}"


@dataclass(frozen=True)
class Verdict:
    """Overall classification of a scheme.

    Attributes:
        kind: ``PERFECT``, ``NON_PERFECT`` or ``INVALID``.
        structure: Realized adversary structure of a perfect scheme (players relabeled to ``1..n``).
        witnesses: Subsets with partial information.
        diagnostics: Reasons for an invalid verdict.
    """

    kind: VerdictKind
    structure: AdversaryStructure | None = None
    witnesses: tuple[SubsetResult, ...] = ()
    diagnostics: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    """Per-subset verification of a scheme over all nonempty player subsets."""

    players: tuple[int, ...]
    secret_entropy_bits: float
    reference_mutual_bits: float
    results: tuple[SubsetResult, ...]
    verdict: Verdict
    tolerance: Tolerance = field(default_factory=Tolerance)

    def result_for(self, players: Iterable[int]) -> SubsetResult:
        key = tuple(sorted(players))
        for result in self.results:
            if result.players == key:
                return result
        raise ValueError(f"No result for players {list(key)}; players are {list(self.players)}.")

    def to_df(self) -> pd.DataFrame:
        """One row per subset with its size, entropy, mutual information and class."""
        return pd.DataFrame(
            {
                "players": [r.players for r in self.results],
                "size": [len(r.players) for r in self.results],
                "entropy": [r.entropy_bits for r in self.results],
                "mutual_info": [r.mutual_info_bits for r in self.results],
                "class": [r.classification for r in self.results],
            }
        )

    def to_dict(self) -> dict:
        """JSON-ready form with deterministic ordering and 12 significant digits."""
        verdict = self.verdict
        return {
            "secret_entropy": round_sig(self.secret_entropy_bits),
            "reference_mutual": round_sig(self.reference_mutual_bits),
            "subsets": [
                {
                    "players": list(r.players),
                    "entropy": round_sig(r.entropy_bits),
                    "mutual_info": round_sig(r.mutual_info_bits),
                    "class": r.classification,
                }
                for r in self.results
            ],
            "verdict": verdict.kind,
            "structure": verdict.structure.to_dict() if verdict.structure is not None else None,
            "witnesses": [w.describe() for w in verdict.witnesses],
            "diagnostics": list(verdict.diagnostics),
            "tolerances": {"eps": self.tolerance.eps},
        }


def reference_information(state: PureState | DensityOperator, labels: tuple[str, ...]) -> float:
    """``I(R : labels)``; players holding no share give the empty aggregate with no information."""
    if not labels:
        return 0.0
    return mutual_information(state, [REFERENCE], labels)


def _relabel(players: tuple[int, ...]) -> dict[int, int]:
    return {player: index for index, player in enumerate(players, start=1)}


def _classify(mutual: float, reference: float, tol: Tolerance) -> tuple[SubsetClass, bool, bool]:
    is_full = abs(mutual - reference) < tol.eps
    is_zero = mutual < tol.eps
    if is_full:
        return "FULL", is_full, is_zero
    return ("ZERO" if is_zero else "PARTIAL"), is_full, is_zero


def _verdict(results: list[SubsetResult], players: tuple[int, ...], pure: bool, degenerate: bool) -> Verdict:
    partial = tuple(r for r in results if r.classification == "PARTIAL")
    if partial:
        return Verdict("NON_PERFECT", witnesses=partial)
    if not players:
        return Verdict("PERFECT")
    relabel = _relabel(players)
    family = {frozenset()} | {
        frozenset(relabel[p] for p in r.players) for r in results if r.classification == "ZERO"
    }
    try:
        structure = AdversaryStructure(len(players), frozenset(family))
    except ValueError as e:
        return Verdict("INVALID", diagnostics=(str(e),))
    if pure and not degenerate and not is_self_dual(structure):
        diagnostic = "Realized structure of a pure scheme is not self-dual."
        return Verdict("INVALID", structure=structure, diagnostics=(diagnostic,))
    return Verdict("PERFECT", structure=structure)


def subset_report(
    scheme: SchemeInstance | MixedSchemeInstance, tol: Tolerance | None = None, show_progressbar: bool = False
) -> VerificationReport:
    """Evaluate ``S`` and ``I(R:·)`` for every nonempty player subset and classify the scheme.

    Shares are aggregated per player through the ownership map. ``I(R:S)`` is ``2 S(S)`` for pure
    schemes and the value carried over from the originating pure scheme for mixed ones.

    Args:
        scheme: Pure or mixed scheme.
        tol: Classification tolerance; resolved from ``QSS_TOL`` or the default when None.
        show_progressbar: Whether to show a progress bar over the subsets.

    Returns:
        Report with subsets in size-then-lexicographic order and the verdict.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_ghz_direct(3, qs.tl.SecretSpec.uniform(2))
        >>> qs.tl.subset_report(scheme).verdict.kind
        'NON_PERFECT'
    """
    tol = Tolerance.resolve() if tol is None else tol
    state = scheme.state
    players = scheme.players
    secret_entropy = subsystem_entropy(state, [REFERENCE])
    reference = scheme.reference_mutual_bits
    degenerate = reference < tol.eps
    subsets = [tuple(players[k - 1] for k in subset) for subset in player_subsets(len(players))]
    if show_progressbar:
        subsets = track(subsets, description="Verifying subsets...")

    results = []
    for subset in subsets:
        labels = scheme.shares_of(subset)
        entropy = subsystem_entropy(state, labels)
        mutual = reference_information(state, labels)
        if mutual < -tol.eps:
            logger.warning(f"Mutual information of players {list(subset)} is negative ({mutual:.3g}).")
        if abs(mutual) < tol.eps:
            mutual = 0.0
        classification, is_full, is_zero = _classify(mutual, reference, tol)
        results.append(SubsetResult(subset, entropy, mutual, classification, is_full, is_zero))

    verdict = _verdict(results, players, scheme.is_pure, degenerate)
    logger.info(f"Verified {len(results)} subsets of the {scheme.kind} scheme: {verdict.kind}.")
    return VerificationReport(players, secret_entropy, reference, tuple(results), verdict, tol)


@dataclass(frozen=True)
class ExpectationResult:
    """Outcome of comparing a report with an expected adversary structure.

    Attributes:
        passed: Whether every subset matched.
        witness: First mismatching subset.
        expected: What the witness should have been (``FULL`` or ``ZERO``).
    """

    passed: bool
    witness: SubsetResult | None = None
    expected: SubsetClass | None = None

    @property
    def message(self) -> str:
        if self.passed:
            return "All subsets match the expected structure."
        return f"{self.witness.describe()} (expected {self.expected})"


def verify_against(
    report: VerificationReport, expected: AdversaryStructure, tol: Tolerance | None = None
) -> ExpectationResult:
    """Check that unauthorized sets carry no information and authorized sets carry all of it.

    Report players are relabeled positionally to ``1..n`` before they are looked up in ``expected``.

    Args:
        report: Report from :func:`subset_report`.
        expected: Structure over the same number of players.
        tol: Tolerance for the comparison; defaults to the report's.

    Returns:
        Pass, or fail with the first mismatching subset in report order.
    """
    tol = report.tolerance if tol is None else tol
    if expected.n_players != len(report.players):
        raise ValueError(
            f"Expected structure has {expected.n_players} players but the scheme has {len(report.players)}."
        )
    relabel = _relabel(report.players)
    for result in report.results:
        unauthorized = expected.is_unauthorized(relabel[p] for p in result.players)
        if unauthorized and not result.mutual_info_bits < tol.eps:
            return ExpectationResult(False, result, "ZERO")
        if not unauthorized and not abs(result.mutual_info_bits - report.reference_mutual_bits) < tol.eps:
            return ExpectationResult(False, result, "FULL")
    return ExpectationResult(True)


def erasure_correctable(
    state: PureState | DensityOperator, subset: Iterable[str], tol: Tolerance | None = None
) -> bool:
    """Erasure of the subsystems ``subset`` is correctable iff ``I(R : subset)`` vanishes.

    Args:
        state: Global state with the reference labeled ``R``.
        subset: Share labels; the empty set is always correctable.
        tol: Threshold below which the information counts as zero.

    Returns:
        True if the erasure can be corrected.
    """
    tol = Tolerance.resolve() if tol is None else tol
    subset = tuple(subset)
    if not subset:
        return True
    if REFERENCE in subset:
        raise ValueError("The reference system R cannot be part of an erasure.")
    return mutual_information(state, [REFERENCE], subset) < tol.eps
