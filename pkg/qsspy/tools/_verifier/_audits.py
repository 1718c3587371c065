from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd
from rich.progress import track

from qsspy.tools._schemes import REFERENCE, SchemeInstance, share_label
from qsspy.tools._structures import msp_accepts, player_subsets, ranks
from qsspy.tools._tensorlab import PureState, eig_hermitian, partial_trace, subsystem_entropy

from ._report import Tolerance, reference_information

if TYPE_CHECKING:
    from qsspy.tools._structures import MSP

SPECTRUM_TOL = 1e-9


@dataclass(frozen=True)
class DualityResult:
    """Residuals of ``I(R:S) = I(R:A) + I(R:B)`` over complementary pairs.

    Attributes:
        passed: Whether every residual is below the tolerance.
        table: One row per pair with columns ``A``, ``B``, ``I_A``, ``I_B``, ``I_ref``, ``residual``, ``passed``.
    """

    passed: bool
    table: pd.DataFrame


@dataclass(frozen=True)
class AuditResult:
    """Comparison of computed entropies with their closed forms.

    Attributes:
        passed: Whether every row passed.
        table: One row per checked quantity.
    """

    passed: bool
    table: pd.DataFrame

    @property
    def failures(self) -> pd.DataFrame:
        return self.table[~self.table["passed"]]


def _parties(scheme: SchemeInstance | PureState) -> tuple[PureState, dict[int, tuple[str, ...]]]:
    if isinstance(scheme, SchemeInstance):
        return scheme.state, {player: scheme.shares_of([player]) for player in scheme.players}
    if isinstance(scheme, PureState):
        if scheme.layout.labels[0] != REFERENCE:
            raise ValueError(f"The first subsystem must be the reference {REFERENCE!r}.")
        return scheme, {k: (label,) for k, label in enumerate(scheme.layout.labels[1:], start=1)}
    raise ValueError(f"Duality needs a pure scheme or pure state, got {type(scheme).__name__}.")


def check_pure_duality(scheme: SchemeInstance | PureState, tol: Tolerance | None = None) -> DualityResult:
    """Check ``|I(R:S) - I(R:A) - I(R:B)| < eps`` for every split of the players into ``A`` and ``B``.

    Each unordered pair is visited once, with ``A`` holding the smallest player. A bare
    :class:`PureState` is read as reference ``R`` followed by one subsystem per player.

    Args:
        scheme: Pure scheme or pure state.
        tol: Threshold on the residual.

    Returns:
        Pass flag and the per-pair table.
    """
    tol = Tolerance.resolve() if tol is None else tol
    state, owned = _parties(scheme)
    players = sorted(owned)
    everything = tuple(label for player in players for label in owned[player])
    reference = reference_information(state, everything)
    rows = []
    for subset in player_subsets(len(players)):
        a = tuple(players[k - 1] for k in subset)
        b = tuple(p for p in players if p not in a)
        if players[0] not in a or not b:
            continue
        i_a = reference_information(state, tuple(label for p in a for label in owned[p]))
        i_b = reference_information(state, tuple(label for p in b for label in owned[p]))
        residual = abs(reference - i_a - i_b)
        rows.append(
            {
                "A": a,
                "B": b,
                "I_A": i_a,
                "I_B": i_b,
                "I_ref": reference,
                "residual": residual,
                "passed": residual < tol.eps,
            }
        )
    table = pd.DataFrame(rows, columns=["A", "B", "I_A", "I_B", "I_ref", "residual", "passed"])
    return DualityResult(bool(table["passed"].all()), table)


def _stabilizer_spectrum(probs: np.ndarray, t: int) -> np.ndarray:
    alpha_0, alpha_1 = probs
    high = (1 + alpha_0 - alpha_1) / 2**t
    low = (1 - alpha_0 + alpha_1) / 2**t
    return np.sort(np.array([high] * 2 ** (t - 1) + [low] * 2 ** (t - 1)))[::-1]


def audit_stabilizer_entropies(
    scheme: SchemeInstance, tol: Tolerance | None = None, show_progressbar: bool = False
) -> AuditResult:
    """Compare subset entropies of a ``((t, 2t-1))`` stabilizer scheme with their closed forms.

    Sets of ``t' <= t - 1`` players hold ``t'`` bits; sets ``A`` of at least ``t`` players hold
    ``S(S) + (2t - 1 - |A|)`` bits. For ``|A| = t`` the spectrum of ``ρ_A`` must consist of
    ``(1 ± (α_0 - α_1)) / 2^t``, each ``2^{t-1}`` times.

    Args:
        scheme: Scheme built by :func:`~qsspy.tools.encode_stabilizer_qts`.
        tol: Tolerance on entropies; spectra are compared within 1e-9.
        show_progressbar: Whether to show a progress bar over the subsets.

    Returns:
        Pass flag and a table with columns ``players``, ``size``, ``quantity``, ``observed``,
        ``expected``, ``deviation``, ``passed``.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), qs.tl.SecretSpec.uniform(2))
        >>> qs.tl.audit_stabilizer_entropies(scheme).passed
        True
    """
    if scheme.kind != "stabilizer":
        raise ValueError(f"Stabilizer audits need a stabilizer scheme, got kind {scheme.kind!r}.")
    tol = Tolerance.resolve() if tol is None else tol
    t, n = scheme.params["t"], scheme.params["n"]
    secret_entropy = scheme.secret.entropy
    subsets = player_subsets(n)
    if show_progressbar:
        subsets = track(subsets, description="Auditing entropies...")
    rows = []
    for subset in subsets:
        labels = scheme.shares_of(subset)
        size = len(subset)
        observed = subsystem_entropy(scheme.state, labels)
        expected = float(size) if size <= t - 1 else secret_entropy + (n - size)
        deviation = abs(observed - expected)
        rows.append((subset, size, "entropy", observed, expected, deviation, deviation < tol.eps))
        if size == t:
            spectrum = eig_hermitian(partial_trace(scheme.state, labels))
            spectrum_deviation = float(np.max(np.abs(spectrum - _stabilizer_spectrum(scheme.secret.probs, t))))
            passed = spectrum_deviation < SPECTRUM_TOL
            rows.append((subset, size, "spectrum", spectrum_deviation, 0.0, spectrum_deviation, passed))
    table = pd.DataFrame(rows, columns=["players", "size", "quantity", "observed", "expected", "deviation", "passed"])
    return AuditResult(bool(table["passed"].all()), table)


def audit_msp_entropies(
    scheme: SchemeInstance, msp: MSP | None = None, tol: Tolerance | None = None, show_progressbar: bool = False
) -> AuditResult:
    """Compare entropies of an MSP scheme with ``S(A) = S(S) + (m+l-e) log q`` and ``S(B) = (m+l-e) log q``.

    Every authorized ``A`` is checked together with its complement ``B``, where ``l`` and ``m`` are the
    ranks of ``M_A`` and ``M_B``. The offset ``m + l - e`` must be nonnegative.

    Args:
        scheme: Scheme built by :func:`~qsspy.tools.encode_msp`.
        msp: Span program of the scheme; taken from the scheme parameters when None.
        tol: Tolerance on entropies.
        show_progressbar: Whether to show a progress bar over the subsets.

    Returns:
        Pass flag and a table with columns ``A``, ``B``, ``l``, ``m``, ``offset``, ``S_A``,
        ``S_A_expected``, ``S_B``, ``S_B_expected``, ``passed``.
    """
    if scheme.kind != "msp":
        raise ValueError(f"MSP audits need an MSP scheme, got kind {scheme.kind!r}.")
    msp = scheme.params["msp"] if msp is None else msp
    tol = Tolerance.resolve() if tol is None else tol
    secret_entropy = scheme.secret.entropy
    log_q = np.log2(msp.q)
    everyone = set(range(1, msp.n_players + 1))
    subsets = player_subsets(msp.n_players)
    if show_progressbar:
        subsets = track(subsets, description="Auditing entropies...")
    rows = []
    for a in subsets:
        if not msp_accepts(msp, a):
            continue
        b = tuple(sorted(everyone - set(a)))
        l, m = ranks(msp, a)
        offset = m + l - msp.e
        s_a = subsystem_entropy(scheme.state, [share_label(r + 1) for r in msp.rows_of(a)])
        s_b = subsystem_entropy(scheme.state, [share_label(r + 1) for r in msp.rows_of(b)])
        s_a_expected = secret_entropy + offset * log_q
        s_b_expected = offset * log_q
        passed = offset >= 0 and abs(s_a - s_a_expected) < tol.eps and abs(s_b - s_b_expected) < tol.eps
        rows.append((a, b, l, m, offset, s_a, s_a_expected, s_b, s_b_expected, passed))
    columns = ["A", "B", "l", "m", "offset", "S_A", "S_A_expected", "S_B", "S_B_expected", "passed"]
    table = pd.DataFrame(rows, columns=columns)
    return AuditResult(bool(table["passed"].all()), table)
