from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from lamin_utils import logger

from qsspy.tools._paulistab import PauliOperator, apply_pauli
from qsspy.tools._tensorlab import PureState, SystemLayout

from ._encoders import _scheme_layout, ghz_isometry
from ._instance import REFERENCE, SchemeInstance, share_label

if TYPE_CHECKING:
    from ._secret import SecretSpec

PROBABILITY_TOL = 1e-12

Outcome = tuple[int, int]
OUTCOMES: tuple[Outcome, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


def bell_vector(a: int, b: int) -> np.ndarray:
    """``(|0 b⟩ + (-1)^a |1 b̄⟩) / √2`` on the dealer's (secret, entangled) qubit pair."""
    vector = np.zeros(4, dtype=complex)
    vector[b] = 1.0
    vector[2 + (1 - b)] = (-1) ** a
    return vector / np.sqrt(2)


def _dealer_state(n: int, secret: SecretSpec) -> PureState:
    """``|RS⟩ ⊗ |ψ⟩_{DP}`` with ``|ψ⟩`` the GHZ state shared by the dealer and ``n`` players."""
    players = [(share_label(k), 2) for k in range(1, n + 1)]
    layout = SystemLayout.from_pairs([(REFERENCE, 2), ("S", 2), ("D", 2), *players])
    ghz = ghz_isometry(n + 1) @ (np.ones(2, dtype=complex) / np.sqrt(2))
    return PureState(layout, np.kron(secret.reference_state().amplitudes, ghz))


def teleport_protocol(
    n: int,
    secret: SecretSpec,
    forced_outcome: Outcome | None = None,
    rng: np.random.Generator | int | None = None,
    z_player: int = 1,
) -> tuple[SchemeInstance, Outcome, float]:
    """Share a qubit secret by teleporting it into a GHZ state held with ``n`` players.

    The dealer measures the secret qubit ``S`` and their GHZ qubit ``D`` in the Bell basis
    ``(|0 b⟩ + (-1)^a |1 b̄⟩)/√2`` and announces ``(a, b)``. The players then apply ``X`` on every
    qubit if ``b = 1`` and ``Z`` on player ``z_player``'s qubit if ``a = 1``.

    Args:
        n: Number of players.
        secret: Qubit secret.
        forced_outcome: Bell outcome ``(a, b)`` to post-select; sampled from the Born rule if None.
        rng: Seed or generator for sampling the outcome.
        z_player: Player applying the phase correction.

    Returns:
        The corrected scheme, the outcome and its probability.

    Examples:
        >>> import qsspy as qs
        >>> _, outcome, probability = qs.tl.teleport_protocol(2, qs.tl.SecretSpec.uniform(2), forced_outcome=(1, 0))
        >>> outcome, round(probability, 12)
        ((1, 0), 0.25)
    """
    if secret.dim != 2:
        raise ValueError(f"Teleportation shares qubit secrets, got dimension {secret.dim}.")
    if not 1 <= z_player <= n:
        raise ValueError(f"The Z correction player must lie in 1..{n}, got {z_player}.")
    amplitudes = _dealer_state(n, secret).amplitudes.reshape(2, 4, 2**n)
    branches = {
        outcome: np.einsum("s,rsp->rp", bell_vector(*outcome).conj(), amplitudes) for outcome in OUTCOMES
    }
    probabilities = {outcome: float(np.linalg.norm(branch) ** 2) for outcome, branch in branches.items()}

    if forced_outcome is None:
        rng = np.random.default_rng(rng)
        weights = np.array([probabilities[o] for o in OUTCOMES])
        outcome = OUTCOMES[int(rng.choice(len(OUTCOMES), p=weights / weights.sum()))]
    else:
        outcome = (int(forced_outcome[0]), int(forced_outcome[1]))
        if outcome not in branches:
            raise ValueError(f"Bell outcome must be two bits (a, b), got {forced_outcome}.")
    probability = probabilities[outcome]
    if probability < PROBABILITY_TOL:
        raise ValueError(f"Bell outcome {outcome} has zero probability.")

    a, b = outcome
    correction = PauliOperator(
        (b,) * n,
        tuple(a if k == z_player else 0 for k in range(1, n + 1)),
    )
    # the Y-convention phase of apply_pauli is a global factor here
    corrected = np.vstack([apply_pauli(correction, row) for row in branches[outcome]])
    corrected = corrected / np.sqrt(probability)
    logger.info(f"Teleported the secret to {n} players with Bell outcome {a}{b} (probability {probability:.4f}).")
    scheme = SchemeInstance(
        PureState.from_vector(_scheme_layout(2, [2] * n), corrected.reshape(-1), normalize=True),
        {share_label(k): k for k in range(1, n + 1)},
        "ghz",
        secret,
        {"n": n, "outcome": outcome, "probability": probability, "z_player": z_player},
    )
    return scheme, outcome, probability
