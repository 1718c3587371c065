from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Literal

import numpy as np
from lamin_utils import logger

from qsspy.tools._tensorlab import DensityOperator, PureState, partial_trace

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from ._secret import SecretSpec

REFERENCE = "R"
REFERENCE_TOL = 1e-10

SchemeKind = Literal["stabilizer", "msp", "ghz"]


def share_label(k: int) -> str:
    return f"share_{k}"


class _OwnedShares:
    """Ownership bookkeeping shared by pure and mixed scheme instances."""

    state: PureState | DensityOperator
    ownership: Mapping[str, int]
    roster: tuple[int, ...]

    def _check_ownership(self) -> None:
        labels = self.state.layout.labels
        if not labels or labels[0] != REFERENCE:
            raise ValueError(f"The first subsystem must be the reference {REFERENCE!r}, got layout {labels}.")
        shares = set(labels[1:])
        if set(self.ownership) != shares:
            raise ValueError(
                f"Ownership covers {sorted(self.ownership)} but the state holds shares {sorted(shares)}."
            )
        object.__setattr__(self, "ownership", MappingProxyType(dict(self.ownership)))
        roster = tuple(sorted({int(p) for p in self.roster}))
        if any(p < 1 for p in roster):
            raise ValueError(f"Players are numbered from 1, got roster {list(roster)}.")
        object.__setattr__(self, "roster", roster)

    @property
    def players(self) -> tuple[int, ...]:
        """Players of the roster and players owning at least one share, sorted."""
        return tuple(sorted(set(self.roster) | set(self.ownership.values())))

    @property
    def share_labels(self) -> tuple[str, ...]:
        return self.state.layout.labels[1:]

    def shares_of(self, players: Iterable[int]) -> tuple[str, ...]:
        """Share labels owned by ``players``, in layout order. Players without shares contribute nothing."""
        players = set(players)
        unknown = sorted(players - set(self.players))
        if unknown:
            raise ValueError(f"Players {unknown} are not part of the scheme; players are {list(self.players)}.")
        return tuple(label for label in self.share_labels if self.ownership[label] in players)


@dataclass(frozen=True, eq=False)
class SchemeInstance(_OwnedShares):
    """Purified sharing of a secret: a pure state over ``R`` and the shares.

    Attributes:
        state: Pure state over ``[R, share_1, ..., share_d]``.
        ownership: Share label to owning player (1-based).
        kind: Which encoder built the instance.
        secret: The secret that was shared.
        params: Encoder-specific parameters (threshold, code name, teleport outcome, ...).
        roster: Players of the scheme beyond the share owners, such as MSP players without rows.
    """

    state: PureState
    ownership: Mapping[str, int]
    kind: SchemeKind
    secret: SecretSpec
    params: Mapping[str, Any] = field(default_factory=dict)
    roster: tuple[int, ...] = ()

    def __post_init__(self):
        self._check_ownership()
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))
        ref_dim = self.state.layout.dim(REFERENCE)
        if ref_dim != self.secret.dim:
            raise ValueError(f"Reference dimension {ref_dim} differs from secret dimension {self.secret.dim}.")
        reduced = partial_trace(self.state, [REFERENCE]).matrix
        deviation = np.max(np.abs(reduced - np.diag(self.secret.probs)))
        if deviation > REFERENCE_TOL:
            raise ValueError(f"Encoding changed the reference state (max deviation {deviation:.3g}).")

    @property
    def is_pure(self) -> bool:
        return True

    @property
    def reference_mutual_bits(self) -> float:
        """``I(R:S) = 2 S(S)`` for a pure encoding."""
        return 2 * self.secret.entropy


@dataclass(frozen=True, eq=False)
class MixedSchemeInstance(_OwnedShares):
    """Scheme left after discarding shares of a pure scheme.

    Attributes:
        state: Mixed state over ``R`` and the remaining shares.
        ownership: Ownership of the remaining shares.
        kind: Kind of the originating pure scheme.
        secret: The secret that was shared.
        params: Parameters of the originating scheme plus the discarded labels.
        reference_mutual_bits: ``I(R:S)`` of the originating pure scheme.
        roster: Players kept from the originating scheme, including those without shares.
    """

    state: DensityOperator
    ownership: Mapping[str, int]
    kind: SchemeKind
    secret: SecretSpec
    params: Mapping[str, Any]
    reference_mutual_bits: float
    roster: tuple[int, ...] = ()

    def __post_init__(self):
        self._check_ownership()
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def is_pure(self) -> bool:
        return False


def discard_share(scheme: SchemeInstance | MixedSchemeInstance, label: str) -> MixedSchemeInstance:
    """Trace out one share, keeping ``I(R:S)`` of the original pure scheme as metadata.

    Args:
        scheme: Pure or already reduced scheme.
        label: Share label to discard; the reference cannot be discarded.

    Returns:
        The mixed scheme over ``R`` and the remaining shares.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), qs.tl.SecretSpec.uniform(2))
        >>> qs.tl.discard_share(scheme, "share_5").players
        (1, 2, 3, 4)
    """
    if label == REFERENCE:
        raise ValueError("The reference system R cannot be discarded.")
    if label not in scheme.ownership:
        raise ValueError(f"Unknown share {label!r}; shares are {list(scheme.share_labels)}.")
    keep = [REFERENCE] + [share for share in scheme.share_labels if share != label]
    ownership = {share: player for share, player in scheme.ownership.items() if share != label}
    dropped = scheme.ownership[label]
    roster = tuple(p for p in scheme.players if p != dropped or p in ownership.values())
    params = dict(scheme.params)
    params["discarded"] = [*params.get("discarded", []), label]
    logger.info(f"Discarded {label} from the {scheme.kind} scheme; {len(ownership)} shares remain.")
    return MixedSchemeInstance(
        partial_trace(scheme.state, keep),
        ownership,
        scheme.kind,
        scheme.secret,
        params,
        scheme.reference_mutual_bits,
        roster,
    )
