from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from qsspy.tools._gfield import GFMatrix, PrimeField, columns_independent, in_row_span, rank

from ._adversary import MAX_PLAYERS, AdversaryStructure, player_subsets

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


@dataclass(frozen=True)
class MSP:
    """Monotone span program ``(F_q, M, g)``.

    Row ``r`` of ``matrix`` is owned by player ``labels[r]``. A player set is accepted when the
    target ``e_1 = (1, 0, ..., 0)`` lies in the span of its rows.

    Attributes:
        matrix: ``d x e`` matrix with linearly independent columns.
        labels: Owning player (1-based) of every row.
        n_players: Number of players; players owning no rows are allowed.
    """

    matrix: GFMatrix
    labels: tuple[int, ...]
    n_players: int

    def __post_init__(self):
        labels = tuple(int(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.matrix.rows:
            raise ValueError(f"MSP has {self.matrix.rows} rows but {len(labels)} row labels.")
        if not 1 <= self.n_players <= MAX_PLAYERS:
            raise ValueError(f"Number of players must lie in 1..{MAX_PLAYERS}, got {self.n_players}.")
        invalid = sorted({label for label in labels if not 1 <= label <= self.n_players})
        if invalid:
            raise ValueError(f"Row labels {invalid} are outside the players 1..{self.n_players}.")
        if not columns_independent(self.matrix):
            raise ValueError("MSP matrix columns must be linearly independent.")

    @classmethod
    def from_rows(
        cls, q: int, rows: Sequence[Sequence[int]], labels: Sequence[int], n_players: int | None = None
    ) -> MSP:
        """Build an MSP over ``F_q``; ``n_players`` defaults to the largest row label."""
        field = PrimeField(q)
        matrix = GFMatrix.from_rows(field, rows)
        return cls(matrix, tuple(labels), n_players if n_players is not None else max(labels, default=1))

    @property
    def field(self) -> PrimeField:
        return self.matrix.field

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def d(self) -> int:
        return self.matrix.rows

    @property
    def e(self) -> int:
        return self.matrix.cols

    def rows_of(self, players: Iterable[int]) -> list[int]:
        """Row indices owned by ``players``, in matrix order."""
        players = set(players)
        return [r for r, label in enumerate(self.labels) if label in players]

    def submatrix(self, players: Iterable[int]) -> GFMatrix:
        return self.matrix.select_rows(self.rows_of(players))

    def to_dict(self) -> dict:
        return {"q": self.q, "matrix": self.matrix.entries.tolist(), "labels": list(self.labels)}


def _target(msp: MSP) -> np.ndarray:
    target = np.zeros(msp.e, dtype=np.int64)
    target[0] = 1
    return target


def _check_subset(msp: MSP, players: Iterable[int]) -> set[int]:
    players = {int(p) for p in players}
    outside = sorted(p for p in players if not 1 <= p <= msp.n_players)
    if outside:
        raise ValueError(f"Players {outside} are outside 1..{msp.n_players}.")
    return players


def msp_accepts(msp: MSP, players: Iterable[int]) -> bool:
    """Whether ``e_1`` lies in the row span of the rows owned by ``players``.

    Examples:
        >>> import qsspy as qs
        >>> msp = qs.tl.MSP.from_rows(5, [[1, 1], [1, 2], [1, 3]], [1, 2, 3])
        >>> qs.tl.msp_accepts(msp, {1, 2}), qs.tl.msp_accepts(msp, {3})
        (True, False)
    """
    players = _check_subset(msp, players)
    accepted, _ = in_row_span(msp.submatrix(players), _target(msp))
    return accepted


def msp_structure(msp: MSP, n: int | None = None) -> AdversaryStructure:
    """Adversary structure induced by MSP acceptance over ``n`` players (default ``msp.n_players``)."""
    n = msp.n_players if n is None else n
    if n < msp.n_players:
        raise ValueError(f"MSP labels rows with players up to {msp.n_players}, cannot restrict to n={n}.")
    if n != msp.n_players:
        msp = MSP(msp.matrix, msp.labels, n)
    family = frozenset(frozenset(s) for s in player_subsets(n, include_empty=True) if not msp_accepts(msp, s))
    return AdversaryStructure(n, family)


def ranks(msp: MSP, players: Iterable[int]) -> tuple[int, int]:
    """Ranks ``(l, m)`` of ``M_A`` and of ``M_B`` for ``A = players`` and its complement ``B``.

    Examples:
        >>> import qsspy as qs
        >>> msp = qs.tl.MSP.from_rows(5, [[1, 1], [1, 2], [1, 3]], [1, 2, 3])
        >>> qs.tl.ranks(msp, {1, 2})
        (2, 1)
    """
    players = _check_subset(msp, players)
    complement = set(range(1, msp.n_players + 1)) - players
    return rank(msp.submatrix(players)), rank(msp.submatrix(complement))
