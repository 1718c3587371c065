from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable

MAX_PLAYERS = 12

Subset = frozenset[int]


def player_subsets(n: int, include_empty: bool = False) -> list[tuple[int, ...]]:
    """Subsets of ``{1..n}`` in size-then-lexicographic order."""
    players = range(1, n + 1)
    start = 0 if include_empty else 1
    return [subset for size in range(start, n + 1) for subset in combinations(players, size)]


def _check_players(n: int, subset: Iterable[int]) -> Subset:
    subset = frozenset(int(p) for p in subset)
    outside = sorted(p for p in subset if not 1 <= p <= n)
    if outside:
        raise ValueError(f"Players {outside} are outside 1..{n}.")
    return subset


@dataclass(frozen=True)
class AdversaryStructure:
    """Downward-closed family of unauthorized player subsets, stored explicitly.

    Attributes:
        n_players: Number of players, at most 12.
        unauthorized: Every unauthorized subset of ``{1..n_players}``.
    """

    n_players: int
    unauthorized: frozenset[Subset]

    def __post_init__(self):
        if not 1 <= self.n_players <= MAX_PLAYERS:
            raise ValueError(f"Number of players must lie in 1..{MAX_PLAYERS}, got {self.n_players}.")
        family = frozenset(_check_players(self.n_players, s) for s in self.unauthorized)
        for subset in family:
            for player in subset:
                if subset - {player} not in family:
                    raise ValueError(
                        f"Structure is not downward closed: {sorted(subset)} is unauthorized "
                        f"but {sorted(subset - {player})} is not."
                    )
        object.__setattr__(self, "unauthorized", family)

    @classmethod
    def from_maximal(cls, n_players: int, maximal: Iterable[Iterable[int]]) -> AdversaryStructure:
        """Downward closure of the given maximal unauthorized sets (``∅`` is always unauthorized)."""
        family: set[Subset] = {frozenset()}
        for top in maximal:
            top = sorted(_check_players(n_players, top))
            family.update(frozenset(s) for size in range(len(top) + 1) for s in combinations(top, size))
        return cls(n_players, frozenset(family))

    def is_unauthorized(self, subset: Iterable[int]) -> bool:
        return _check_players(self.n_players, subset) in self.unauthorized

    def is_authorized(self, subset: Iterable[int]) -> bool:
        return not self.is_unauthorized(subset)

    @property
    def maximal_unauthorized(self) -> list[tuple[int, ...]]:
        """Unauthorized sets with no unauthorized proper superset, in size-then-lexicographic order."""
        maximal = [s for s in self.unauthorized if not any(s < other for other in self.unauthorized)]
        return sorted((tuple(sorted(s)) for s in maximal), key=lambda s: (len(s), s))

    @property
    def minimal_authorized(self) -> list[tuple[int, ...]]:
        return [
            subset
            for subset in player_subsets(self.n_players, include_empty=True)
            if self.is_authorized(subset)
            and all(self.is_unauthorized(set(subset) - {p}) for p in subset)
        ]

    def to_dict(self) -> dict:
        return {"n": self.n_players, "maximal_unauthorized": [list(s) for s in self.maximal_unauthorized]}


def threshold_structure(t: int, n: int) -> AdversaryStructure:
    """Structure of a ``((t, n))`` threshold scheme: every set of at most ``t - 1`` players is unauthorized.

    Examples:
        >>> import qsspy as qs
        >>> len(qs.tl.threshold_structure(3, 5).unauthorized)
        16
    """
    if not 1 <= t <= n:
        raise ValueError(f"Threshold parameters must satisfy 1 <= t <= n, got t={t}, n={n}.")
    family = frozenset(frozenset(s) for s in player_subsets(n, include_empty=True) if len(s) <= t - 1)
    return AdversaryStructure(n, family)


def is_self_dual(structure: AdversaryStructure) -> bool:
    """Whether ``B`` is unauthorized exactly when its complement is authorized."""
    players = frozenset(range(1, structure.n_players + 1))
    return all(
        (frozenset(b) in structure.unauthorized) != (players - frozenset(b) in structure.unauthorized)
        for b in player_subsets(structure.n_players, include_empty=True)
    )
