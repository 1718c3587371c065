from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable

MAX_TOTAL_DIM = 2**14


@dataclass(frozen=True)
class SystemLayout:
    """Ordered list of labeled subsystems with their dimensions.

    The first subsystem is the most significant one in the row-major index convention,
    i.e. basis index ``k`` of a layout with dims ``(d_1, ..., d_m)`` is the mixed-radix number
    whose leading digit belongs to the first subsystem.

    Attributes:
        subsystems: Tuple of ``(label, dim)`` pairs.

    Examples:
        >>> import qsspy as qs
        >>> layout = qs.tl.SystemLayout.from_pairs([("R", 2), ("share_1", 5)])
        >>> layout.total_dim
        10
    """

    subsystems: tuple[tuple[str, int], ...]

    def __post_init__(self):
        labels = [label for label, _ in self.subsystems]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Subsystem labels must be unique, got {labels}.")
        for label, dim in self.subsystems:
            if not isinstance(label, str) or not label:
                raise ValueError(f"Subsystem labels must be nonempty strings, got {label!r}.")
            if int(dim) != dim or dim < 2:
                raise ValueError(f"Subsystem {label!r} has dimension {dim}, but every dimension must be >= 2.")
        if self.total_dim > MAX_TOTAL_DIM:
            raise ValueError(f"Total dimension {self.total_dim} exceeds the supported maximum of {MAX_TOTAL_DIM}.")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> SystemLayout:
        return cls(tuple((str(label), int(dim)) for label, dim in pairs))

    @classmethod
    def uniform(cls, labels: Iterable[str], dim: int) -> SystemLayout:
        """Layout with the same dimension for every label."""
        return cls(tuple((str(label), int(dim)) for label in labels))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.subsystems)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.subsystems)

    @property
    def total_dim(self) -> int:
        return prod(self.dims)

    def __len__(self) -> int:
        return len(self.subsystems)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        """Position of a label in the layout."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Unknown subsystem label {label!r}; layout has {list(self.labels)}.") from None

    def dim(self, label: str) -> int:
        return self.dims[self.index(label)]

    def positions(self, labels: Iterable[str]) -> list[int]:
        """Positions of the given labels, sorted in layout order."""
        return sorted({self.index(label) for label in labels})

    def sublayout(self, labels: Iterable[str]) -> SystemLayout:
        """Layout of the given labels, kept in the original layout order."""
        return SystemLayout(tuple(self.subsystems[i] for i in self.positions(labels)))

    def complement(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Labels not in ``labels``, in layout order."""
        excluded = set(self.positions(labels))
        return tuple(label for i, label in enumerate(self.labels) if i not in excluded)

    def concat(self, other: SystemLayout) -> SystemLayout:
        """Concatenation of two layouts with disjoint labels."""
        collision = set(self.labels) & set(other.labels)
        if collision:
            raise ValueError(f"Cannot combine layouts, labels {sorted(collision)} occur in both.")
        return SystemLayout(self.subsystems + other.subsystems)
