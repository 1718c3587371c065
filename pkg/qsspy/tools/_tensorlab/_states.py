from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigvalsh

from ._layout import SystemLayout

NORM_TOL = 1e-12
STATE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit vector over a :class:`SystemLayout`.

    Attributes:
        layout: Subsystem decomposition of the Hilbert space.
        amplitudes: Complex vector of length ``layout.total_dim``.
    """

    layout: SystemLayout
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape[0] != self.layout.total_dim:
            raise ValueError(
                f"State has {amplitudes.shape[0]} amplitudes but the layout has dimension {self.layout.total_dim}."
            )
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"State vector must have unit norm, got {norm:.15g}.")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_vector(cls, layout: SystemLayout, vector: np.ndarray, normalize: bool = False) -> PureState:
        """Build a state, optionally rescaling ``vector`` to unit norm."""
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(vector)
            if norm == 0:
                raise ValueError("Cannot normalize the zero vector.")
            vector = vector / norm
        return cls(layout, vector)

    @classmethod
    def basis(cls, layout: SystemLayout, digits: tuple[int, ...] | list[int]) -> PureState:
        """Computational basis state ``|digits⟩`` (one digit per subsystem)."""
        if len(digits) != len(layout):
            raise ValueError(f"Expected {len(layout)} digits, got {len(digits)}.")
        vector = np.zeros(layout.total_dim, dtype=complex)
        vector[np.ravel_multi_index(tuple(digits), layout.dims)] = 1.0
        return cls(layout, vector)

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per subsystem."""
        return self.amplitudes.reshape(self.layout.dims)

    def to_density(self) -> DensityOperator:
        return DensityOperator(self.layout, np.outer(self.amplitudes, self.amplitudes.conj()))

    def overlap(self, other: PureState) -> complex:
        """Inner product ``⟨self|other⟩``."""
        if self.layout != other.layout:
            raise ValueError("Cannot compare states over different layouts.")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: PureState) -> float:
        """``|⟨self|other⟩|²``, insensitive to global phase."""
        return abs(self.overlap(other)) ** 2


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace matrix over a :class:`SystemLayout`.

    Attributes:
        layout: Subsystem decomposition of the Hilbert space.
        matrix: Complex square matrix of side ``layout.total_dim``.
    """

    layout: SystemLayout
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        side = self.layout.total_dim
        if matrix.shape != (side, side):
            raise ValueError(f"Density matrix has shape {matrix.shape}, expected ({side}, {side}).")
        deviation = np.max(np.abs(matrix - matrix.conj().T)) if side else 0.0
        if deviation > STATE_TOL:
            raise ValueError(f"Density matrix is not Hermitian (max deviation {deviation:.3g}).")
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > STATE_TOL:
            raise ValueError(f"Density matrix must have unit trace, got {trace:.15g}.")
        smallest = eigvalsh((matrix + matrix.conj().T) / 2, subset_by_index=[0, 0])[0]
        if smallest < -STATE_TOL:
            raise ValueError(f"Density matrix has a negative eigenvalue {smallest:.3g}.")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def maximally_mixed(cls, layout: SystemLayout) -> DensityOperator:
        side = layout.total_dim
        return cls(layout, np.eye(side, dtype=complex) / side)

    @classmethod
    def diagonal(cls, layout: SystemLayout, probs: np.ndarray | list[float]) -> DensityOperator:
        return cls(layout, np.diag(np.asarray(probs, dtype=complex)))

    @property
    def dim(self) -> int:
        return self.layout.total_dim

    @property
    def tensor(self) -> np.ndarray:
        """Matrix reshaped to ``dims + dims`` (row axes first)."""
        dims = self.layout.dims
        return self.matrix.reshape(dims + dims)
