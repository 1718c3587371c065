from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import entr

from qsspy.tools._tensorlab import DensityOperator, PureState, SystemLayout

PROB_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SecretSpec:
    """Diagonal secret ``ρ_S = Σ_i α_i |i⟩⟨i|`` of dimension ``dim``.

    Attributes:
        dim: Secret dimension, at least 2.
        probs: The eigenvalues ``α_i``; nonnegative and summing to 1.
    """

    dim: int
    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        probs = np.array(self.probs, dtype=float).reshape(-1)
        if self.dim < 2:
            raise ValueError(f"Secret dimension must be at least 2, got {self.dim}.")
        if probs.shape[0] != self.dim:
            raise ValueError(f"Secret of dimension {self.dim} needs {self.dim} probabilities, got {probs.shape[0]}.")
        if np.any(probs < 0):
            raise ValueError(f"Secret probabilities must be nonnegative, got {probs.tolist()}.")
        if abs(probs.sum() - 1.0) > PROB_TOL:
            raise ValueError(f"Secret probabilities must sum to 1, got {probs.sum():.15g}.")
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, dim: int) -> SecretSpec:
        return cls(dim, np.full(dim, 1.0 / dim))

    @classmethod
    def deterministic(cls, dim: int, value: int = 0) -> SecretSpec:
        probs = np.zeros(dim)
        probs[value] = 1.0
        return cls(dim, probs)

    @classmethod
    def random(cls, dim: int, rng: np.random.Generator | int | None = None) -> SecretSpec:
        """Probabilities drawn uniformly from the simplex."""
        rng = np.random.default_rng(rng)
        return cls(dim, rng.dirichlet(np.ones(dim)))

    @property
    def entropy(self) -> float:
        """``S(S)`` in bits."""
        return float(entr(self.probs).sum() / np.log(2))

    def density(self, label: str = "S") -> DensityOperator:
        return DensityOperator.diagonal(SystemLayout(((label, self.dim),)), self.probs)

    def reference_state(self, ref_label: str = "R", label: str = "S") -> PureState:
        """``|RS⟩ = Σ_i √α_i |i⟩_R |i⟩_S``."""
        layout = SystemLayout(((ref_label, self.dim), (label, self.dim)))
        return PureState(layout, np.diag(np.sqrt(self.probs)).reshape(-1))

    def to_dict(self) -> dict:
        return {"dim": self.dim, "probs": self.probs.tolist()}
