"""Exact arithmetic and Gaussian elimination over prime fields."""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from functools import cached_property
from math import isqrt

import numpy as np

MAX_ORDER = 97


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, isqrt(q) + 1))


@dataclass(frozen=True)
class PrimeField:
    """The field F_q of residues modulo a prime ``q``.

    Elements are canonical residues ``0..q-1``.

    Attributes:
        q: Field order.
    """

    q: int

    def __post_init__(self):
        if int(self.q) != self.q or not _is_prime(int(self.q)):
            raise ValueError(f"Field order must be a prime, got {self.q}.")
        if self.q > MAX_ORDER:
            raise ValueError(f"Field order {self.q} exceeds the supported maximum of {MAX_ORDER}.")

    def reduce(self, values) -> np.ndarray:
        return np.mod(np.asarray(values, dtype=np.int64), self.q)

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ValueError("Zero has no multiplicative inverse.")
        return pow(int(a), -1, self.q)

    def vectors(self, length: int) -> np.ndarray:
        """All vectors of F_q^length in lexicographic order, one per row."""
        if length == 0:
            return np.zeros((1, 0), dtype=np.int64)
        return np.array(list(itertools.product(range(self.q), repeat=length)), dtype=np.int64)


@dataclass(frozen=True, eq=False)
class GFMatrix:
    """A ``d x e`` matrix over a prime field. ``d`` may be zero (empty matrix).

    Attributes:
        field: The prime field of the entries.
        entries: Integer array of shape ``(d, e)`` reduced mod q.
    """

    field: PrimeField
    entries: np.ndarray = dataclasses.field(repr=False)

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.int64)
        if entries.ndim != 2:
            raise ValueError(f"Matrix entries must be two-dimensional, got shape {entries.shape}.")
        entries = np.mod(entries, self.field.q)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, field: PrimeField, rows, cols: int | None = None) -> GFMatrix:
        rows = [list(row) for row in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        lengths = {len(row) for row in rows}
        if len(lengths) != 1:
            raise ValueError(f"All rows must have the same length, got lengths {sorted(lengths)}.")
        return cls(field, np.array(rows, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.entries.shape, self.entries.tobytes()))

    def transpose(self) -> GFMatrix:
        return GFMatrix(self.field, self.entries.T)

    def select_rows(self, indices) -> GFMatrix:
        indices = list(indices)
        return GFMatrix(self.field, self.entries[indices, :].reshape(len(indices), self.cols))

    def apply(self, vectors: np.ndarray) -> np.ndarray:
        """``M v`` for each row ``v`` of ``vectors``; returns one image per row."""
        vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        return np.mod(vectors @ self.entries.T, self.field.q)

    @cached_property
    def _echelon(self) -> tuple[np.ndarray, tuple[int, ...]]:
        return row_reduce(self.entries, self.field)


def row_reduce(entries: np.ndarray, field: PrimeField) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over F_q with first-nonzero pivoting.

    Args:
        entries: Integer matrix.
        field: Field to reduce over.

    Returns:
        The reduced matrix and the tuple of pivot columns.
    """
    q = field.q
    reduced = np.mod(np.array(entries, dtype=np.int64), q)
    n_rows, n_cols = reduced.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        nonzero = np.nonzero(reduced[row:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]
        reduced[row] = np.mod(reduced[row] * field.inv(int(reduced[row, col])), q)
        factors = reduced[:, col].copy()
        factors[row] = 0
        reduced = np.mod(reduced - np.outer(factors, reduced[row]), q)
        pivots.append(col)
        row += 1
    return reduced, tuple(pivots)


def rank(m: GFMatrix) -> int:
    """Row rank of ``m`` by Gaussian elimination. The empty matrix has rank 0.

    Examples:
        >>> import qsspy as qs
        >>> f5 = qs.tl.PrimeField(5)
        >>> qs.tl.rank(qs.tl.GFMatrix.from_rows(f5, [[1, 1], [1, 2], [1, 3]]))
        2
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(m._echelon[1])


def columns_independent(m: GFMatrix) -> bool:
    """Whether the columns of ``m`` are linearly independent, i.e. ``ker m = {0}``."""
    return m.cols > 0 and rank(m.transpose()) == m.cols


def in_row_span(m: GFMatrix, v) -> tuple[bool, np.ndarray | None]:
    """Decide whether ``v`` is a combination ``λ M`` of the rows of ``m``.

    Args:
        m: Matrix whose rows span the candidate space.
        v: Target vector of length ``m.cols``.

    Returns:
        ``(True, λ)`` with a witness satisfying ``λ M = v``, or ``(False, None)``.

    Examples:
        >>> import qsspy as qs
        >>> f5 = qs.tl.PrimeField(5)
        >>> ok, witness = qs.tl.in_row_span(qs.tl.GFMatrix.from_rows(f5, [[1, 1], [1, 2]]), [1, 0])
        >>> ok, witness.tolist()
        (True, [2, 4])
    """
    v = m.field.reduce(v).reshape(-1)
    if v.shape[0] != m.cols:
        raise ValueError(f"Vector has length {v.shape[0]} but the matrix has {m.cols} columns.")
    if not v.any():
        return True, np.zeros(m.rows, dtype=np.int64)
    if m.rows == 0:
        return False, None
    # solve M^T λ^T = v^T on the augmented system
    augmented = np.hstack([m.entries.T, v[:, None]])
    reduced, pivots = row_reduce(augmented, m.field)
    if m.rows in pivots:
        return False, None
    witness = np.zeros(m.rows, dtype=np.int64)
    for r, col in enumerate(pivots):
        witness[col] = reduced[r, -1]
    return True, witness


def enumerate_preimage(m: GFMatrix, fixed_first: int, target) -> list[np.ndarray]:
    """All ``(i, a)`` with first coordinate ``i = fixed_first`` and ``m (i, a)^T = target``.

    A matrix without rows imposes no constraint, so every ``(i, a)`` is returned.

    Args:
        m: Constraint matrix with ``e`` columns.
        fixed_first: Value of the first coordinate.
        target: Right-hand side of length ``m.rows``.

    Returns:
        Solutions of length ``e`` in lexicographic order of ``a``.
    """
    target = m.field.reduce(target).reshape(-1)
    if target.shape[0] != m.rows:
        raise ValueError(f"Target has length {target.shape[0]} but the matrix has {m.rows} rows.")
    tails = m.field.vectors(m.cols - 1)
    candidates = np.hstack([np.full((tails.shape[0], 1), fixed_first % m.field.q, dtype=np.int64), tails])
    if m.rows == 0:
        return list(candidates)
    matches = np.all(m.apply(candidates) == target, axis=1)
    return list(candidates[matches])
