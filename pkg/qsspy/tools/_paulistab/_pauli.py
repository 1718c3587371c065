from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING

import numpy as np

from qsspy.tools._gfield import GFMatrix, PrimeField, rank

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

MAX_DENSE_QUBITS = 7

_LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_LETTER = {bits: letter for letter, bits in _LETTERS.items()}
_PREFIXES = {"": 0, "+": 0, "+1": 0, "i": 1, "+i": 1, "-": 2, "-1": 2, "-i": 3}
_PHASE_NAMES = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}
F2 = PrimeField(2)


@dataclass(frozen=True)
class PauliOperator:
    """Pauli operator ``i^phase · σ(x_1, z_1) ⊗ ... ⊗ σ(x_n, z_n)`` in symplectic form.

    ``σ(1, 0) = X``, ``σ(0, 1) = Z`` and ``σ(1, 1) = Y``, so the letter ``Y`` carries no extra phase.

    Attributes:
        x: X bits, one per qubit.
        z: Z bits, one per qubit.
        phase: Exponent ``k`` of the global factor ``i^k``.
    """

    x: tuple[int, ...]
    z: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise ValueError(f"X and Z parts differ in length ({len(self.x)} vs {len(self.z)}).")
        object.__setattr__(self, "x", tuple(int(b) % 2 for b in self.x))
        object.__setattr__(self, "z", tuple(int(b) % 2 for b in self.z))
        object.__setattr__(self, "phase", int(self.phase) % 4)

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls((0,) * n, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def letters(self) -> str:
        return "".join(_BITS_TO_LETTER[bits] for bits in zip(self.x, self.z, strict=True))

    @property
    def label(self) -> str:
        """Parseable string form, e.g. ``"-XZZXI"``; the ``+`` sign is omitted."""
        prefix = _PHASE_NAMES[self.phase]
        return (prefix if prefix != "+" else "") + self.letters

    @property
    def symplectic(self) -> np.ndarray:
        """The ``2n`` bit vector ``(x | z)``."""
        return np.array(self.x + self.z, dtype=np.int64)

    @property
    def weight(self) -> int:
        return sum(1 for xb, zb in zip(self.x, self.z, strict=True) if xb or zb)

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    def __str__(self) -> str:
        return self.label

    def to_matrix(self) -> np.ndarray:
        """Dense ``2^n x 2^n`` matrix image, qubit 1 being the most significant factor."""
        if self.n > MAX_DENSE_QUBITS:
            raise ValueError(f"Dense matrices are only built for up to {MAX_DENSE_QUBITS} qubits, got {self.n}.")
        factors = [_SINGLE[bits] for bits in zip(self.x, self.z, strict=True)]
        return (1j**self.phase) * reduce(np.kron, factors, np.eye(1, dtype=complex))


def pauli_parse(s: str) -> PauliOperator:
    """Parse a Pauli string such as ``"XZZXI"``, ``"-ZZ"`` or ``"+iY"``.

    Args:
        s: Letters from ``IXYZ`` with an optional sign prefix from ``+``, ``-``, ``i``, ``+i``, ``-i``.

    Returns:
        The parsed operator.

    Examples:
        >>> import qsspy as qs
        >>> p = qs.tl.pauli_parse("-ZZ")
        >>> p.phase, p.z
        (2, (1, 1))
    """
    text = s.strip()
    body_start = len(text) - len(text.lstrip("+-i1"))
    prefix, body = text[:body_start], text[body_start:].upper()
    if prefix not in _PREFIXES:
        raise ValueError(f"Invalid sign prefix {prefix!r} in Pauli string {s!r}.")
    if not body:
        raise ValueError(f"Pauli string {s!r} has no letters.")
    invalid = sorted(set(body) - set(_LETTERS))
    if invalid:
        raise ValueError(f"Invalid character(s) {invalid} in Pauli string {s!r}; allowed are I, X, Y, Z.")
    x = tuple(_LETTERS[letter][0] for letter in body)
    z = tuple(_LETTERS[letter][1] for letter in body)
    return PauliOperator(x, z, _PREFIXES[prefix])


def _check_lengths(ops: Sequence[PauliOperator]) -> None:
    lengths = {op.n for op in ops}
    if len(lengths) > 1:
        raise ValueError(f"Pauli operators act on different numbers of qubits: {sorted(lengths)}.")


def compose(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Operator product ``p · q`` with exact phase bookkeeping."""
    _check_lengths([p, q])
    exponent = p.phase + q.phase
    for x1, z1, x2, z2 in zip(p.x, p.z, q.x, q.z, strict=True):
        if x1 and z1:
            exponent += z2 - x2
        elif x1:
            exponent += z2 * (2 * x2 - 1)
        elif z1:
            exponent += x2 * (1 - 2 * z2)
    x = tuple(a ^ b for a, b in zip(p.x, q.x, strict=True))
    z = tuple(a ^ b for a, b in zip(p.z, q.z, strict=True))
    return PauliOperator(x, z, exponent)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """Symplectic criterion ``x_p · z_q + z_p · x_q = 0 (mod 2)``.

    Examples:
        >>> import qsspy as qs
        >>> qs.tl.commutes(qs.tl.pauli_parse("XZZXI"), qs.tl.pauli_parse("IXZZX"))
        True
    """
    _check_lengths([p, q])
    product = sum(a * b for a, b in zip(p.x, q.z, strict=True)) + sum(a * b for a, b in zip(p.z, q.x, strict=True))
    return product % 2 == 0


def restrict(p: PauliOperator, positions: Iterable[int]) -> PauliOperator:
    """Keep the tensor factors at the given 1-based qubit positions, in the given order.

    The global phase is kept.
    """
    positions = list(positions)
    for position in positions:
        if not 1 <= position <= p.n:
            raise ValueError(f"Position {position} is out of range for a {p.n}-qubit operator.")
    return PauliOperator(
        tuple(p.x[k - 1] for k in positions),
        tuple(p.z[k - 1] for k in positions),
        p.phase,
    )


def symplectic_rank(ops: Sequence[PauliOperator]) -> int:
    """GF(2) rank of the symplectic vectors of ``ops``; phases are ignored."""
    ops = list(ops)
    if not ops:
        return 0
    _check_lengths(ops)
    return rank(GFMatrix(F2, np.vstack([op.symplectic for op in ops])))


def independent(ops: Sequence[PauliOperator]) -> bool:
    """Whether the symplectic vectors of ``ops`` are linearly independent over GF(2)."""
    return symplectic_rank(ops) == len(list(ops))


def _basis_bits(n: int) -> np.ndarray:
    indices = np.arange(2**n)
    return (indices[:, None] >> np.arange(n - 1, -1, -1)) & 1


def apply_pauli(p: PauliOperator, vector: np.ndarray) -> np.ndarray:
    """Apply ``p`` to a ``2^n`` amplitude vector without building its matrix.

    Uses ``σ(x, z)|b⟩ = i^{xz} (-1)^{zb} |b ⊕ x⟩`` on every qubit.
    """
    vector = np.asarray(vector, dtype=complex).reshape(-1)
    if vector.shape[0] != 2**p.n:
        raise ValueError(f"Vector of length {vector.shape[0]} does not match a {p.n}-qubit operator.")
    bits = _basis_bits(p.n)
    signs = 1 - 2 * ((bits @ np.array(p.z, dtype=np.int64)) % 2)
    n_y = sum(a * b for a, b in zip(p.x, p.z, strict=True))
    coefficient = 1j ** ((p.phase + n_y) % 4)
    x_mask = int("".join(map(str, p.x)), 2) if p.n else 0
    result = np.zeros_like(vector)
    result[np.arange(vector.shape[0]) ^ x_mask] = coefficient * signs * vector
    return result
