from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np
from lamin_utils import logger

from qsspy.tools._tensorlab import PureState, SystemLayout

from ._pauli import (
    PauliOperator,
    apply_pauli,
    commutes,
    compose,
    independent,
    pauli_parse,
    restrict,
    symplectic_rank,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

MAX_DISTANCE_QUBITS = 7
SEED_NORM_TOL = 1e-9


@dataclass(frozen=True)
class StabilizerCode:
    """Binary stabilizer code encoding one logical qubit into ``n`` physical qubits.

    Attributes:
        generators: ``n - 1`` commuting, independent stabilizer generators.
        logical_x: Logical X operator.
        logical_z: Logical Z operator.
        name: Identifier used in reports.
    """

    generators: tuple[PauliOperator, ...]
    logical_x: PauliOperator
    logical_z: PauliOperator
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def from_strings(
        cls, generators: Sequence[str], logical_x: str, logical_z: str, name: str = "custom"
    ) -> StabilizerCode:
        """Build a code from Pauli strings and validate it.

        Examples:
            >>> import qsspy as qs
            >>> code = qs.tl.StabilizerCode.from_strings(["ZZI", "IZZ"], "XXX", "ZZZ", name="repetition")
            >>> code.n
            3
        """
        code = cls(
            tuple(pauli_parse(g) for g in generators),
            pauli_parse(logical_x),
            pauli_parse(logical_z),
            name,
        )
        code.validate()
        return code

    @property
    def n(self) -> int:
        return self.logical_x.n

    @property
    def t(self) -> int:
        """Threshold ``(n + 1) / 2`` of the sharing scheme built on an odd-length code."""
        if self.n % 2 == 0:
            raise ValueError(f"Code length {self.n} is even; threshold schemes need n = 2t - 1.")
        return (self.n + 1) // 2

    @property
    def operators(self) -> tuple[PauliOperator, ...]:
        """Generators followed by ``X̄`` and ``Z̄``."""
        return (*self.generators, self.logical_x, self.logical_z)

    def validate(self) -> None:
        """Check every structural requirement of a one-logical-qubit stabilizer code.

        Raises:
            ValueError: naming the first violated requirement.
        """
        lengths = {op.n for op in self.operators}
        if len(lengths) != 1:
            raise ValueError(f"Code {self.name!r}: operators act on different numbers of qubits {sorted(lengths)}.")
        if len(self.generators) != self.n - 1:
            raise ValueError(
                f"Code {self.name!r}: expected {self.n - 1} generators for n={self.n}, got {len(self.generators)}."
            )
        for op in self.operators:
            if not op.is_hermitian:
                raise ValueError(f"Code {self.name!r}: operator {op.label} is not Hermitian.")
        for (i, g), (j, h) in combinations(enumerate(self.generators, start=1), 2):
            if not commutes(g, h):
                raise ValueError(f"Code {self.name!r}: generators {i} ({g.label}) and {j} ({h.label}) anticommute.")
        if not independent(self.generators):
            raise ValueError(f"Code {self.name!r}: generators are not independent.")
        for logical in (self.logical_x, self.logical_z):
            for i, g in enumerate(self.generators, start=1):
                if not commutes(logical, g):
                    raise ValueError(
                        f"Code {self.name!r}: logical {logical.label} anticommutes with generator {i} ({g.label})."
                    )
        if commutes(self.logical_x, self.logical_z):
            raise ValueError(f"Code {self.name!r}: logical X and logical Z must anticommute.")
        if not independent(self.operators):
            raise ValueError(f"Code {self.name!r}: logical operators lie in the span of the generators.")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": [g.label for g in self.generators],
            "logical_x": self.logical_x.label,
            "logical_z": self.logical_z.label,
        }


def _project(code: StabilizerCode, vector: np.ndarray) -> np.ndarray:
    for op in (*code.generators, code.logical_z):
        vector = (vector + apply_pauli(op, vector)) / 2
    return vector


def codewords(code: StabilizerCode) -> tuple[PureState, PureState]:
    """Logical basis ``|0_L⟩, |1_L⟩`` obtained by projecting computational basis seeds.

    ``|0_L⟩`` is the normalized image of ``∏_j (I + G_j)/2 · (I + Z̄)/2`` applied to the first basis
    state with a nonzero image; ``|1_L⟩ = X̄|0_L⟩``. The global phase is fixed by making the largest
    amplitude of ``|0_L⟩`` real and positive.

    Args:
        code: A valid stabilizer code.

    Returns:
        The two codewords over qubits labeled ``qubit_1 .. qubit_n``.

    Examples:
        >>> import qsspy as qs
        >>> zero, one = qs.tl.codewords(qs.dt.trivial_code())
        >>> zero.amplitudes.real.tolist()
        [1.0, 0.0]
    """
    code.validate()
    layout = SystemLayout.uniform([f"qubit_{k}" for k in range(1, code.n + 1)], 2)
    dim = 2**code.n
    for seed in range(dim):
        vector = np.zeros(dim, dtype=complex)
        vector[seed] = 1.0
        image = _project(code, vector)
        norm = np.linalg.norm(image)
        if norm > SEED_NORM_TOL:
            if seed:
                logger.debug(f"Code {code.name!r}: projector image of |0...0⟩ is null, used basis seed {seed}.")
            break
    else:
        raise ValueError(f"Code {code.name!r}: codespace projector annihilates every basis state.")
    image = image / norm
    peak = image[np.argmax(np.abs(image))]
    image = image * (abs(peak) / peak)
    zero = PureState.from_vector(layout, image, normalize=True)
    one = PureState.from_vector(layout, apply_pauli(code.logical_x, image), normalize=True)
    return zero, one


def stabilizer_group(code: StabilizerCode) -> list[PauliOperator]:
    """All ``2^(n-1)`` elements of the stabilizer group, with exact phases.

    Element ``k`` is the product of the generators selected by the bits of ``k`` (generator 1 is the
    least significant bit); element 0 is the identity.
    """
    elements = [PauliOperator.identity(code.n)]
    for g in code.generators:
        elements += [compose(element, g) for element in elements]
    return elements


def _all_symplectic(n: int) -> np.ndarray:
    indices = np.arange(4**n, dtype=np.int64)
    return (indices[:, None] >> np.arange(2 * n - 1, -1, -1)) & 1


def code_distance(code: StabilizerCode) -> int:
    """Minimum weight of a logical operator, by exhaustive enumeration of all ``4^n`` Pauli operators.

    Candidates are operators that commute with every generator but are not (up to phase) in the
    stabilizer group.

    Args:
        code: A valid stabilizer code with ``n <= 7``.

    Returns:
        The code distance.

    Examples:
        >>> import qsspy as qs
        >>> qs.tl.code_distance(qs.dt.five_qubit_code())
        3
    """
    code.validate()
    n = code.n
    if n > MAX_DISTANCE_QUBITS:
        raise ValueError(f"Brute-force distance is limited to {MAX_DISTANCE_QUBITS} qubits, got n={n}.")
    vectors = _all_symplectic(n)
    # swapping the halves turns the symplectic form into a plain dot product
    swapped = np.array(
        [np.concatenate([g.symplectic[n:], g.symplectic[:n]]) for g in code.generators], dtype=np.int64
    ).reshape(-1, 2 * n)
    centralizer = ~np.any((vectors @ swapped.T) % 2, axis=1)
    powers = 1 << np.arange(2 * n - 1, -1, -1)
    group = {int(element.symplectic @ powers) for element in stabilizer_group(code)}
    logical = centralizer & ~np.isin(np.arange(vectors.shape[0]), list(group))
    weights = np.sum(vectors[:, :n] | vectors[:, n:], axis=1)
    return int(weights[logical].min())


def remain_independent(code: StabilizerCode, positions: Iterable[int]) -> bool:
    """Whether ``{G_j, X̄, Z̄}`` restricted to ``positions`` keep the largest possible GF(2) rank.

    Restricted to ``k`` qubits the ``n + 1`` operators live in a ``2k``-dimensional space, so the
    check is ``rank == min(n + 1, 2k)``: literal independence when ``2k >= n + 1``, and spanning the
    whole restricted Pauli space otherwise.

    Args:
        code: A valid stabilizer code.
        positions: 1-based qubit positions.

    Returns:
        True if the restricted operators reach full rank.
    """
    positions = sorted(set(positions))
    if not positions:
        return True
    restricted = [restrict(op, positions) for op in code.operators]
    return symplectic_rank(restricted) == min(len(restricted), 2 * len(positions))


def is_quantum_mds(code: StabilizerCode) -> bool:
    """Quantum Singleton bound ``n - 1 = 2(d - 1)`` met with equality."""
    return code.n - 1 == 2 * (code_distance(code) - 1)
