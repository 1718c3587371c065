from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from lamin_utils import logger
from scipy.linalg import eigh, eigvalsh
from scipy.special import entr

from ._layout import SystemLayout
from ._states import STATE_TOL, DensityOperator, PureState

if TYPE_CHECKING:
    from collections.abc import Iterable

CLIP_TOL = 1e-12

State = PureState | DensityOperator


def _label_set(layout: SystemLayout, labels: Iterable[str], name: str = "labels") -> tuple[str, ...]:
    labels = tuple(dict.fromkeys([labels] if isinstance(labels, str) else labels))
    for label in labels:
        layout.index(label)
    if not labels:
        raise ValueError(f"The set of {name} must not be empty.")
    return labels


def tensor(a: State, b: State) -> State:
    """Tensor product with ``a``'s subsystems first.

    Args:
        a: Left factor.
        b: Right factor of the same kind as ``a``.

    Returns:
        State over the concatenated layout.

    Examples:
        >>> import qsspy as qs
        >>> zero = qs.tl.PureState.basis(qs.tl.SystemLayout.from_pairs([("A", 2)]), [0])
        >>> one = qs.tl.PureState.basis(qs.tl.SystemLayout.from_pairs([("B", 2)]), [1])
        >>> qs.tl.tensor(zero, one).amplitudes.argmax()
        1
    """
    layout = a.layout.concat(b.layout)
    if isinstance(a, PureState) and isinstance(b, PureState):
        return PureState(layout, np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, DensityOperator) and isinstance(b, DensityOperator):
        return DensityOperator(layout, np.kron(a.matrix, b.matrix))
    raise TypeError(f"Cannot tensor a {type(a).__name__} with a {type(b).__name__}.")


def _reduced_matrix(state: State, keep_positions: list[int]) -> np.ndarray:
    dims = state.layout.dims
    rest_positions = [i for i in range(len(dims)) if i not in keep_positions]
    keep_dim = int(np.prod([dims[i] for i in keep_positions]))
    rest_dim = int(np.prod([dims[i] for i in rest_positions]))
    if isinstance(state, PureState):
        psi = state.tensor.transpose(keep_positions + rest_positions).reshape(keep_dim, rest_dim)
        return psi @ psi.conj().T
    m = len(dims)
    perm = keep_positions + rest_positions + [m + i for i in keep_positions] + [m + i for i in rest_positions]
    blocks = state.tensor.transpose(perm).reshape(keep_dim, rest_dim, keep_dim, rest_dim)
    return np.einsum("ijkj->ik", blocks)


def partial_trace(rho: State, keep: Iterable[str]) -> DensityOperator:
    """Reduced state on the ``keep`` subsystems.

    Pure states are reduced directly from their amplitudes, without forming the global density matrix.

    Args:
        rho: Global state.
        keep: Labels to keep. The result lists them in the original layout order.

    Returns:
        The reduced density operator.

    Examples:
        >>> import numpy as np
        >>> import qsspy as qs
        >>> layout = qs.tl.SystemLayout.uniform(["A", "B"], 2)
        >>> bell = qs.tl.PureState(layout, np.array([1, 0, 0, 1]) / np.sqrt(2))
        >>> qs.tl.partial_trace(bell, ["A"]).matrix.real
        array([[0.5, 0. ],
               [0. , 0.5]])
    """
    keep = _label_set(rho.layout, keep, "kept labels")
    positions = rho.layout.positions(keep)
    sublayout = rho.layout.sublayout(keep)
    if len(positions) == len(rho.layout) and isinstance(rho, DensityOperator):
        return rho
    matrix = _reduced_matrix(rho, positions)
    return DensityOperator(sublayout, (matrix + matrix.conj().T) / 2)


def eig_hermitian(rho: DensityOperator | np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian operator in descending order.

    Eigenvalues in ``[-1e-10, 1e-12)`` are clipped to zero; anything below ``-1e-10`` is rejected.

    Args:
        rho: Density operator or a square Hermitian matrix.

    Returns:
        Eigenvalues sorted from largest to smallest.
    """
    matrix = rho.matrix if isinstance(rho, DensityOperator) else np.asarray(rho, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}.")
    deviation = np.max(np.abs(matrix - matrix.conj().T))
    if deviation > STATE_TOL:
        raise ValueError(f"Matrix is not Hermitian (max deviation {deviation:.3g}).")
    eigenvalues = eigvalsh((matrix + matrix.conj().T) / 2)[::-1].copy()
    if eigenvalues[-1] < -STATE_TOL:
        raise ValueError(f"Operator has a negative eigenvalue {eigenvalues[-1]:.3g}.")
    small = eigenvalues < CLIP_TOL
    if np.any(eigenvalues[small] < -CLIP_TOL):
        logger.debug(f"Clipping {int(small.sum())} eigenvalues down to {eigenvalues[-1]:.3g} to zero.")
    eigenvalues[small] = 0.0
    return eigenvalues


def von_neumann_entropy(rho: DensityOperator) -> float:
    """Von Neumann entropy in bits.

    Args:
        rho: Density operator.

    Returns:
        ``-Σ λ log2 λ`` over the clipped spectrum.
    """
    entropy = float(entr(eig_hermitian(rho)).sum() / np.log(2))
    return max(entropy, 0.0)


def subsystem_entropy(state: State, labels: Iterable[str]) -> float:
    """Entropy in bits of the subsystems ``labels`` of ``state``.

    The empty set has zero entropy. For pure states the smaller of the two sides is reduced,
    since both sides of a pure bipartition share the same spectrum.
    """
    labels = tuple(dict.fromkeys([labels] if isinstance(labels, str) else labels))
    if not labels:
        return 0.0
    for label in labels:
        state.layout.index(label)
    if isinstance(state, PureState):
        rest = state.layout.complement(labels)
        if not rest:
            return 0.0
        if state.layout.sublayout(rest).total_dim < state.layout.sublayout(labels).total_dim:
            labels = rest
    return von_neumann_entropy(partial_trace(state, labels))


def mutual_information(state: State, a: Iterable[str], b: Iterable[str]) -> float:
    """Quantum mutual information ``S(A) + S(B) - S(AB)`` in bits.

    Args:
        state: Global state.
        a: Labels of the first party.
        b: Labels of the second party, disjoint from ``a``.

    Returns:
        The mutual information. Round-off can leave it marginally below zero.

    Examples:
        >>> import numpy as np
        >>> import qsspy as qs
        >>> layout = qs.tl.SystemLayout.uniform(["A", "B"], 2)
        >>> bell = qs.tl.PureState(layout, np.array([1, 0, 0, 1]) / np.sqrt(2))
        >>> round(qs.tl.mutual_information(bell, ["A"], ["B"]), 6)
        2.0
    """
    a = _label_set(state.layout, a, "labels of the first party")
    b = _label_set(state.layout, b, "labels of the second party")
    overlap = set(a) & set(b)
    if overlap:
        raise ValueError(f"Parties must be disjoint, {sorted(overlap)} occur in both.")
    return subsystem_entropy(state, a) + subsystem_entropy(state, b) - subsystem_entropy(state, a + b)


def purify(rho: DensityOperator, ref_label: str = "R") -> PureState:
    """Purification ``Σ_i √λ_i |i⟩_R |v_i⟩`` with the reference as the first subsystem.

    A diagonal ``rho`` is purified in its computational basis, giving ``Σ_i √α_i |i⟩|i⟩``.
    Otherwise the eigenpairs are assigned to reference basis states by decreasing eigenvalue.

    Args:
        rho: State to purify.
        ref_label: Label of the new reference subsystem, of dimension ``rho.dim``.

    Returns:
        Pure state over ``[ref_label] + rho.layout``.
    """
    layout = SystemLayout(((ref_label, rho.dim),)).concat(rho.layout)
    off_diagonal = rho.matrix - np.diag(np.diag(rho.matrix))
    if np.max(np.abs(off_diagonal), initial=0.0) <= STATE_TOL:
        weights = np.clip(np.diag(rho.matrix).real, 0.0, None)
        vectors = np.eye(rho.dim, dtype=complex)
    else:
        weights, vectors = eigh(rho.matrix)
        weights, vectors = np.clip(weights[::-1], 0.0, None), vectors[:, ::-1]
    # row i is the reference basis state |i⟩, columns run over the purified system
    amplitudes = (np.sqrt(weights)[:, None] * vectors.T).reshape(-1)
    return PureState.from_vector(layout, amplitudes, normalize=True)


def _permuted_matrix(rho: DensityOperator, order: list[int]) -> np.ndarray:
    m = len(rho.layout)
    side = rho.dim
    return rho.tensor.transpose(order + [m + i for i in order]).reshape(side, side)


def is_product(state: State, partition: tuple[Iterable[str], Iterable[str]], tol: float = 1e-8) -> bool:
    """Whether ``state`` factorizes as ``ρ_A ⊗ ρ_B`` across ``partition``.

    Args:
        state: Global state.
        partition: Two disjoint label sets covering the whole layout.
        tol: Threshold on the largest entry of ``ρ_AB - ρ_A ⊗ ρ_B``.

    Returns:
        True if the state is a product across the partition.
    """
    a = _label_set(state.layout, partition[0], "labels of the first part")
    b = _label_set(state.layout, partition[1], "labels of the second part")
    if set(a) & set(b) or set(a) | set(b) != set(state.layout.labels):
        raise ValueError("Partition must split the layout labels into two disjoint sets covering all of them.")
    rho = state.to_density() if isinstance(state, PureState) else state
    a_sorted, b_sorted = rho.layout.sublayout(a).labels, rho.layout.sublayout(b).labels
    joint = _permuted_matrix(rho, rho.layout.positions(a_sorted) + rho.layout.positions(b_sorted))
    product = np.kron(partial_trace(rho, a_sorted).matrix, partial_trace(rho, b_sorted).matrix)
    return bool(np.max(np.abs(joint - product)) < tol)


def random_state(layout: SystemLayout, rng: np.random.Generator | int | None = None) -> PureState:
    """Haar-random pure state drawn from normalized complex Gaussian amplitudes."""
    rng = np.random.default_rng(rng)
    vector = rng.normal(size=layout.total_dim) + 1j * rng.normal(size=layout.total_dim)
    return PureState.from_vector(layout, vector, normalize=True)


def random_density(
    layout: SystemLayout, rank: int | None = None, rng: np.random.Generator | int | None = None
) -> DensityOperator:
    """Random mixed state ``G G† / tr(G G†)`` with ``G`` a complex Gaussian matrix of the given rank."""
    rng = np.random.default_rng(rng)
    side = layout.total_dim
    rank = side if rank is None else rank
    g = rng.normal(size=(side, rank)) + 1j * rng.normal(size=(side, rank))
    matrix = g @ g.conj().T
    matrix = (matrix + matrix.conj().T) / 2
    return DensityOperator(layout, matrix / np.trace(matrix).real)
