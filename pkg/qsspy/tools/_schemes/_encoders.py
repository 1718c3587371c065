from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from lamin_utils import logger
from scipy import sparse

from qsspy.tools._gfield import enumerate_preimage
from qsspy.tools._paulistab import codewords
from qsspy.tools._structures import is_self_dual, msp_accepts, msp_structure, player_subsets, ranks
from qsspy.tools._tensorlab import PureState, SystemLayout

from ._instance import REFERENCE, SchemeInstance, share_label

if TYPE_CHECKING:
    from collections.abc import Iterable

    from qsspy.tools._paulistab import StabilizerCode
    from qsspy.tools._structures import MSP

    from ._secret import SecretSpec


def _scheme_layout(secret_dim: int, share_dims: list[int]) -> SystemLayout:
    pairs = [(REFERENCE, secret_dim)] + [(share_label(k), dim) for k, dim in enumerate(share_dims, start=1)]
    return SystemLayout.from_pairs(pairs)


def _apply_on_shares(secret: SecretSpec, isometry, extra_weight: np.ndarray | None = None) -> np.ndarray:
    """Amplitudes of ``(I_R ⊗ V)(|RS⟩ ⊗ |E⟩)`` with ``|E⟩`` given by ``extra_weight``.

    Row ``r`` of the input block is the unnormalized state attached to ``|r⟩_R``.
    """
    block = np.diag(np.sqrt(secret.probs)).astype(complex)
    if extra_weight is not None:
        block = np.kron(block, extra_weight[None, :])
    return np.asarray((isometry @ block.T).T).reshape(-1)


def stabilizer_isometry(code: StabilizerCode) -> np.ndarray:
    """``V = |0_L⟩⟨0| + |1_L⟩⟨1|`` as a ``2^n x 2`` matrix."""
    zero, one = codewords(code)
    return np.column_stack([zero.amplitudes, one.amplitudes])


def ghz_isometry(n: int) -> np.ndarray:
    """``V = |0...0⟩⟨0| + |1...1⟩⟨1|`` as a ``2^n x 2`` matrix."""
    if n < 1:
        raise ValueError(f"Need at least one player, got n={n}.")
    isometry = np.zeros((2**n, 2), dtype=complex)
    isometry[0, 0] = 1.0
    isometry[-1, 1] = 1.0
    return isometry


def msp_isometry(msp: MSP) -> sparse.csr_array:
    """``V_M |i, a⟩ = |M (i, a)^T⟩`` as a sparse ``q^d x q^e`` 0/1 matrix.

    Columns follow the lexicographic order of ``(i, a)``; rows index the ``d`` share qudits with
    share 1 most significant. Independent columns of ``M`` make every image distinct.
    """
    inputs = msp.field.vectors(msp.e)
    images = msp.matrix.apply(inputs)
    rows = np.ravel_multi_index(tuple(images.T), (msp.q,) * msp.d)
    data = np.ones(len(inputs), dtype=complex)
    return sparse.csr_array((data, (rows, np.arange(len(inputs)))), shape=(msp.q**msp.d, msp.q**msp.e))


def encode_stabilizer_qts(code: StabilizerCode, secret: SecretSpec) -> SchemeInstance:
    """Share a qubit secret with a ``((t, 2t-1))`` threshold scheme built on a stabilizer code.

    The global state is ``√α_0 |0⟩_R |0_L⟩ + √α_1 |1⟩_R |1_L⟩``; qubit ``k`` goes to player ``k``.

    Args:
        code: Valid stabilizer code of odd length ``n = 2t - 1``.
        secret: Qubit secret.

    Returns:
        The pure scheme of kind ``"stabilizer"``.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_stabilizer_qts(qs.dt.five_qubit_code(), qs.tl.SecretSpec.uniform(2))
        >>> scheme.state.layout.total_dim
        64
    """
    if secret.dim != 2:
        raise ValueError(f"Stabilizer schemes share qubit secrets, got dimension {secret.dim}.")
    t = code.t
    amplitudes = _apply_on_shares(secret, stabilizer_isometry(code))
    layout = _scheme_layout(2, [2] * code.n)
    ownership = {share_label(k): k for k in range(1, code.n + 1)}
    logger.info(f"Encoded a (({t},{code.n})) stabilizer scheme with code {code.name!r}.")
    return SchemeInstance(
        PureState(layout, amplitudes), ownership, "stabilizer", secret, {"t": t, "n": code.n, "code": code.name}
    )


def _self_dual_violation(msp: MSP) -> tuple[int, ...] | None:
    players = set(range(1, msp.n_players + 1))
    for subset in player_subsets(msp.n_players, include_empty=True):
        if msp_accepts(msp, subset) == msp_accepts(msp, players - set(subset)):
            return subset
    return None


def encode_msp(msp: MSP, secret: SecretSpec) -> SchemeInstance:
    """Share a ``q``-dimensional secret through a monotone span program.

    Builds ``(I_R ⊗ V_M)(|RS⟩ ⊗ |E⟩)`` with ``|E⟩ = q^{-(e-1)/2} Σ_a |a⟩``. Row ``r`` of ``M`` becomes
    the qudit ``share_r``, owned by player ``labels[r]``.

    Args:
        msp: Span program whose induced structure is self-dual.
        secret: Secret of dimension ``q``.

    Returns:
        The pure scheme of kind ``"msp"``.

    Examples:
        >>> import qsspy as qs
        >>> scheme = qs.tl.encode_msp(qs.dt.shamir_msp(2, 3, 5), qs.tl.SecretSpec.uniform(5))
        >>> scheme.state.layout.total_dim
        625
    """
    if secret.dim != msp.q:
        raise ValueError(f"Secret dimension {secret.dim} does not match the field order {msp.q}.")
    structure = msp_structure(msp)
    if not is_self_dual(structure):
        witness = _self_dual_violation(msp)
        status = "authorized" if msp_accepts(msp, witness) else "unauthorized"
        raise ValueError(
            f"MSP structure is not self-dual: {list(witness)} and its complement are both {status}."
        )
    layout = _scheme_layout(msp.q, [msp.q] * msp.d)
    randomness = np.full(msp.q ** (msp.e - 1), msp.q ** (-(msp.e - 1) / 2), dtype=complex)
    amplitudes = _apply_on_shares(secret, msp_isometry(msp), randomness)
    ownership = {share_label(r): player for r, player in enumerate(msp.labels, start=1)}
    logger.info(f"Encoded an MSP scheme over F_{msp.q} with {msp.d} shares for {msp.n_players} players.")
    return SchemeInstance(
        PureState(layout, amplitudes),
        ownership,
        "msp",
        secret,
        {"q": msp.q, "d": msp.d, "e": msp.e, "n": msp.n_players, "msp": msp},
        roster=tuple(range(1, msp.n_players + 1)),
    )


def msp_eigensystem(msp: MSP, secret: SecretSpec, players: Iterable[int]) -> list[tuple[float, PureState]]:
    """Distinct eigenpairs of ``ρ_A`` for an authorized set ``A`` of an MSP scheme.

    For every secret value ``i`` and every value ``x`` the complement ``B`` can hold, the inputs
    ``(i, a)`` with ``M_B (i, a)^T = x`` give the unit vector ``|φ_x^i⟩`` over ``A``'s qudits. Repeated
    vectors are dropped, leaving ``q^{m+l-e}`` eigenvectors per ``i``, each with eigenvalue
    ``α_i / q^{m+l-e}``.

    Args:
        msp: Span program of the scheme.
        secret: The shared secret.
        players: Authorized player set ``A``.

    Returns:
        ``(eigenvalue, eigenvector)`` pairs ordered by ``i`` and then by first appearance over ``a``.
    """
    players = set(players)
    if not msp_accepts(msp, players):
        raise ValueError(f"Players {sorted(players)} are not authorized; the eigenvectors need an authorized set.")
    if secret.dim != msp.q:
        raise ValueError(f"Secret dimension {secret.dim} does not match the field order {msp.q}.")
    rows_a = msp.rows_of(players)
    rows_b = [r for r in range(msp.d) if r not in rows_a]
    l, m = ranks(msp, players)
    multiplicity_exponent = m + l - msp.e
    layout = SystemLayout.uniform([share_label(r + 1) for r in rows_a], msp.q)
    m_a = msp.matrix.select_rows(rows_a)
    m_b = msp.matrix.select_rows(rows_b)
    tails = msp.field.vectors(msp.e - 1)
    pairs: list[tuple[float, PureState]] = []
    for i in range(msp.q):
        inputs = np.hstack([np.full((tails.shape[0], 1), i, dtype=np.int64), tails])
        # values of B in order of first appearance over a
        held_by_b = dict.fromkeys(tuple(x) for x in m_b.apply(inputs))
        seen: set[tuple[int, ...]] = set()
        for x in held_by_b:
            preimage = np.array(enumerate_preimage(m_b, i, x), dtype=np.int64).reshape(-1, msp.e)
            images = m_a.apply(preimage)
            key = tuple(sorted(int(j) for j in np.ravel_multi_index(tuple(images.T), (msp.q,) * len(rows_a))))
            if key in seen:
                continue
            seen.add(key)
            vector = np.zeros(layout.total_dim, dtype=complex)
            vector[list(key)] = 1.0 / np.sqrt(len(key))
            pairs.append((float(secret.probs[i] / msp.q**multiplicity_exponent), PureState(layout, vector)))
    return pairs


def encode_ghz_direct(n: int, secret: SecretSpec) -> SchemeInstance:
    """Share a qubit secret as ``√α_0 |0⟩_R |0...0⟩ + √α_1 |1⟩_R |1...1⟩``, one qubit per player.

    Examples:
        >>> import qsspy as qs
        >>> qs.tl.encode_ghz_direct(2, qs.tl.SecretSpec.uniform(2)).state.amplitudes.nonzero()[0].tolist()
        [0, 7]
    """
    if secret.dim != 2:
        raise ValueError(f"GHZ schemes share qubit secrets, got dimension {secret.dim}.")
    amplitudes = _apply_on_shares(secret, ghz_isometry(n))
    ownership = {share_label(k): k for k in range(1, n + 1)}
    return SchemeInstance(PureState(_scheme_layout(2, [2] * n), amplitudes), ownership, "ghz", secret, {"n": n})
