from qsspy.tools._paulistab import StabilizerCode
from qsspy.tools._structures import MSP


def trivial_code() -> StabilizerCode:
    """The one-qubit code without generators; its scheme is the ((1,1)) identity scheme.

    Returns:
        :class:`~qsspy.tools.StabilizerCode` with ``X̄ = X`` and ``Z̄ = Z``.
    """
    return StabilizerCode.from_strings([], "X", "Z", name="trivial")


def five_qubit_code() -> StabilizerCode:
    """The [[5,1,3]] perfect code, basis of a ((3,5)) threshold scheme.

    Generators are the cyclic shifts of ``XZZXI``. The code is validated on construction.

    Returns:
        :class:`~qsspy.tools.StabilizerCode` with ``X̄ = XXXXX`` and ``Z̄ = ZZZZZ``.

    Examples:
        >>> import qsspy as qs
        >>> [g.label for g in qs.dt.five_qubit_code().generators]
        ['XZZXI', 'IXZZX', 'XIXZZ', 'ZXIXZ']
    """
    return StabilizerCode.from_strings(
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], "XXXXX", "ZZZZZ", name="five_qubit"
    )


def repetition_code() -> StabilizerCode:
    """Three-qubit bit-flip code; corrects no phase errors, so its distance is 1."""
    return StabilizerCode.from_strings(["ZZI", "IZZ"], "XXX", "ZZZ", name="repetition")


BUILTIN_CODES = {"trivial": trivial_code, "five_qubit": five_qubit_code, "repetition": repetition_code}


def shamir_msp(t: int, n: int, q: int) -> MSP:
    """Vandermonde span program of Shamir's ``(t, n)`` threshold scheme over ``F_q``.

    Player ``x`` owns the row ``(1, x, ..., x^{t-1})``; any ``t`` rows span ``e_1`` and no ``t - 1`` do.

    Args:
        t: Threshold.
        n: Number of players, at most ``q - 1``.
        q: Prime field order.

    Returns:
        The ``n x t`` span program.

    Examples:
        >>> import qsspy as qs
        >>> qs.dt.shamir_msp(2, 3, 5).matrix.entries.tolist()
        [[1, 1], [1, 2], [1, 3]]
    """
    if not 1 <= t <= n:
        raise ValueError(f"Threshold parameters must satisfy 1 <= t <= n, got t={t}, n={n}.")
    if n > q - 1:
        raise ValueError(f"F_{q} has only {q - 1} nonzero evaluation points, cannot serve {n} players.")
    rows = [[pow(x, k, q) for k in range(t)] for x in range(1, n + 1)]
    return MSP.from_rows(q, rows, list(range(1, n + 1)), n_players=n)


def identity_msp(q: int) -> MSP:
    """Single player owning the single row ``(1)``; the secret is handed over unchanged."""
    return MSP.from_rows(q, [[1]], [1], n_players=1)


def weighted_threshold_msp() -> MSP:
    """Weighted majority over F_2: player 1 has weight 2, players 2 to 4 weight 1, threshold 3 of 5.

    Player 1 owns two rows. The structure is self-dual but not a threshold structure: ``{1, 2}`` is
    authorized while ``{2, 3}`` is not.
    """
    rows = [[0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [1, 1, 1]]
    return MSP.from_rows(2, rows, [1, 1, 2, 3, 4], n_players=4)
