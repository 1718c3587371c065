import pytest
import qsspy as qs
from pytest import mark


def test_player_subsets_order():
    assert qs.tl.player_subsets(3) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    assert qs.tl.player_subsets(2, include_empty=True)[0] == ()
    assert len(qs.tl.player_subsets(5)) == 31


def test_threshold_structure():
    structure = qs.tl.threshold_structure(3, 5)
    assert len(structure.unauthorized) == 16
    assert structure.is_unauthorized({1, 2})
    assert structure.is_authorized({1, 2, 3})
    assert len(structure.maximal_unauthorized) == 10
    assert len(structure.minimal_authorized) == 10


@mark.parametrize("t,n", [(0, 3), (4, 3), (1, 13)])
def test_threshold_structure_rejects(t, n):
    with pytest.raises(ValueError):
        qs.tl.threshold_structure(t, n)


def test_structure_requires_downward_closure():
    with pytest.raises(ValueError, match="downward closed"):
        qs.tl.AdversaryStructure(3, frozenset({frozenset(), frozenset({1, 2})}))


def test_structure_rejects_unknown_players():
    with pytest.raises(ValueError):
        qs.tl.AdversaryStructure.from_maximal(3, [[4]])
    with pytest.raises(ValueError):
        qs.tl.threshold_structure(2, 3).is_authorized({0})


def test_from_maximal_and_to_dict():
    structure = qs.tl.AdversaryStructure.from_maximal(4, [[1], [2, 3], [2, 4], [3, 4]])
    assert structure.maximal_unauthorized == [(1,), (2, 3), (2, 4), (3, 4)]
    assert structure.minimal_authorized == [(1, 2), (1, 3), (1, 4), (2, 3, 4)]
    assert structure.to_dict() == {"n": 4, "maximal_unauthorized": [[1], [2, 3], [2, 4], [3, 4]]}


@mark.parametrize(
    "t,n,expected",
    [
        (1, 1, True),
        (2, 3, True),
        (3, 5, True),
        (2, 4, False),
        (3, 4, False),
        (1, 3, False),
    ],
)
def test_threshold_self_duality(t, n, expected):
    assert qs.tl.is_self_dual(qs.tl.threshold_structure(t, n)) is expected


def test_msp_validation():
    with pytest.raises(ValueError, match="labels"):
        qs.tl.MSP.from_rows(5, [[1, 1], [1, 2]], [1])
    with pytest.raises(ValueError, match="outside"):
        qs.tl.MSP.from_rows(5, [[1, 1], [1, 2]], [1, 3], n_players=2)
    with pytest.raises(ValueError, match="independent"):
        qs.tl.MSP.from_rows(5, [[1, 1], [2, 2]], [1, 2])
    with pytest.raises(ValueError):
        qs.tl.MSP.from_rows(6, [[1]], [1])


def test_msp_properties(vandermonde_msp):
    assert (vandermonde_msp.q, vandermonde_msp.d, vandermonde_msp.e) == (5, 3, 2)
    assert vandermonde_msp.rows_of({3, 1}) == [0, 2]
    assert vandermonde_msp.submatrix({2}).entries.tolist() == [[1, 2]]


def test_msp_accepts(vandermonde_msp):
    assert qs.tl.msp_accepts(vandermonde_msp, {1, 2})
    assert qs.tl.msp_accepts(vandermonde_msp, {1, 2, 3})
    assert not qs.tl.msp_accepts(vandermonde_msp, {3})
    assert not qs.tl.msp_accepts(vandermonde_msp, set())
    with pytest.raises(ValueError):
        qs.tl.msp_accepts(vandermonde_msp, {4})


def test_msp_structure_of_vandermonde(vandermonde_msp):
    assert qs.tl.msp_structure(vandermonde_msp) == qs.tl.threshold_structure(2, 3)


@mark.parametrize("t,n,q", [(2, 3, 5), (3, 5, 7), (2, 4, 5), (1, 2, 3)])
def test_shamir_msp_realizes_threshold(t, n, q):
    assert qs.tl.msp_structure(qs.dt.shamir_msp(t, n, q)) == qs.tl.threshold_structure(t, n)


def test_msp_structure_with_extra_players():
    structure = qs.tl.msp_structure(qs.dt.identity_msp(3), n=2)
    assert structure.n_players == 2
    assert structure.maximal_unauthorized == [(2,)]
    with pytest.raises(ValueError):
        qs.tl.msp_structure(qs.dt.shamir_msp(2, 3, 5), n=2)


def test_weighted_threshold_structure():
    structure = qs.tl.msp_structure(qs.dt.weighted_threshold_msp())
    assert structure.maximal_unauthorized == [(1,), (2, 3), (2, 4), (3, 4)]
    assert qs.tl.is_self_dual(structure)
    assert all(structure != qs.tl.threshold_structure(t, 4) for t in range(1, 5))


@mark.parametrize("players,expected", [({1, 2}, (2, 1)), ({1}, (1, 2)), ({1, 2, 3}, (2, 0)), (set(), (0, 2))])
def test_ranks(vandermonde_msp, players, expected):
    assert qs.tl.ranks(vandermonde_msp, players) == expected
