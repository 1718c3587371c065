import numpy as np
import pytest
import qsspy as qs
from pytest import fixture, mark


@fixture
def f5():
    return qs.tl.PrimeField(5)


@fixture
def vandermonde(f5):
    return qs.tl.GFMatrix.from_rows(f5, [[1, 1], [1, 2], [1, 3]])


@mark.parametrize("q", [0, 1, 4, 9, 101])
def test_field_rejects_invalid_orders(q):
    with pytest.raises(ValueError):
        qs.tl.PrimeField(q)


def test_field_inverse(f5):
    assert [f5.inv(a) for a in range(1, 5)] == [1, 3, 2, 4]
    with pytest.raises(ValueError):
        f5.inv(0)


def test_field_vectors(f5):
    vectors = f5.vectors(2)
    assert vectors.shape == (25, 2)
    assert vectors[0].tolist() == [0, 0]
    assert vectors[-1].tolist() == [4, 4]
    assert f5.vectors(0).shape == (1, 0)


def test_matrix_entries_are_reduced(f5):
    m = qs.tl.GFMatrix.from_rows(f5, [[6, -1]])
    assert m.entries.tolist() == [[1, 4]]


def test_matrix_rejects_ragged_rows(f5):
    with pytest.raises(ValueError):
        qs.tl.GFMatrix.from_rows(f5, [[1, 2], [1]])


def test_rank_vandermonde(vandermonde):
    assert qs.tl.rank(vandermonde) == 2


def test_rank_of_empty_matrix(f5):
    assert qs.tl.rank(qs.tl.GFMatrix.from_rows(f5, [], cols=3)) == 0


def test_row_reduce_pivots(f5):
    reduced, pivots = qs.tl.row_reduce(np.array([[0, 2, 4], [0, 1, 2], [3, 0, 1]]), f5)
    assert pivots == (0, 1)
    assert reduced[:2].tolist() == [[1, 0, 2], [0, 1, 2]]
    assert not reduced[2].any()


def test_in_row_span_witness(f5):
    m = qs.tl.GFMatrix.from_rows(f5, [[1, 1], [1, 2]])
    ok, witness = qs.tl.in_row_span(m, [1, 0])
    assert ok
    assert witness.tolist() == [2, 4]
    assert (np.mod(witness @ m.entries, 5) == [1, 0]).all()


def test_in_row_span_rejects_target(f5):
    ok, witness = qs.tl.in_row_span(qs.tl.GFMatrix.from_rows(f5, [[1, 1]]), [1, 0])
    assert not ok
    assert witness is None


def test_in_row_span_of_empty_matrix(f5):
    empty = qs.tl.GFMatrix.from_rows(f5, [], cols=2)
    assert not qs.tl.in_row_span(empty, [1, 0])[0]
    assert qs.tl.in_row_span(empty, [0, 0])[0]


def test_in_row_span_length_mismatch(vandermonde):
    with pytest.raises(ValueError):
        qs.tl.in_row_span(vandermonde, [1, 0, 0])


def test_in_row_span_random_combinations(rng):
    field = qs.tl.PrimeField(7)
    for _ in range(20):
        m = qs.tl.GFMatrix(field, rng.integers(0, 7, size=(3, 5)))
        coefficients = rng.integers(0, 7, size=3)
        ok, witness = qs.tl.in_row_span(m, coefficients @ m.entries)
        assert ok
        assert np.array_equal(np.mod(witness @ m.entries, 7), np.mod(coefficients @ m.entries, 7))


@mark.parametrize(
    "rows,expected",
    [
        ([[1, 1], [1, 2], [1, 3]], True),
        ([[1, 1], [2, 2]], False),
        ([[0]], False),
        ([[1]], True),
    ],
)
def test_columns_independent(f5, rows, expected):
    assert qs.tl.columns_independent(qs.tl.GFMatrix.from_rows(f5, rows)) is expected


def test_enumerate_preimage_single_solution(f5):
    solutions = qs.tl.enumerate_preimage(qs.tl.GFMatrix.from_rows(f5, [[1, 1]]), 2, [3])
    assert [s.tolist() for s in solutions] == [[2, 1]]


def test_enumerate_preimage_without_constraints(f5):
    solutions = qs.tl.enumerate_preimage(qs.tl.GFMatrix.from_rows(f5, [], cols=3), 4, [])
    assert len(solutions) == 25
    assert all(s[0] == 4 for s in solutions)


def test_enumerate_preimage_inconsistent(f5):
    m = qs.tl.GFMatrix.from_rows(f5, [[0, 1], [0, 1]])
    assert qs.tl.enumerate_preimage(m, 0, [1, 2]) == []


def test_enumerate_preimage_count_matches_rank(f5):
    m = qs.tl.GFMatrix.from_rows(f5, [[1, 1, 0], [0, 1, 1]])
    solutions = qs.tl.enumerate_preimage(m, 1, [2, 3])
    # one free coordinate after fixing the first
    assert len(solutions) == 1
    assert np.array_equal(m.apply(solutions[0])[0], [2, 3])


@mark.parametrize("q,shape", [(2, (4, 3)), (5, (3, 5)), (7, (4, 4))])
def test_rank_equals_rank_of_transpose(q, shape, rng):
    field = qs.tl.PrimeField(q)
    for _ in range(10):
        m = qs.tl.GFMatrix(field, rng.integers(0, q, size=shape))
        assert qs.tl.rank(m) == qs.tl.rank(m.transpose())
        assert qs.tl.rank(m) <= min(shape)


@mark.parametrize("q,shape", [(3, (2, 3)), (5, (1, 2)), (2, (3, 3))])
def test_preimages_partition_the_input_space(q, shape, rng):
    field = qs.tl.PrimeField(q)
    m = qs.tl.GFMatrix(field, rng.integers(0, q, size=shape))
    solutions = [
        tuple(s.tolist())
        for i in range(q)
        for target in field.vectors(shape[0])
        for s in qs.tl.enumerate_preimage(m, i, target)
    ]
    assert len(solutions) == q ** shape[1]
    assert set(solutions) == {tuple(v.tolist()) for v in field.vectors(shape[1])}
