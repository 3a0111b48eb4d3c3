import pytest

from src.scalars.cyclo import zeta_power
from src.utils.errors import DivisionByZero
from src.utils.linalg import (
    identity,
    inverse,
    mat_mul,
    mat_vec,
    matrices_equal,
    nullspace,
    rank,
    row_reduce,
    solve_in_span,
    to_matrix,
)
from src.utils.sampling import box_schedule, integer_point, make_rng


def test_row_reduce_drops_zero_rows():
    mat = to_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    reduced, pivots = row_reduce(mat)
    assert pivots == [0, 1]
    assert reduced == to_matrix([[1, 0, 1], [0, 1, 1]])
    assert rank(mat) == 2


def test_nullspace_is_annihilated():
    mat = to_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    kernel = nullspace(mat)
    assert len(kernel) == 1
    assert all(not x for x in mat_vec(mat, kernel[0]))


def test_inverse_over_cyclotomic_field():
    z = zeta_power(3, 1)
    mat = to_matrix([[1, z], [z, 1]])
    inv = inverse(mat)
    assert matrices_equal(mat_mul(mat, inv), identity(2))
    with pytest.raises(DivisionByZero):
        inverse(to_matrix([[1, 2], [2, 4]]))


def test_solve_in_span():
    vectors = [to_matrix([[1, 0, 1]])[0], to_matrix([[0, 1, 1]])[0]]
    coeffs = solve_in_span(vectors, to_matrix([[2, 3, 5]])[0])
    assert coeffs == to_matrix([[2, 3]])[0]
    assert solve_in_span(vectors, to_matrix([[1, 1, 0]])[0]) is None


def test_sampling_is_seeded():
    first = integer_point(make_rng(7), 5, 3)
    second = integer_point(make_rng(7), 5, 3)
    assert first == second
    assert all(-3 <= x <= 3 for x in first)
    assert list(box_schedule(9)) == [1, 1, 1, 1, 2, 2, 2, 2, 4]
