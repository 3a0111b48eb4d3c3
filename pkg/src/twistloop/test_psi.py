import pytest

from src.invariants.family import attach_automorphism, g0_invariants
from src.invariants.metadata import catalog_family
from src.liealg.catalog import get_entry, parse_automorphism
from src.liealg.grading import grading_from_automorphism
from src.scalars.cyclo import CycloScalar
from src.sympoly.poly import Poly
from src.twistloop.psi import (
    TransitionMatrix,
    psi_quotient,
    t_side_shift,
    transition_matrix,
    verify_image_formula,
    verify_t_side_image,
)
from src.utils.errors import UnknownVariable


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_image_formula_for_the_sl2_casimir(involution, casimir, j):
    result = verify_image_formula(casimir, 0, j, involution)
    assert result.ok, result.witness


def test_first_image_mixes_components(involution, casimir):
    L = involution.eigen
    e, f, h = (Poly.var(L.index_of(x)) for x in "efh")
    result = verify_image_formula(casimir, 0, 1, involution)
    assert result.witness["lhs"] == e * f + h * h / 2


@pytest.mark.parametrize("J", [0, 1, 2])
def test_t_side_images(involution, casimir, J):
    F = casimir
    assert t_side_shift(F, involution) == 2
    result = verify_t_side_image(F, J, involution)
    assert result.ok, result.witness


def test_t_side_first_image_is_the_highest_component(involution, casimir):
    L = involution.eigen
    e, f = (Poly.var(L.index_of(x)) for x in "ef")
    result = verify_t_side_image(casimir, 0, involution)
    assert result.witness["lhs"] == e * f


def test_transition_matrix_on_window_eight(involution, casimir):
    F = casimir
    matrix = transition_matrix(F, 0, involution, [1, 2, 3, 4], g0_count=1)
    assert matrix.size == 5
    assert matrix.columns == [0, 2]
    assert matrix.is_lower_unitriangular()
    assert matrix.matches_binomials(2)
    assert matrix.entries[0] == [2, 1]


def _matrix(rows, columns, entries, ell=0):
    values = [[None if e is None else CycloScalar.rational(e) for e in row] for row in entries]
    return TransitionMatrix(rows, columns, values, ell, 2)


def test_rows_past_the_last_column_need_only_determined_entries():
    assert _matrix([1, 2], [0, 2], [[2, 1], [3, 2]]).is_lower_unitriangular()
    assert not _matrix([1, 2], [0, 2], [[2, 1], [3, None]]).is_lower_unitriangular()
    assert not _matrix([1], [0, 2], [[2, 3]]).is_lower_unitriangular()
    assert not _matrix([0], [0, 2], [[1, 1]]).is_lower_unitriangular()


def test_missing_diagonal_inside_the_columns_fails():
    matrix = _matrix([1], [0, 4], [[2, 0]])
    assert matrix.diagonal_column(0) is None
    assert not matrix.is_lower_unitriangular()


@pytest.mark.parametrize(
    "preset, ells, size", [("outer-involution", [0, 1], 5), ("inner-involution", [0, 0], 6)]
)
def test_sl3_transition_matrices_on_window_four(preset, ells, size):
    grading = grading_from_automorphism(parse_automorphism(get_entry("sl3"), preset))
    family = attach_automorphism(catalog_family("sl3"), grading)
    invariants = family.eigen_invariants()
    assert [F.ell for F in invariants] == ells
    total = len(g0_invariants(grading, family))
    for F in invariants:
        for j in range(2):
            result = verify_image_formula(F.poly, F.ell, j, grading)
            assert result.ok, (F.name, j, result.witness)
            image = result.witness["lhs"]
            assert not image or image.degree() == F.degree
        js = [j for j in range(1 if F.ell == 0 else 0, 3) if F.ell + 2 * j <= 4]
        matrix = transition_matrix(F.poly, F.ell, grading, js)
        assert matrix.is_lower_unitriangular(), F.name
        assert matrix.matches_binomials(F.degree), F.name
        total += len(matrix.rows)
    assert total == size


def test_psi_rejects_foreign_variables(involution):
    h = involution.eigen.index_of("h")
    assert psi_quotient(Poly.var(h, -2) * Poly.var(h)) == Poly.var(h) ** 2
    with pytest.raises(UnknownVariable):
        psi_quotient(Poly.var(h, -1), involution)
