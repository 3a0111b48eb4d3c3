import pytest

from src.liealg.automorphism import Automorphism
from src.liealg.catalog import get_entry, parse_automorphism
from src.liealg.grading import check_projectors, grading_from_automorphism, grading_from_degrees
from src.scalars.cyclo import CycloScalar, zeta_power
from src.utils.errors import InvalidRoot
from src.utils.linalg import mat_vec


def _grading(name, preset, k=1):
    theta = parse_automorphism(get_entry(name), preset)
    return grading_from_automorphism(theta, zeta_power(theta.order, k))


@pytest.mark.parametrize(
    "name, preset, dims",
    [
        ("sl2", "id", [3]),
        ("sl2", "involution", [1, 2]),
        ("sl3", "outer-involution", [3, 5]),
        ("sl3", "inner-involution", [4, 4]),
        ("sl3", "order3", [2, 3, 3]),
        ("sl2xsl2", "swap", [3, 3]),
        ("heisenberg3", "involution", [1, 2]),
    ],
)
def test_component_dimensions(name, preset, dims):
    grading = _grading(name, preset)
    assert grading.component_dims() == dims
    assert grading.check().ok
    assert grading.eigen.check_jacobi().ok


def test_eigenbasis_vectors_are_eigenvectors():
    grading = _grading("sl3", "order3", k=2)
    theta = grading.theta
    for i in range(grading.m):
        for vec in grading.component_vectors(i):
            image = mat_vec(theta.matrix, vec)
            assert image == [grading.zeta ** i * c for c in vec]


def test_projectors_resolve_the_identity():
    theta = parse_automorphism(get_entry("sl3"), "order3")
    assert check_projectors(theta, zeta_power(3, 1)).ok


def test_non_primitive_root_is_rejected():
    theta = parse_automorphism(get_entry("sl2"), "involution")
    with pytest.raises(InvalidRoot):
        grading_from_automorphism(theta, CycloScalar.one())


def test_declared_non_grading_fails_with_a_pair():
    L = get_entry("sl2").algebra
    result = grading_from_degrees(L, [1, 1, 1], 2).check()
    assert not result.ok
    kind, pair, target = result.witness
    assert kind == "grading"
    assert len(pair) == 2


def test_inverse_grading_flips_residues():
    grading = _grading("sl3", "order3")
    flipped = grading.inverse_grading()
    assert flipped.theta.order == 3
    assert flipped.degree_of == [(3 - d) % 3 for d in grading.degree_of]
    assert flipped.check().ok


def test_eigen_theta_is_diagonal():
    grading = _grading("sl2", "involution")
    eigen_theta = grading.eigen_theta()
    assert isinstance(eigen_theta, Automorphism)
    assert eigen_theta.order == 2
