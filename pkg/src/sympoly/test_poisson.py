import pytest

from src.invariants.casimir import casimir
from src.liealg.catalog import CATALOG_NAMES, get_algebra, get_entry, parse_automorphism
from src.liealg.grading import grading_from_automorphism
from src.scalars.cyclo import zeta_power
from src.sympoly.phi import (
    eigen_exponent,
    from_eigenbasis,
    highest_component,
    phi_split,
    theta_eigen_split,
    to_eigenbasis,
)
from src.sympoly.poisson import PoissonAlgebra, poisson_bracket
from src.sympoly.poly import Poly, Variable
from src.utils.errors import EmptyInput, UnknownVariable
from src.utils.sampling import integer_point, make_rng


def _random_poly(rng, dim):
    """Random polynomial of degree <= 2 with small integer coefficients"""
    coeffs = iter(integer_point(rng, 1 + dim + dim * dim, 3))
    F = Poly.const(next(coeffs))
    for i in range(dim):
        F = F + next(coeffs) * Poly.var(i)
    for i in range(dim):
        for j in range(dim):
            F = F + next(coeffs) * Poly.var(i) * Poly.var(j)
    return F


def _sparse_poly(rng, dim, terms=4, degree=3):
    """A few monomials of degree <= `degree` with nonzero coefficients in [-3, 3]"""
    F = Poly.zero()
    for _ in range(terms):
        mono = Poly.const(int(rng.choice([-3, -2, -1, 1, 2, 3])))
        for i in rng.integers(0, dim, size=int(rng.integers(0, degree + 1))):
            mono = mono * Poly.var(int(i))
        F = F + mono
    return F


def test_sl2_brackets_on_variables():
    L = get_algebra("sl2")
    e, f, h = (Poly.var(L.index_of(x)) for x in "efh")
    assert poisson_bracket(L, e, f) == h
    assert poisson_bracket(L, h, e) == 2 * e
    assert poisson_bracket(L, e * f, h) == 0


@pytest.mark.parametrize("name", ["sl2", "heisenberg3"])
def test_poisson_axioms_on_seeded_triples(name):
    L = get_algebra(name)
    P = PoissonAlgebra.of_algebra(L)
    rng = make_rng(11)
    for _ in range(50):
        f, g, k = (_random_poly(rng, L.dim) for _ in range(3))
        assert P.bracket(f, g) == -P.bracket(g, f)
        assert P.bracket(f, g * k) == P.bracket(f, g) * k + g * P.bracket(f, k)
        jacobi = P.bracket(f, P.bracket(g, k)) + P.bracket(g, P.bracket(k, f)) + P.bracket(k, P.bracket(f, g))
        assert jacobi == 0


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_poisson_axioms_up_to_degree_three(name):
    L = get_algebra(name)
    P = PoissonAlgebra.of_algebra(L)
    rng = make_rng(23)
    for _ in range(10):
        f, g, k = (_sparse_poly(rng, L.dim) for _ in range(3))
        assert P.bracket(f, g) == -P.bracket(g, f)
        assert P.bracket(f, g * k) == P.bracket(f, g) * k + g * P.bracket(f, k)
        jacobi = P.bracket(f, P.bracket(g, k)) + P.bracket(g, P.bracket(k, f)) + P.bracket(k, P.bracket(f, g))
        assert jacobi == 0, (f, g, k)


def test_casimir_is_central():
    L = get_algebra("sl3")
    C = casimir(L)
    ok, actor = PoissonAlgebra.of_algebra(L).is_central(C, [Variable(i) for i in range(L.dim)])
    assert ok, actor


def test_t_variables_need_their_own_bracket():
    L = get_algebra("sl2")
    with pytest.raises(UnknownVariable):
        poisson_bracket(L, Poly.var(0, 1), Poly.var(1))


def _sl2_involution():
    theta = parse_automorphism(get_entry("sl2"), "involution")
    return grading_from_automorphism(theta)


def test_highest_component_of_the_sl2_casimir():
    grading = _sl2_involution()
    L = grading.eigen
    e, f, h = (Poly.var(L.index_of(x)) for x in "efh")
    F = e * f + h * h / 4
    split = phi_split(F, grading.degree_of)
    assert split.total() == F
    assert split.degrees() == [0, 2]
    top, star = highest_component(F, grading.degree_of)
    assert top == 2
    assert star == e * f
    with pytest.raises(EmptyInput):
        highest_component(Poly.zero(), grading.degree_of)


def test_theta_eigen_split():
    grading = _sl2_involution()
    L = grading.eigen
    e, f, h = (Poly.var(L.index_of(x)) for x in "efh")
    theta, zeta = grading.eigen_theta(), grading.zeta
    parts = theta_eigen_split(e + h + e * f, theta, zeta)
    assert [(u, F) for u, _, F in parts] == [(0, h + e * f), (1, e)]
    assert eigen_exponent(e + f, theta, zeta) == 1
    assert eigen_exponent(h * h, theta, zeta) == 0
    assert eigen_exponent(e + h, theta, zeta) is None


def test_eigenbasis_change_round_trip():
    theta = parse_automorphism(get_entry("sl3"), "order3")
    grading = grading_from_automorphism(theta, zeta_power(3, 1))
    F = casimir(grading.algebra)
    assert from_eigenbasis(to_eigenbasis(F, grading), grading) == F
