import pytest

from src.invariants.family import attach_automorphism
from src.invariants.metadata import catalog_family
from src.liealg.catalog import get_entry, parse_automorphism
from src.liealg.grading import grading_from_automorphism
from src.scalars.cyclo import zeta_power
from src.sympoly.poly import Poly, poly_sum
from src.twistloop.generators import (
    EigenInvariant,
    generators_Z0,
    generators_Zt,
    generators_Zx,
    polarisation_indices,
)
from src.twistloop.hgen import build_H_generators, check_H_generator
from src.twistloop.psi import proportionality
from src.twistloop.polarisation import t_polarisation
from src.twistloop.solver import solve_window_invariants, window_monomials
from src.twistloop.verify import doubled_quotient_order, verify_invariance, verify_pairwise_commute
from src.utils.errors import BadRoot


def test_polarisation_indices():
    assert polarisation_indices(0, 2, 8) == [2, 4, 6, 8]
    assert polarisation_indices(1, 2, 7) == [1, 3, 5, 7]
    assert polarisation_indices(0, 1, 3) == [1, 2, 3]


def test_doubled_quotient_order():
    assert doubled_quotient_order([Poly.var(0, -3)], 2) == 8
    assert doubled_quotient_order([Poly.var(0, -8) * Poly.var(1)], 2) == 20


def test_z0_generators_commute_for_the_involution(involution, casimir_invariant):
    h = Poly.var(involution.eigen.index_of("h"))
    gens = generators_Z0([casimir_invariant], [h], involution, 8)
    assert gens.names() == ["h0", "F[2]", "F[4]", "F[6]", "F[8]"]
    result = verify_pairwise_commute(gens, involution, n_jobs=2)
    assert result.ok, result.witness
    assert result.detail["N"] == 20
    for P in gens.polys():
        assert verify_invariance(P, involution, "zero", gens.window).ok


def test_z0_generators_commute_without_twist(identity_grading, identity_casimir):
    F = EigenInvariant(identity_casimir, 2, 0, "F")
    gens = generators_Z0([F], [identity_casimir], identity_grading, 6)
    assert len(gens) == 7
    assert verify_pairwise_commute(gens, identity_grading).ok


def test_non_commuting_pair_is_named(involution):
    L = involution.eigen
    e, f = Poly.var(L.index_of("e"), -1), Poly.var(L.index_of("f"), -1)
    result = verify_pairwise_commute([e, f], involution)
    assert not result.ok
    assert result.witness["pair"] == ("g0", "g1")


def test_t_side_generators(involution, casimir_invariant):
    gens = generators_Zt([casimir_invariant], involution, 6)
    assert gens.names() == ["F[-2]", "F[-4]", "F[-6]"]
    for P in gens.polys():
        result = verify_invariance(P, involution, "t", gens.window)
        assert result.ok, result.witness
    assert verify_pairwise_commute(gens, involution).ok


def test_invariance_failure_names_an_actor(involution):
    e = Poly.var(involution.eigen.index_of("e"), -1)
    result = verify_invariance(e, involution, "zero")
    assert not result.ok
    assert "actor" in result.witness
    with pytest.raises(ValueError):
        verify_invariance(e, involution, "sideways")


def test_phi_components(involution, casimir_invariant):
    gens = generators_Zx([casimir_invariant], involution)
    assert gens.names() == ["F,0", "F,2"]


def test_solver_recovers_the_casimir_and_its_polarisation(identity_grading, identity_casimir):
    weight_zero = solve_window_invariants(identity_grading, 1, 2, 0)
    assert len(weight_zero) == 1
    assert proportionality(weight_zero[0], identity_casimir) is not None
    weight_one = solve_window_invariants(identity_grading, 1, 2, 1)
    assert len(weight_one) == 1
    assert proportionality(weight_one[0], t_polarisation(identity_casimir, 1, identity_grading)) is not None


def test_solver_on_the_heisenberg_algebra():
    grading = grading_from_automorphism(parse_automorphism(get_entry("heisenberg3"), "id"))
    z = Poly.var(grading.eigen.index_of("z"))
    degree_one = solve_window_invariants(grading, 0, 1, 0)
    assert len(degree_one) == 1
    assert proportionality(degree_one[0], z) is not None
    assert len(window_monomials(grading, 1, 2, 1)) == 9
    central = solve_window_invariants(grading, 2, 1)
    assert len(central) == 3
    assert verify_pairwise_commute(central, grading).ok


def test_h_generators_are_eigenvectors(involution, casimir):
    zeta_tilde = zeta_power(4, 1)
    hs, twist = build_H_generators([(casimir, 0)], involution, 2, zeta_tilde)
    assert len(hs) == 2
    assert twist.order == 4
    for h in hs:
        assert check_H_generator(h, twist, zeta_tilde).ok
    assert poly_sum(h.poly for h in hs) == casimir
    with pytest.raises(BadRoot):
        build_H_generators([(casimir, 0)], involution, 2, zeta_power(4, 2))


@pytest.mark.parametrize("n, zeta_tilde", [(2, zeta_power(4, 1)), (3, zeta_power(6, 1))])
def test_h_generators_of_a_twisted_cubic(n, zeta_tilde):
    grading = grading_from_automorphism(parse_automorphism(get_entry("sl3"), "outer-involution"))
    invariants = attach_automorphism(catalog_family("sl3"), grading).eigen_invariants()
    assert [F.ell for F in invariants] == [0, 1]
    hs, twist = build_H_generators([(F.poly, F.ell) for F in invariants], grading, n, zeta_tilde)
    assert len(hs) == 2 * n
    for h in hs:
        assert check_H_generator(h, twist, zeta_tilde).ok, (h.i, h.j)
        assert h.exponent == (invariants[h.i].ell - 2 * h.j) % (2 * n)
    cubic = [h for h in hs if h.i == 1]
    assert all(h.exponent != 0 for h in cubic)
    assert poly_sum(h.poly for h in cubic) == invariants[1].poly
