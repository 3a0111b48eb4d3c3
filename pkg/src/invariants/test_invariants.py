import pytest

from src.invariants.casimir import casimir, is_invariant_form, trace_form
from src.invariants.charpoly import charpoly_invariants
from src.invariants.family import attach_automorphism, g0_invariants
from src.invariants.metadata import CLASSICAL_DEGREES, DEGREE_RECORDS, catalog_family, degree_listing
from src.liealg.catalog import get_entry, parse_automorphism
from src.liealg.grading import grading_from_automorphism
from src.sympoly.poisson import PoissonAlgebra
from src.sympoly.poly import Poly, Variable
from src.utils.errors import CatalogRefusal, DegenerateForm, ResolutionFailed
from src.utils.linalg import identity


def _grading(name, preset):
    return grading_from_automorphism(parse_automorphism(get_entry(name), preset))


def _sl2_vars():
    L = get_entry("sl2").algebra
    return [Poly.var(L.index_of(x)) for x in "efh"]


def test_casimir_of_the_trace_form():
    entry = get_entry("sl2")
    gram = trace_form(entry.matrices)
    assert is_invariant_form(entry.algebra, gram)
    e, f, h = _sl2_vars()
    assert casimir(entry.algebra, gram) == 2 * e * f + h * h / 2
    assert casimir(entry.algebra) == e * f / 2 + h * h / 8


def test_degenerate_and_non_invariant_forms():
    heis = get_entry("heisenberg3").algebra
    with pytest.raises(DegenerateForm):
        casimir(heis)
    with pytest.raises(DegenerateForm):
        casimir(get_entry("sl2").algebra, identity(3))


def test_sl2_charpoly_invariant():
    family = charpoly_invariants(2)
    e, f, h = _sl2_vars()
    assert family.polys() == [e * f + h * h / 4]
    with pytest.raises(ValueError):
        charpoly_invariants(5)


@pytest.mark.parametrize("name", sorted(CLASSICAL_DEGREES))
def test_catalog_families_are_invariant(name):
    family = catalog_family(name)
    assert tuple(family.degrees()) == CLASSICAL_DEGREES[name]
    assert family.check_invariance().ok
    assert all(g.poly.is_homogeneous() for g in family.generators)


def test_degree_only_records_are_refused():
    record = DEGREE_RECORDS["e6-involution"]
    assert record.invariant_degrees == (2, 5, 6, 8, 9, 12)
    assert not record.good_generating_system
    with pytest.raises(CatalogRefusal):
        catalog_family("e6-involution")
    rows = degree_listing()
    assert len(rows) == len(CLASSICAL_DEGREES) + len(DEGREE_RECORDS)
    assert [r for r in rows if not r["symbolic"]][0]["g0_degrees"] == [1, 2, 4, 5, 6, 8]


@pytest.mark.parametrize(
    "name, preset, ells",
    [
        ("sl2", "involution", [0]),
        ("sl3", "outer-involution", [0, 1]),
        ("sl3", "order3", [0, 0]),
        ("sl2xsl2", "swap", [0, 1]),
    ],
)
def test_attached_generators_are_eigenvectors(name, preset, ells):
    grading = _grading(name, preset)
    family = attach_automorphism(catalog_family(name), grading)
    assert [g.ell for g in family.generators] == ells
    theta = grading.eigen_theta()
    for g in family.generators:
        image = g.poly.substitute(lambda v: Poly.var(v.base_index).scale(theta.matrix[v.base_index][v.base_index]))
        assert image == g.poly.scale(grading.zeta ** g.ell)
    P = PoissonAlgebra.of_algebra(grading.eigen)
    actors = [Variable(a) for a in range(grading.dim)]
    assert all(P.is_central(g.poly, actors)[0] for g in family.generators)


def test_swap_selects_sum_and_difference():
    grading = _grading("sl2xsl2", "swap")
    family = attach_automorphism(catalog_family("sl2xsl2"), grading)
    total, diff = family.polys()
    assert total.degree() == diff.degree() == 2
    assert total != diff


def test_eigen_invariants_need_an_attached_automorphism():
    with pytest.raises(ResolutionFailed):
        catalog_family("sl2").eigen_invariants()


@pytest.mark.parametrize(
    "name, preset, count, degrees",
    [
        ("sl2", "involution", 1, [1]),
        ("sl3", "order3", 2, [1, 1]),
        ("sl3", "outer-involution", 1, [2]),
        ("sl3", "inner-involution", 2, [1, 2]),
    ],
)
def test_g0_invariants(name, preset, count, degrees):
    grading = _grading(name, preset)
    found = g0_invariants(grading)
    assert len(found) == count
    assert sorted(p.degree() for p in found) == degrees
    P = PoissonAlgebra.of_algebra(grading.eigen)
    zero_part = [Variable(a) for a in grading.components[0]]
    assert all(P.is_central(p, zero_part)[0] for p in found)


def test_g0_invariants_without_twist_are_the_family():
    grading = _grading("sl2", "id")
    family = attach_automorphism(catalog_family("sl2"), grading)
    assert g0_invariants(grading, family) == family.polys()


def test_g0_invariants_refuse_larger_g0():
    with pytest.raises(CatalogRefusal):
        g0_invariants(_grading("sl4", "inner-involution"))
