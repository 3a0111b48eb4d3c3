import pytest

from src.liealg.catalog import get_entry, parse_automorphism
from src.liealg.grading import grading_from_automorphism
from src.sympoly.poly import Poly
from src.twistloop.generators import EigenInvariant


def _sl2_grading(preset):
    return grading_from_automorphism(parse_automorphism(get_entry("sl2"), preset))


def _casimir(grading):
    L = grading.eigen
    e, f, h = (Poly.var(L.index_of(x)) for x in "efh")
    return e * f + h * h / 4


@pytest.fixture
def involution():
    return _sl2_grading("involution")


@pytest.fixture
def identity_grading():
    return _sl2_grading("id")


@pytest.fixture
def casimir(involution):
    """ef + h^2/4 in the eigenbasis of the sl2 involution"""
    return _casimir(involution)


@pytest.fixture
def identity_casimir(identity_grading):
    return _casimir(identity_grading)


@pytest.fixture
def casimir_invariant(casimir):
    return EigenInvariant(casimir, 2, 0, "F")
