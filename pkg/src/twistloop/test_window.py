import pytest

from src.sympoly.poly import Poly, Variable
from src.twistloop.window import (
    build_cyclic_quotient,
    build_takiff,
    embed_in_quotient,
    is_loop_variable,
    loop_poisson,
    minus_window,
    quotient_isomorphism,
    t_side_window,
    w_window,
)
from src.utils.errors import BadTruncation, UnknownVariable


def test_loop_variables_follow_the_grading(involution):
    h, e = involution.eigen.index_of("h"), involution.eigen.index_of("e")
    assert is_loop_variable(involution, Variable(h, -2))
    assert is_loop_variable(involution, Variable(e, 3))
    assert not is_loop_variable(involution, Variable(e, 0))
    assert not is_loop_variable(involution, Variable(h, 1))


def test_loop_bracket_adds_exponents(involution):
    L = involution.eigen
    e, f, h = (L.index_of(x) for x in "efh")
    P = loop_poisson(involution)
    assert P.bracket(Poly.var(e, -1), Poly.var(f, 3)) == Poly.var(h, 2)
    with pytest.raises(UnknownVariable):
        P.bracket(Poly.var(e, 0), Poly.var(f, 1))


def test_window_sizes(involution):
    assert len(minus_window(involution, 4).variables()) == 1 + 2 + 1 + 2 + 1
    assert len(t_side_window(involution, 3).variables()) == 2 + 1 + 2
    assert len(w_window(involution, 2).variables()) == 1 + 2


@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_cyclic_quotient_is_a_direct_sum(involution, N):
    window = build_cyclic_quotient(involution, N)
    assert window.algebra.dim == 3 * N // 2
    assert window.algebra.check_jacobi().ok
    result = quotient_isomorphism(window)
    assert result.ok, result.witness
    assert result.detail["n"] == N // 2


@pytest.mark.parametrize("N", [1, 2, 3])
def test_cyclic_quotient_of_the_identity(identity_grading, N):
    result = quotient_isomorphism(build_cyclic_quotient(identity_grading, N))
    assert result.ok, result.witness


def test_cyclic_quotient_needs_a_multiple_of_m(involution):
    with pytest.raises(BadTruncation):
        build_cyclic_quotient(involution, 3)


def test_embedding_wraps_exponents(involution):
    window = build_cyclic_quotient(involution, 4)
    h = involution.eigen.index_of("h")
    image = embed_in_quotient(window, Poly.var(h, -2) * Poly.var(h, 2))
    assert image == Poly.var(window.index_of[(h, 2)]) ** 2


def test_takiff(involution):
    takiff = build_takiff(involution, 3)
    assert takiff.dim == 1 + 2 + 1
    assert takiff.check_jacobi().ok
    with pytest.raises(BadTruncation):
        build_takiff(involution, 0)
