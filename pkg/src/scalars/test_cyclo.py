import pytest
from sympy import Poly as SymPoly, cyclotomic_poly, symbols
from sympy.polys.domains import QQ

from src.scalars.cyclo import (
    CycloScalar,
    common_order,
    cyclotomic_polynomial,
    is_primitive_root,
    to_rational,
    zeta_power,
)
from src.utils.errors import DivisionByZero


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6, 8, 9, 12])
def test_cyclotomic_polynomial_matches_sympy(order):
    x = symbols("x")
    expected = [int(c) for c in reversed(SymPoly(cyclotomic_poly(order, x), x).all_coeffs())]
    assert list(cyclotomic_polynomial(order)) == expected


def test_rational_arithmetic():
    half = CycloScalar.rational("1/2")
    third = CycloScalar.rational("1/3")
    assert half + third == CycloScalar.rational("5/6")
    assert half * third == CycloScalar.rational("1/6")
    assert (half - third).to_rational() == QQ(1, 6)
    assert half / third == CycloScalar.rational("3/2")


def test_zeta_powers_reduce():
    z3 = zeta_power(3, 1)
    assert z3 ** 3 == 1
    assert z3 ** 2 == -1 - z3
    assert 1 + z3 + z3 ** 2 == 0
    assert zeta_power(4, 2) == -1
    assert zeta_power(2, 1) == -1


def test_mixed_orders_lift_to_common_field():
    i = zeta_power(4, 1)
    w = zeta_power(3, 1)
    product = i * w
    assert product.order == 12
    assert product == zeta_power(12, 7)
    assert common_order(4, 6) == 12


def test_inverse_and_division():
    z5 = zeta_power(5, 1)
    x = 2 + z5 - z5 ** 3
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(DivisionByZero):
        CycloScalar.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        CycloScalar.rational(1) / CycloScalar.zero()
    i = zeta_power(4, 1)
    assert 1 / i == -i
    assert "1/2" / zeta_power(3, 1) == CycloScalar.rational("1/2") * zeta_power(3, 2)


def test_primitive_roots():
    assert is_primitive_root(zeta_power(4, 1), 4)
    assert is_primitive_root(zeta_power(4, 3), 4)
    assert not is_primitive_root(zeta_power(4, 2), 4)
    assert is_primitive_root(CycloScalar.rational(-1), 2)
    assert is_primitive_root(CycloScalar.one(), 1)


def test_equal_values_hash_equal_across_orders():
    assert hash(zeta_power(4, 2)) == hash(CycloScalar.rational(-1))
    assert len({zeta_power(6, 3), CycloScalar.rational(-1), zeta_power(2, 1)}) == 1


def test_text_and_json():
    assert CycloScalar.rational("-3/4").to_text() == "-3/4"
    assert (1 + zeta_power(3, 1)).to_text() == "(1 + z3)"
    value = 2 - zeta_power(5, 2)
    assert CycloScalar.from_json(value.to_json(), 5) == value
    assert to_rational("6/4") == QQ(3, 2)
    with pytest.raises(DivisionByZero):
        to_rational("1/0")


def test_comparison_with_unreadable_values_is_false():
    z3 = zeta_power(3, 1)
    assert z3 != "abc"
    assert not (CycloScalar.rational(2) == "two")
    assert z3 != 1.5j
    assert CycloScalar.rational(2) == "2"
