"""
Cyclotomic Scalars
Exact arithmetic in Q and in the cyclotomic fields Q(zeta_M), the coefficient
domain for every structure constant and polynomial coefficient.

An element of Q(zeta_M) is stored in the power basis 1, z, ..., z^(phi(M)-1)
reduced modulo the M-th cyclotomic polynomial, so zero tests are structural.
"""

from functools import lru_cache
from math import gcd
from typing import Iterable, List, Tuple, Union

from sympy import divisors, factorint, totient
from sympy.polys.densearith import dup_exquo, dup_mul, dup_rem
from sympy.polys.densebasic import dup_convert, dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from src.utils.errors import DivisionByZero

# Element type of sympy's rational domain (gmpy2.mpq or PythonMPQ)
Rational = type(QQ(0))

ScalarLike = Union["CycloScalar", int, Rational, str]


def to_rational(value) -> Rational:
    """
    Convert ints, "a/b" strings, fractions and sympy rationals to a QQ element

    Args:
        value: anything with an exact rational reading

    Returns:
        QQ element in lowest terms
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        return QQ(int(value))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise DivisionByZero(f"zero denominator in '{value}'")
            return QQ(int(num), int(den))
        return QQ(int(text))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ.convert(value)


def format_rational(value: Rational) -> str:
    """Textual form used in JSON documents: "a/b", or "a" for integers"""
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


@lru_cache(maxsize=None)
def _cyclotomic_dup(order: int) -> Tuple[int, ...]:
    """Phi_M over ZZ, highest degree first"""
    poly = [ZZ(1)] + [ZZ(0)] * (order - 1) + [ZZ(-1)]
    for d in divisors(order)[:-1]:
        poly = dup_exquo(poly, list(_cyclotomic_dup(d)), ZZ)
    return tuple(poly)


@lru_cache(maxsize=None)
def _modulus(order: int) -> Tuple[Rational, ...]:
    return tuple(dup_convert(list(_cyclotomic_dup(order)), ZZ, QQ))


def cyclotomic_polynomial(order: int) -> Tuple[int, ...]:
    """
    The M-th cyclotomic polynomial, as integer coefficients lowest degree first

    Computed by exact division of x^M - 1 by Phi_d for every proper divisor d of M.
    """
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    return tuple(int(c) for c in reversed(_cyclotomic_dup(order)))


@lru_cache(maxsize=None)
def field_degree(order: int) -> int:
    """phi(M), the dimension of Q(zeta_M) over Q"""
    return int(totient(order))


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=None)
def _trace_weights(order: int) -> Tuple[Rational, ...]:
    # normalized trace of z^k: mu(M/g) / phi(M/g) with g = gcd(k, M)
    weights = []
    for k in range(field_degree(order)):
        sub = order // gcd(k, order)
        weights.append(QQ(_mobius(sub), field_degree(sub)))
    return tuple(weights)


def _reduce(values: List[Rational], order: int) -> List[Rational]:
    rem = dup_rem(dup_strip(list(reversed(values))), list(_modulus(order)), QQ)
    return list(reversed(rem))


def common_order(*orders: int) -> int:
    """lcm of cyclotomic orders; the field every operand is lifted into"""
    result = 1
    for order in orders:
        result = result * order // gcd(result, order)
    return result


class CycloScalar:
    """
    Element of Q(zeta_M) in the power basis modulo Phi_M

    Operands of different orders are lifted to the lcm order before combining,
    using zeta_m = zeta_M^(M/m). Values are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = (0,)):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        values = [to_rational(c) for c in coeffs]
        width = field_degree(order)
        if len(values) > width:
            values = _reduce(values, order)
        values.extend([QQ(0)] * (width - len(values)))
        self.order = order
        self.coeffs = tuple(values)

    @classmethod
    def _make(cls, order: int, coeffs: Tuple[Rational, ...]) -> "CycloScalar":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycloScalar":
        width = field_degree(order)
        return cls._make(order, (to_rational(value),) + (QQ(0),) * (width - 1))

    @classmethod
    def zero(cls, order: int = 1) -> "CycloScalar":
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CycloScalar":
        return cls.rational(1, order)

    # ------------------------------------------------------------------
    # predicates and conversions

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> "CycloScalar":
        """Embed into Q(zeta_order); order must be a multiple of self.order"""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        if self.is_rational():
            return CycloScalar.rational(self.coeffs[0], order)
        step = order // self.order
        spread = [QQ(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return CycloScalar(order, spread)

    def _coerce(self, other) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            return other
        if isinstance(other, (int, str, Rational)):
            return CycloScalar.rational(other, self.order)
        raise TypeError(f"cannot combine CycloScalar with {type(other).__name__}")

    def _align(self, other) -> Tuple["CycloScalar", "CycloScalar"]:
        other = self._coerce(other)
        if other.order == self.order:
            return self, other
        order = common_order(self.order, other.order)
        return self.lift(order), other.lift(order)

    # ------------------------------------------------------------------
    # field operations

    def __add__(self, other) -> "CycloScalar":
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return CycloScalar._make(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar._make(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "CycloScalar":
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return CycloScalar._make(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other) -> "CycloScalar":
        return (-self) + other

    def __mul__(self, other) -> "CycloScalar":
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        if len(a.coeffs) == 1:
            return CycloScalar._make(a.order, (a.coeffs[0] * b.coeffs[0],))
        if b.is_rational():
            c = b.coeffs[0]
            return CycloScalar._make(a.order, tuple(x * c for x in a.coeffs))
        if a.is_rational():
            c = a.coeffs[0]
            return CycloScalar._make(a.order, tuple(c * y for y in b.coeffs))
        product = dup_mul(
            dup_strip(list(reversed(a.coeffs))), dup_strip(list(reversed(b.coeffs))), QQ
        )
        return CycloScalar(a.order, list(reversed(product)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        """Multiplicative inverse; raises DivisionByZero on zero"""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloScalar.rational(QQ(1) / self.coeffs[0], self.order)
        try:
            inv = dup_invert(dup_strip(list(reversed(self.coeffs))), list(_modulus(self.order)), QQ)
        except NotInvertible as exc:
            raise DivisionByZero(f"{self} is not invertible") from exc
        return CycloScalar(self.order, list(reversed(inv)))

    def __truediv__(self, other) -> "CycloScalar":
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other) -> "CycloScalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "CycloScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloScalar.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # comparison and rendering

    def __eq__(self, other) -> bool:
        try:
            a, b = self._align(other)
        except (TypeError, ValueError):
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # normalized trace is invariant under lifting, so equal values hash equal
        weights = _trace_weights(self.order)
        return hash(sum((c * w for c, w in zip(self.coeffs, weights)), QQ(0)))

    def to_text(self) -> str:
        if self.is_rational():
            return format_rational(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(format_rational(c))
                continue
            power = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{format_rational(c)}*{power}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def to_json(self):
        """"a/b" for rational values, else the coefficient vector as strings"""
        if self.is_rational():
            return format_rational(self.coeffs[0])
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, value, order: int = 1) -> "CycloScalar":
        if isinstance(value, (list, tuple)):
            return cls(order, value)
        return cls.rational(value, order)

    def __repr__(self) -> str:
        return f"CycloScalar({self.order}, {self.to_text()})"

    __str__ = to_text


def as_scalar(value: ScalarLike, order: int = 1) -> CycloScalar:
    """Coerce a rational-like value or pass a CycloScalar through"""
    if isinstance(value, CycloScalar):
        return value
    return CycloScalar.rational(value, order)


def zeta_power(order: int, k: int) -> CycloScalar:
    """zeta_M^(k mod M), reduced modulo Phi_M"""
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    exponent = k % order
    coeffs: List[Rational] = [QQ(0)] * (exponent + 1)
    coeffs[exponent] = QQ(1)
    return CycloScalar(order, coeffs)


def is_primitive_root(zeta: CycloScalar, m: int) -> bool:
    """True iff zeta^m = 1 and no proper divisor d of m has zeta^d = 1"""
    if zeta ** m != 1:
        return False
    return all(zeta ** d != 1 for d in divisors(m)[:-1])

