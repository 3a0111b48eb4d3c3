"""
Characteristic Polynomial Invariants
Generators of S(sl_n)^{sl_n} from det(lambda - X) for the generic matrix
X = sum_i x_i B^i, B^i the trace-dual basis
"""

import logging
from typing import List

import sympy as sp
from sympy.polys.domains import QQ

from src.invariants.casimir import trace_form
from src.invariants.family import InvariantFamily, InvariantGenerator
from src.liealg.catalog import get_entry
from src.scalars.cyclo import CycloScalar
from src.sympoly.poly import Poly, Variable, var_key
from src.utils.linalg import inverse

logger = logging.getLogger(__name__)


def _to_sympy(x: CycloScalar) -> sp.Rational:
    q = x.to_rational()
    return sp.Rational(int(q.numerator), int(q.denominator))


def sympy_to_poly(expr, symbols: List[sp.Symbol]) -> Poly:
    """Convert a sympy polynomial with rational coefficients in x_0..x_{n-1}"""
    terms = {}
    for exps, coeff in sp.Poly(sp.expand(expr), *symbols).terms():
        mono = tuple(
            sorted(((Variable(i), e) for i, e in enumerate(exps) if e), key=lambda item: var_key(item[0]))
        )
        terms[mono] = CycloScalar.rational(QQ(int(coeff.p), int(coeff.q)))
    return Poly(terms)


def charpoly_invariants(n: int) -> InvariantFamily:
    """
    F_k = (-1)^(k+1) c_k for det(lambda - X) = lambda^n + c_1 lambda^(n-1) + ... + c_n, k = 2..n

    For n = 2 this gives ef + h^2/4.
    """
    if not 2 <= n <= 4:
        raise ValueError(f"characteristic polynomial catalog covers sl2..sl4, got n={n}")
    entry = get_entry(f"sl{n}")
    L = entry.algebra
    mats = entry.matrices
    dual = inverse(trace_form(mats))
    symbols = sp.symbols(f"x0:{L.dim}")
    X = sp.zeros(n, n)
    for i in range(L.dim):
        for j in range(L.dim):
            if dual[i][j]:
                X += symbols[i] * _to_sympy(dual[i][j]) * sp.Matrix(
                    [[_to_sympy(c) for c in row] for row in mats[j]]
                )
    lam = sp.Symbol("lam")
    coeffs = X.charpoly(lam).all_coeffs()
    generators = []
    for k in range(2, n + 1):
        F = sympy_to_poly((-1) ** (k + 1) * coeffs[k], list(symbols))
        generators.append(InvariantGenerator(F, k, None, f"F{k}"))
    family = InvariantFamily(L.name, L, generators, n - 1)
    logger.info(f"sl{n} invariants of degrees {family.degrees()}")
    return family
