"""
Casimir Elements
Quadratic invariants sum B^{ij} x_i x_j from a nondegenerate invariant form
"""

import logging
from typing import Optional, Sequence

from src.liealg.algebra import LieAlgebra
from src.scalars.cyclo import CycloScalar
from src.sympoly.poisson import PoissonAlgebra
from src.sympoly.poly import Poly, Variable
from src.utils.errors import DegenerateForm, DivisionByZero
from src.utils.linalg import Matrix, inverse, mat_mul, to_matrix, zeros

logger = logging.getLogger(__name__)


def trace_form(matrices: Sequence[Matrix]) -> Matrix:
    """Gram matrix tr(X_i X_j) of a matrix realization"""
    n = len(matrices)
    gram = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            prod = mat_mul(matrices[i], matrices[j])
            value = CycloScalar.zero()
            for r in range(len(prod)):
                value = value + prod[r][r]
            gram[i][j] = gram[j][i] = value
    return gram


def is_invariant_form(L: LieAlgebra, gram: Matrix) -> bool:
    """B([x_i, x_j], x_k) + B(x_j, [x_i, x_k]) = 0 on all basis triples"""
    n = L.dim
    for i in range(n):
        for j in range(n):
            left = L.bracket_basis(i, j)
            for k in range(n):
                right = L.bracket_basis(i, k)
                total = CycloScalar.zero()
                for p, c in left.items():
                    total = total + c * gram[p][k]
                for p, c in right.items():
                    total = total + c * gram[j][p]
                if total:
                    return False
    return True


def casimir(L: LieAlgebra, form: Optional[Sequence[Sequence]] = None) -> Poly:
    """
    The Casimir element of an invariant form

    Args:
        L: algebra
        form: Gram matrix of a symmetric invariant form; the Killing form when omitted

    Returns:
        sum_{ij} B^{ij} x_i x_j with B^{ij} the inverse Gram matrix

    Raises:
        DegenerateForm: the form is singular or not ad-invariant
    """
    gram = to_matrix(form) if form is not None else L.killing_form()
    try:
        inv = inverse(gram)
    except DivisionByZero as exc:
        raise DegenerateForm(f"invariant form on {L.name} is degenerate") from exc
    if not is_invariant_form(L, gram):
        raise DegenerateForm(f"form on {L.name} is not ad-invariant")
    F = Poly.zero()
    for i in range(L.dim):
        for j in range(L.dim):
            if inv[i][j]:
                F = F + (Poly.var(i) * Poly.var(j)).scale(inv[i][j])
    poisson = PoissonAlgebra.of_algebra(L)
    ok, actor = poisson.is_central(F, [Variable(i) for i in range(L.dim)])
    if not ok:
        raise DegenerateForm(f"Casimir of {L.name} fails to commute with {L.basis[actor.base_index]}")
    logger.debug(f"casimir of {L.name}: {F.to_text(L.basis)}")
    return F
