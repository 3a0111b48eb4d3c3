"""
Contractions
The degenerate brackets [,]_0 and [,]_inf of a periodic grading, their pencil,
and contractions defined by a diagonal one-parameter family phi_s
"""

import logging
from typing import Sequence, Tuple

from src.liealg.algebra import LieAlgebra, SparseVector
from src.liealg.grading import Grading, grading_from_degrees
from src.scalars.cyclo import CycloScalar, as_scalar
from src.utils.errors import NonexistentLimit

logger = logging.getLogger(__name__)


def _filtered(grading: Grading, keep_high: bool, name: str) -> LieAlgebra:
    eigen = grading.eigen
    m = grading.order
    deg = grading.degree_of
    table = {}
    for (a, b), vec in eigen.table.items():
        high = deg[a] + deg[b] >= m
        if high == keep_high:
            table[(a, b)] = dict(vec)
    return LieAlgebra(name, eigen.basis, table, deg, m)


def contract_zero(grading: Grading) -> LieAlgebra:
    """q_(0): keep [q_i, q_j] when i + j < m"""
    return _filtered(grading, False, f"{grading.algebra.name}_(0)")


def contract_infinity(grading: Grading) -> LieAlgebra:
    """q_(inf): keep [q_i, q_j] when i + j >= m"""
    return _filtered(grading, True, f"{grading.algebra.name}_(inf)")


def bracket_pencil(grading: Grading, a, b) -> LieAlgebra:
    """The bracket a[,] + b[,]_0 in the eigenbasis"""
    a, b = as_scalar(a), as_scalar(b)
    eigen = grading.eigen
    zero_part = contract_zero(grading)
    table = {}
    for pair, vec in eigen.table.items():
        low = zero_part.table.get(pair, {})
        combined: SparseVector = {}
        for k, c in vec.items():
            value = a * c + (b * low[k] if k in low else CycloScalar.zero())
            if value:
                combined[k] = value
        if combined:
            table[pair] = combined
    return LieAlgebra(
        f"{grading.algebra.name}[{a}*[,]+{b}*[,]0]", eigen.basis, table, grading.degree_of, grading.order
    )


def contract_via_map(L: LieAlgebra, exponents: Sequence[int], name: str = None) -> LieAlgebra:
    """
    Zero limit of phi_s^-1 [phi_s x, phi_s y] for phi_s x_i = s^(e_i) x_i

    The structure constant c_ij^k picks up s^(e_i + e_j - e_k): exponent 0 survives,
    positive exponents vanish, a negative one means the limit does not exist.
    """
    table = {}
    for (i, j), vec in L.table.items():
        kept: SparseVector = {}
        for k, c in vec.items():
            power = exponents[i] + exponents[j] - exponents[k]
            if power < 0:
                raise NonexistentLimit(
                    f"[{L.basis[i]}, {L.basis[j]}] has s-exponent {power} on {L.basis[k]}",
                    witness=(i, j, k),
                )
            if power == 0:
                kept[k] = c
        if kept:
            table[(i, j)] = kept
    return LieAlgebra(name or f"{L.name}_phi", L.basis, table, L.degrees, L.modulus)


def zero_exponents(grading: Grading) -> Tuple[int, ...]:
    """phi_s = s^i on q_i"""
    return tuple(grading.degree_of)


def infinity_exponents(grading: Grading) -> Tuple[int, ...]:
    """s^m phi_s^-1, which is s^(m-i) on q_i"""
    return tuple(grading.order - d for d in grading.degree_of)


def contract_infinity_with_automorphism(grading: Grading) -> Grading:
    """q_(inf) graded by the inherited automorphism, which stays diag(zeta^deg)"""
    inf = contract_infinity(grading)
    return grading_from_degrees(inf, grading.degree_of, grading.order, grading.zeta)


def semidirect_g0_ginf(grading: Grading) -> Grading:
    """
    g0 x| g_(inf) with the inherited automorphism

    Basis: a primed copy of g0 followed by the eigenbasis of g_(inf). The primed
    copy brackets as g0, acts on g_(inf) through the original bracket, and
    g_(inf) brackets through [,]_inf.
    """
    eigen = grading.eigen
    inf = contract_infinity(grading)
    g0 = grading.components[0]
    shift = len(g0)
    prime_of = {a: p for p, a in enumerate(g0)}
    labels = [f"{eigen.basis[a]}'" for a in g0] + list(eigen.basis)
    degrees = [0] * shift + list(grading.degree_of)
    table = {}
    for p, a in enumerate(g0):
        for q, b in enumerate(g0):
            vec = eigen.bracket_basis(a, b)
            if vec:
                table[(p, q)] = {prime_of[k]: c for k, c in vec.items()}
        for y in range(eigen.dim):
            vec = eigen.bracket_basis(a, y)
            if vec:
                table[(p, shift + y)] = {shift + k: c for k, c in vec.items()}
                table[(shift + y, p)] = {shift + k: -c for k, c in vec.items()}
    for (y, z), vec in inf.table.items():
        table[(shift + y, shift + z)] = {shift + k: c for k, c in vec.items()}
    algebra = LieAlgebra(f"{grading.algebra.name}_0 x| inf", labels, table)
    return grading_from_degrees(algebra, degrees, grading.order, grading.zeta)
