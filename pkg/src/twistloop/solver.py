"""
Window Invariant Solver
Degree-d elements of S(q[t^-1]^theta) that are invariant under q[t]^theta modulo
the ideal of positive t-powers, found as the kernel of a linear system in the
unknown monomial coefficients. Supplies Z(q^theta, [0]) for algebras without an
invariant catalog.
"""

import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional

from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar
from src.sympoly.independence import outside_ideal
from src.sympoly.poly import Monomial, Poly, Variable, var_key
from src.twistloop.verify import actors
from src.twistloop.window import loop_poisson, minus_window
from src.utils.linalg import nullspace

logger = logging.getLogger(__name__)


def window_monomials(grading: Grading, depth: int, degree: int, weight: Optional[int] = None) -> List[Poly]:
    """Degree-`degree` monomials in minus-side variables t^-k, k <= depth, of total t-weight `weight`"""
    variables = minus_window(grading, depth).variables()
    out = []
    for combo in combinations_with_replacement(variables, degree):
        if weight is not None and -sum(v.t_exponent for v in combo) != weight:
            continue
        powers: Dict[Variable, int] = {}
        for v in combo:
            powers[v] = powers.get(v, 0) + 1
        mono: Monomial = tuple(sorted(powers.items(), key=lambda item: var_key(item[0])))
        out.append(Poly({mono: CycloScalar.one()}))
    return out


def solve_window_invariants(
    grading: Grading, depth: int, degree: int, weight: Optional[int] = None
) -> List[Poly]:
    """
    Basis of the invariants of the given degree (and t-weight) supported in the window

    Args:
        grading: grading of q in the eigenbasis
        depth: largest k of the variables x t^-k
        degree: polynomial degree
        weight: total t-weight sum k, or None for all weights together

    Returns:
        echelon basis of the solution space as polynomials
    """
    unknowns = window_monomials(grading, depth, degree, weight)
    if not unknowns:
        return []
    poisson = loop_poisson(grading)

    def in_ideal(v: Variable) -> bool:
        return v.t_exponent > 0

    rows: Dict[Monomial, Dict[int, CycloScalar]] = {}
    for x in actors(grading, range(0, depth + 1)):
        actor = Poly.of(x)
        for col, mono in enumerate(unknowns):
            image = outside_ideal(poisson.bracket(actor, mono), in_ideal)
            for m, c in image.terms.items():
                rows.setdefault((x,) + m, {})[col] = c
    zero = CycloScalar.zero()
    matrix = [[row.get(col, zero) for col in range(len(unknowns))] for row in rows.values()]
    kernel = nullspace(matrix, len(unknowns))
    solutions = []
    for vec in kernel:
        poly = Poly.zero()
        for c, mono in zip(vec, unknowns):
            if c:
                poly = poly + mono.scale(c)
        solutions.append(poly)
    logger.info(
        f"window invariants: depth {depth}, degree {degree}, weight {weight}: {len(solutions)} of {len(unknowns)}"
    )
    return solutions
