"""
Algebraic Independence and Linear Ideals
Jacobian rank at exact points, and membership in ideals generated by variables
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from src.scalars.cyclo import CycloScalar
from src.sympoly.poly import Poly, Variable, var_key
from src.utils.linalg import rank
from src.utils.sampling import integer_point, make_rng

logger = logging.getLogger(__name__)


def all_variables(polys: Iterable[Poly]) -> List[Variable]:
    found = set()
    for p in polys:
        found.update(p.variables())
    return sorted(found, key=var_key)


def gradient_at(F: Poly, point: Dict[Variable, CycloScalar], variables: Sequence[Variable]) -> List[CycloScalar]:
    return [F.partial(v).evaluate(lambda w: point[w]) for v in variables]


def jacobian_rank(
    polys: Sequence[Poly], point: Dict[Variable, CycloScalar], variables: Optional[Sequence[Variable]] = None
) -> int:
    """Rank of (dF_a / dx_v)(point), by default over the variables occurring in the polys"""
    variables = list(variables) if variables is not None else all_variables(polys)
    if not variables:
        return 0
    return rank([gradient_at(F, point, variables) for F in polys])


def random_jacobian_rank(
    polys: Sequence[Poly],
    seed: int = 0,
    retries: int = 3,
    bound: int = 7,
    variables: Optional[Sequence[Variable]] = None,
) -> int:
    """
    Maximal Jacobian rank over seeded integer points in [-bound, bound]

    The box widens after each try that stays below full rank.
    """
    variables = list(variables) if variables is not None else all_variables(polys)
    target = min(len(polys), len(variables))
    rng = make_rng(seed)
    best = 0
    for attempt in range(retries + 1):
        values = integer_point(rng, len(variables), bound * (2 ** attempt))
        point = {v: CycloScalar.rational(x) for v, x in zip(variables, values)}
        best = max(best, jacobian_rank(polys, point, variables))
        logger.debug(f"jacobian rank {best}/{target} on attempt {attempt}")
        if best == target:
            break
    return best


def is_in_linear_ideal(F: Poly, subspace: Iterable[Variable]) -> bool:
    """
    Membership in the ideal generated by a set of coordinate variables

    F lies in the ideal iff every monomial has a factor from the set.
    """
    members = set(subspace)
    return all(any(v in members for v, _ in mono) for mono in F.terms)


def outside_ideal(F: Poly, in_ideal: Callable[[Variable], bool]) -> Poly:
    """The part of F with no factor from the ideal; F is in the ideal iff this is zero"""
    return F.filter(lambda mono: not any(in_ideal(v) for v, _ in mono))
