"""
Index and Regularity
ind q = min over xi in q* of dim q^xi, computed as dim - max rank B(xi) over
seeded integer samples. A rank found at some xi is exact, so any witness is a
certificate; only the maximality is probabilistic.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.liealg.algebra import LieAlgebra
from src.liealg.directsum import direct_sum
from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar, as_scalar
from src.utils.checks import CheckResult
from src.utils.linalg import rank
from src.utils.sampling import box_schedule, integer_point, make_rng

logger = logging.getLogger(__name__)

Covector = List[CycloScalar]


def stabiliser_dim(L: LieAlgebra, xi: Sequence) -> int:
    """dim q^xi = dim - rank B(xi)"""
    return L.dim - rank(L.structure_matrix([as_scalar(c) for c in xi]))


def index_with_witness(L: LieAlgebra, trials: int = 24, seed: int = 0) -> Tuple[int, Covector]:
    """
    Index of L with the covector attaining it

    Args:
        L: algebra
        trials: number of sampled covectors
        seed: rng seed

    Returns:
        (index, witness covector)
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = make_rng(seed)
    best_rank = -1
    witness: Covector = [CycloScalar.zero()] * L.dim
    ceiling = L.dim - L.dim % 2
    for trial, bound in enumerate(box_schedule(trials)):
        xi = [CycloScalar.rational(v) for v in integer_point(rng, L.dim, bound)]
        r = rank(L.structure_matrix(xi))
        if r > best_rank:
            best_rank, witness = r, xi
            logger.debug(f"{L.name}: rank {r} at trial {trial}")
        if best_rank == ceiling:
            break
    return L.dim - best_rank, witness


def index(L: LieAlgebra, trials: int = 24, seed: int = 0) -> int:
    return index_with_witness(L, trials, seed)[0]


def is_regular(L: LieAlgebra, xi: Sequence, ind_value: int) -> bool:
    return stabiliser_dim(L, xi) == ind_value


def check_q0_regular_intersection(
    grading: Grading,
    trials: int = 24,
    seed: int = 0,
    ind_value: Optional[int] = None,
) -> CheckResult:
    """
    Search for a regular xi in q_0*, the annihilator of the nonzero-degree components

    A found witness proves the hypothesis; a failed search is inconclusive.
    """
    L = grading.eigen
    if ind_value is None:
        ind_value = index(L, trials, seed)
    rng = make_rng(seed + 1)
    zero_part = set(grading.components[0])
    for trial, bound in enumerate(box_schedule(trials)):
        values = integer_point(rng, L.dim, bound)
        xi = [CycloScalar.rational(v if a in zero_part else 0) for a, v in enumerate(values)]
        if is_regular(L, xi, ind_value):
            logger.info(f"{L.name}: regular covector in q0* found at trial {trial}")
            return CheckResult(True, xi, trial + 1, {"index": ind_value})
    logger.warning(f"{L.name}: no regular covector in q0* after {trials} trials")
    return CheckResult(False, None, trials, {"index": ind_value})


def lift_regular_to_direct_sum(L: LieAlgebra, xi: Sequence, n: int, ind_value: int) -> CheckResult:
    """
    (xi, ..., xi) on q^{+n}: regular there exactly when xi is regular in q

    The stabiliser of the repeated covector is n copies of q^xi and ind q^{+n} = n ind q.
    """
    big = direct_sum(L, n)
    lifted = [as_scalar(c) for c in xi] * n
    ok = is_regular(big, lifted, n * ind_value)
    return CheckResult(ok, lifted, 1)
