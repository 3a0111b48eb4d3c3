"""
Verification
Invariance of window elements under the opposite half of the loop algebra, and
pairwise Poisson-commutativity inside a doubled cyclic quotient
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from joblib import Parallel, delayed

from src.liealg.grading import Grading
from src.sympoly.independence import outside_ideal
from src.sympoly.poisson import PoissonAlgebra
from src.sympoly.poly import Poly, Variable
from src.twistloop.generators import GeneratorSet
from src.twistloop.window import (
    TwistedWindow,
    build_cyclic_quotient,
    embed_in_quotient,
    is_loop_variable,
    loop_poisson,
)
from src.utils.checks import CheckResult

logger = logging.getLogger(__name__)


def actors(grading: Grading, exponents: Sequence[int]) -> List[Variable]:
    """Basis elements x t^e of the twisted loop algebra for the given exponents"""
    out = []
    for e in exponents:
        for a in range(grading.dim):
            v = Variable(a, e)
            if is_loop_variable(grading, v):
                out.append(v)
    return out


def verify_invariance(
    Y: Poly,
    grading: Grading,
    style: str = "zero",
    window: Optional[TwistedWindow] = None,
    poisson: Optional[PoissonAlgebra] = None,
) -> CheckResult:
    """
    Check {x t^k, Y} against the ideal of the opposite side

    style "zero": Y on the minus side, actors x t^k with k >= 0, ideal generated by
    variables with positive t-exponent.
    style "t": Y on the t-side, actors x t^-k with k >= 0, ideal generated by
    variables with t-exponent <= 0.

    Raises:
        WindowOverflow: Y leaves `window`
    """
    if window is not None:
        window.require(Y)
    poisson = poisson or loop_poisson(grading)
    low, high = Y.t_range()
    if style == "zero":
        exponents = range(0, max(-low, 0) + 1)

        def in_ideal(v: Variable) -> bool:
            return v.t_exponent > 0

    elif style == "t":
        exponents = range(0, -max(high, 0) - 1, -1)

        def in_ideal(v: Variable) -> bool:
            return v.t_exponent <= 0

    else:
        raise ValueError(f"unknown invariance style '{style}'")
    checked = 0
    for x in actors(grading, exponents):
        checked += 1
        residue = outside_ideal(poisson.bracket(Poly.of(x), Y), in_ideal)
        if residue:
            logger.debug(f"invariance fails for actor {x}")
            return CheckResult(False, {"actor": x, "residue": residue}, checked)
    return CheckResult(True, None, checked)


def doubled_quotient_order(polys: Sequence[Poly], m: int) -> int:
    """N = 2N' with N' the least multiple of m exceeding the t-exponent spread of the support"""
    low = min((p.t_range()[0] for p in polys if p), default=0)
    high = max((p.t_range()[1] for p in polys if p), default=0)
    spread = max(high, 0) - min(low, 0)
    n_prime = (spread // m + 1) * m
    return 2 * n_prime


def verify_pairwise_commute(
    generators: Union[GeneratorSet, Sequence[Poly]],
    grading: Grading,
    n_jobs: int = 1,
) -> CheckResult:
    """
    {f_a, f_b} == 0 for all pairs, computed in the cyclic quotient of order 2N'

    No bracket of two elements supported in a window of width N' wraps around
    t^-N = 1, so zero in the quotient is zero in the loop algebra.
    """
    if isinstance(generators, GeneratorSet):
        polys, names = generators.polys(), generators.names()
    else:
        polys, names = list(generators), [f"g{i}" for i in range(len(generators))]
    N = doubled_quotient_order(polys, grading.order)
    quotient = build_cyclic_quotient(grading, N)
    embedded = [embed_in_quotient(quotient, p) for p in polys]
    poisson = PoissonAlgebra.of_algebra(quotient.algebra)
    pairs: List[Tuple[int, int]] = [(i, j) for i in range(len(polys)) for j in range(i + 1, len(polys))]

    def bracket(i: int, j: int) -> Poly:
        return poisson.bracket(embedded[i], embedded[j])

    results = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(bracket)(i, j) for i, j in pairs)
    for (i, j), value in zip(pairs, results):
        if value:
            logger.info(f"{names[i]} and {names[j]} do not commute")
            return CheckResult(
                False,
                {"pair": (names[i], names[j]), "bracket": value.to_text(quotient.algebra.basis)},
                len(pairs),
                {"N": N},
            )
    logger.info(f"{len(pairs)} pairs commute in the N={N} quotient")
    return CheckResult(True, None, len(pairs), {"N": N})
