"""
t-Polarisations
F_[k]: the s^k-coefficient of F after spreading every variable x in q_i over
its allowed powers of t with weights s^p. Three spreadings are used:

  minus side (k >= 0):    x -> sum_b s^(i+bm) x t^-(i+bm)
  positive side (k < 0):  the mirror t -> 1/t of the minus side for theta^-1
  t-side:                 x -> sum_b s^(m-i+bm) x t^(m-i+bm)
"""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar
from src.sympoly.poly import Monomial, Poly, Variable
from src.twistloop.window import TwistedWindow
from src.utils.errors import WindowOverflow

logger = logging.getLogger(__name__)

Series = Dict[int, Poly]


def _check_plain(F: Poly):
    for v in F.variables():
        if v.t_exponent != 0:
            raise ValueError(f"polarisation expects a polynomial on q, found {v}")


def _series_mul(a: Series, b: Series, limit: int) -> Series:
    out: Series = {}
    for p, x in a.items():
        for q, y in b.items():
            if p + q > limit:
                continue
            prod = x * y
            out[p + q] = out[p + q] + prod if p + q in out else prod
    return out


def spread(F: Poly, power: int, offset: Callable[[int], int], m: int, sign: int) -> Poly:
    """
    s^power coefficient of F under x -> sum_b s^(o+bm) x t^(sign (o+bm)), o = offset(base)

    Args:
        F: polynomial on q in eigenbasis variables
        power: the s-degree to collect
        offset: first s-power of each basis index
        m: period of the grading
        sign: -1 places the copies at t^-p, +1 at t^p
    """
    _check_plain(F)
    if power < 0:
        return Poly.zero()
    cache: Dict[int, Series] = {}

    def series(base: int) -> Series:
        if base not in cache:
            start = offset(base)
            cache[base] = {p: Poly.var(base, sign * p) for p in range(start, power + 1, m)}
        return cache[base]

    result = Poly.zero()
    for mono, c in F.terms.items():
        acc: Series = {0: Poly.const(c)}
        for v, e in mono:
            for _ in range(e):
                acc = _series_mul(acc, series(v.base_index), power)
                if not acc:
                    break
        if power in acc:
            result = result + acc[power]
    return result


def mirror(F: Poly) -> Poly:
    """t -> t^-1"""
    return F.rename(lambda v: Variable(v.base_index, -v.t_exponent))


def t_polarisation(F: Poly, k: int, grading: Grading, window: Optional[TwistedWindow] = None) -> Poly:
    """
    F_[k] for the [0]-style subalgebras

    k >= 0 gives an element of S(q[t^-1]^theta); k < 0 an element of S(q[t]^theta).
    Raises WindowOverflow when a window is given and the result leaves it.
    """
    m = grading.order
    deg = grading.degree_of
    if k >= 0:
        result = spread(F, k, lambda a: deg[a], m, -1)
    else:
        result = mirror(spread(F, -k, lambda a: (m - deg[a]) % m, m, -1))
    if window is not None:
        window.require(result)
    return result


def t_side_polarisation(F: Poly, k: int, grading: Grading, window: Optional[TwistedWindow] = None) -> Poly:
    """F_[k], k <= 0, spread over t q[t]^theta: x in q_i starts at t^(m-i)"""
    if k > 0:
        raise ValueError(f"t-side polarisations are indexed by k <= 0, got {k}")
    m = grading.order
    deg = grading.degree_of
    result = spread(F, -k, lambda a: m - deg[a], m, +1)
    if window is not None:
        window.require(result)
    return result


def _compositions(total: int, parts: int):
    """Ordered tuples of `parts` non-negative integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def polarisation_by_enumeration(F: Poly, k: int, grading: Grading) -> Poly:
    """
    Minus-side F_[k] by listing monomials directly

    Each monomial x_1 ... x_d (factors repeated) with degrees i_r contributes
    x_1 t^-(i_1+b_1 m) ... x_d t^-(i_d+b_d m) for every ordered b with
    sum_r (i_r + b_r m) = k.
    """
    _check_plain(F)
    m = grading.order
    deg = grading.degree_of
    terms: Dict[Monomial, CycloScalar] = {}
    for mono, c in F.terms.items():
        factors: List[int] = [v.base_index for v, e in mono for _ in range(e)]
        base_sum = sum(deg[a] for a in factors)
        if k < base_sum or (k - base_sum) % m:
            continue
        for betas in _compositions((k - base_sum) // m, len(factors)):
            powers: Dict[Variable, int] = {}
            for a, b in zip(factors, betas):
                v = Variable(a, -(deg[a] + b * m))
                powers[v] = powers.get(v, 0) + 1
            new = tuple(sorted(powers.items(), key=lambda item: (item[0].t_exponent, item[0].base_index)))
            total = terms[new] + c if new in terms else c
            if total:
                terms[new] = total
            else:
                terms.pop(new)
    return Poly(terms)


def vanishing_rule_holds(F: Poly, ell: int, grading: Grading, bound: int) -> bool:
    """F_[k] = 0 for every |k| <= bound with k not congruent to ell mod m"""
    m = grading.order
    for k in range(-bound, bound + 1):
        if (k - ell) % m and t_polarisation(F, k, grading):
            logger.debug(f"vanishing rule fails at k={k}")
            return False
    return True
