"""
Eigenvector Generators on r = q^{+n}
H_{rj+i} = (1/n) sum_k w^(jk) z~^(-k l_i) theta~^k(F_i), with F_i placed in the
first summand, z~ a primitive nm-th root with z~^n = zeta and w = z~^m.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.liealg.automorphism import Automorphism
from src.liealg.directsum import cyclic_twist
from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar, is_primitive_root
from src.sympoly.poly import Poly, apply_linear, poly_sum
from src.utils.checks import CheckResult
from src.utils.errors import BadRoot

logger = logging.getLogger(__name__)


@dataclass
class HGenerator:
    """H for generator `i` and twist index `j`; theta~(H) = z~^exponent H"""

    i: int
    j: int
    poly: Poly
    exponent: int


def build_H_generators(
    generators: Sequence[Tuple[Poly, int]],
    grading: Grading,
    n: int,
    zeta_tilde: CycloScalar,
) -> Tuple[List[HGenerator], Automorphism]:
    """
    Args:
        generators: (F_i, l_i) with F_i a theta-eigenvector in eigenbasis variables
        grading: the grading of q by theta
        n: number of summands
        zeta_tilde: primitive nm-th root of unity with zeta_tilde^n == zeta

    Returns:
        (the H_{rj+i} for j = 0..n-1 in generator order, theta~ on r)
    """
    m = grading.order
    N = n * m
    if zeta_tilde ** n != grading.zeta or not is_primitive_root(zeta_tilde, N):
        raise BadRoot(f"{zeta_tilde} is not a primitive {N}-th root with n-th power {grading.zeta}", witness=zeta_tilde)
    twist = cyclic_twist(grading.eigen_theta(), n)
    omega = zeta_tilde ** m
    inv_n = CycloScalar.rational(n).inverse()
    result = []
    for i, (F, ell) in enumerate(generators):
        images = [F]
        for _ in range(1, n):
            images.append(apply_linear(images[-1], twist.matrix))
        for j in range(n):
            H = poly_sum(
                img.scale(omega ** (j * k) * zeta_tilde ** (-k * ell) * inv_n) for k, img in enumerate(images)
            )
            result.append(HGenerator(i, j, H, (ell - m * j) % N))
    logger.info(f"built {len(result)} H-generators on {twist.algebra.name}")
    return result, twist


def check_H_generator(h: HGenerator, twist: Automorphism, zeta_tilde: CycloScalar) -> CheckResult:
    """theta~(H) == z~^exponent H exactly"""
    image = apply_linear(h.poly, twist.matrix)
    expected = h.poly.scale(zeta_tilde ** h.exponent)
    return CheckResult(image == expected, None if image == expected else {"image": image, "expected": expected}, 1)
