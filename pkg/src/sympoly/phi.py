"""
Grading Decompositions of Polynomials
phi_s-eigencomponents F = sum_j F_j, highest components F*, and the split of a
polynomial into theta-eigencomponents
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.liealg.automorphism import Automorphism
from src.scalars.cyclo import CycloScalar
from src.sympoly.poly import Monomial, Poly, apply_linear, poly_sum
from src.utils.errors import EmptyInput


@dataclass
class PhiSplit:
    """F = sum_j components[j] with phi_s(components[j]) = s^j components[j]"""

    components: Dict[int, Poly] = field(default_factory=dict)

    def total(self) -> Poly:
        return poly_sum(self.components[j] for j in sorted(self.components))

    def degrees(self) -> List[int]:
        return sorted(self.components)

    def get(self, j: int) -> Poly:
        return self.components.get(j, Poly.zero())


def phi_degree(mono: Monomial, degrees: Sequence[int]) -> int:
    """Sum of the integer grading representatives of the factors"""
    return sum(degrees[v.base_index] * e for v, e in mono)


def phi_split(F: Poly, degrees: Sequence[int]) -> PhiSplit:
    """
    Group monomials by phi-degree

    Args:
        F: polynomial in eigenbasis variables with t-exponent 0
        degrees: grading residue in {0..m-1} of each basis index

    Returns:
        PhiSplit whose components sum back to F exactly
    """
    buckets: Dict[int, Dict[Monomial, CycloScalar]] = {}
    for mono, c in F.terms.items():
        buckets.setdefault(phi_degree(mono, degrees), {})[mono] = c
    return PhiSplit({j: Poly(terms) for j, terms in buckets.items()})


def highest_component(F: Poly, degrees: Sequence[int]) -> Tuple[int, Poly]:
    """(d*, F*): the nonzero phi-component of maximal degree"""
    if not F:
        raise EmptyInput("highest component of the zero polynomial")
    split = phi_split(F, degrees)
    top = max(split.components)
    return top, split.components[top]


def theta_eigen_split(F: Poly, theta: Automorphism, zeta: CycloScalar) -> List[Tuple[int, CycloScalar, Poly]]:
    """
    Components of F under the projectors (1/m) sum_k zeta^(-uk) theta^k on S(q)

    Returns:
        list of (u, zeta^u, F_u) for the nonzero components, u ascending
    """
    m = theta.order
    images = [F]
    for k in range(1, m):
        images.append(apply_linear(images[-1], theta.matrix))
    inv_m = CycloScalar.rational(m).inverse()
    result = []
    for u in range(m):
        comp = poly_sum(img.scale(zeta ** (-u * k) * inv_m) for k, img in enumerate(images))
        if comp:
            result.append((u, zeta ** u, comp))
    return result


def eigen_exponent(F: Poly, theta: Automorphism, zeta: CycloScalar):
    """u with theta(F) = zeta^u F, or None when F is not a theta-eigenvector"""
    image = apply_linear(F, theta.matrix)
    for u in range(theta.order):
        if image == F.scale(zeta ** u):
            return u
    return None


def to_eigenbasis(F: Poly, grading) -> Poly:
    """
    Rewrite a polynomial on the original basis in eigenbasis variables

    x_i = sum_a change_inv[a][i] b_a, so x_i is replaced by that linear form.
    """
    return apply_linear(F, grading.change_inv)


def from_eigenbasis(F: Poly, grading) -> Poly:
    return apply_linear(F, grading.change)
