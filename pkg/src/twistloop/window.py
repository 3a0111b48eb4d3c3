"""
Twisted Loop Windows
Finite models of the twisted loop algebra q^ = sum_k q_{k mod m} t^-k: the loop
bracket on t-graded variables, windows of t-exponents, the cyclic quotients
q[t^-1]^theta / (t^-N - 1), and the truncated current algebras q[t]^theta / (t^N).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.liealg.algebra import LieAlgebra
from src.liealg.directsum import direct_sum
from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar, zeta_power
from src.sympoly.poisson import PoissonAlgebra
from src.sympoly.poly import Poly, Variable
from src.utils.checks import CheckResult
from src.utils.errors import BadTruncation, UnknownVariable, WindowOverflow
from src.utils.linalg import rank, zeros

logger = logging.getLogger(__name__)


def is_loop_variable(grading: Grading, v: Variable) -> bool:
    """x t^k lies in the twisted loop algebra iff x is in q_{(-k) mod m}"""
    return 0 <= v.base_index < grading.dim and grading.degree_of[v.base_index] == (-v.t_exponent) % grading.order


def loop_poisson(grading: Grading) -> PoissonAlgebra:
    """{x t^a, y t^b} = [x, y] t^(a+b) in the untruncated twisted loop algebra"""
    eigen = grading.eigen

    def bracket(u: Variable, v: Variable) -> Poly:
        for w in (u, v):
            if not is_loop_variable(grading, w):
                raise UnknownVariable(f"{w} is not in the twisted loop algebra of {eigen.name}", witness=w)
        return Poly.linear(eigen.bracket_basis(u.base_index, v.base_index), u.t_exponent + v.t_exponent)

    return PoissonAlgebra(bracket, name=f"{eigen.name}^")


@dataclass
class TwistedWindow:
    """
    A slice of the twisted loop algebra

    Variables x t^e with `e_min <= e <= e_max` (t-exponents, so the minus side has
    e <= 0) and x in q_{(-e) mod m}. For `cyclic` and `takiff` sides `algebra` is
    the finite-dimensional quotient and `index_of` maps (base, exponent) to its basis.
    """

    grading: Grading
    e_min: int
    e_max: int
    side: str = "minus"
    N: int = 0
    algebra: Optional[LieAlgebra] = None
    index_of: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def variables(self) -> List[Variable]:
        out = []
        for e in range(self.e_min, self.e_max + 1):
            for a in range(self.grading.dim):
                v = Variable(a, e)
                if is_loop_variable(self.grading, v):
                    out.append(v)
        return out

    def contains(self, v: Variable) -> bool:
        return self.e_min <= v.t_exponent <= self.e_max and is_loop_variable(self.grading, v)

    def require(self, F: Poly):
        for v in F.variables():
            if not self.contains(v):
                raise WindowOverflow(
                    f"{v} outside the {self.side} window [{self.e_min}, {self.e_max}]", witness=v
                )

    def label(self, v: Variable) -> str:
        base = self.grading.eigen.basis[v.base_index]
        return base if v.t_exponent == 0 else f"{base}[t^{v.t_exponent}]"


def minus_window(grading: Grading, depth: int) -> TwistedWindow:
    """x t^-k for 0 <= k <= depth"""
    return TwistedWindow(grading, -depth, 0, "minus", depth)


def t_side_window(grading: Grading, depth: int) -> TwistedWindow:
    """x t^k for 1 <= k <= depth"""
    return TwistedWindow(grading, 1, depth, "t-side", depth)


def w_window(grading: Grading, N: int) -> TwistedWindow:
    """(q t^{-N+1} + ... + q t^-1)^Theta + q_0"""
    return TwistedWindow(grading, -(N - 1), 0, "W_N", N)


def build_cyclic_quotient(grading: Grading, N: int) -> TwistedWindow:
    """
    q[t^-1]^theta / (t^-N - 1) as a Lie algebra

    Basis x t^-k, 0 <= k < N, with x in the eigenbasis of q_{k mod m};
    [x t^-a, y t^-b] = [x, y] t^-((a + b) mod N).
    """
    m = grading.order
    if N < 1 or N % m:
        raise BadTruncation(f"cyclic quotient needs N a positive multiple of m={m}, got {N}", witness=N)
    eigen = grading.eigen
    index_of: Dict[Tuple[int, int], int] = {}
    labels = []
    degrees = []
    for k in range(N):
        for a in range(eigen.dim):
            if grading.degree_of[a] == k % m:
                index_of[(a, k)] = len(labels)
                labels.append(eigen.basis[a] if k == 0 else f"{eigen.basis[a]}[t^-{k}]")
                degrees.append(k)
    table = {}
    for (a, ka), i in index_of.items():
        for (b, kb), j in index_of.items():
            vec = eigen.bracket_basis(a, b)
            if vec:
                k = (ka + kb) % N
                table[(i, j)] = {index_of[(c, k)]: coeff for c, coeff in vec.items()}
    algebra = LieAlgebra(f"{eigen.name}[t^-1]/(t^-{N}-1)", labels, table, degrees, N)
    logger.info(f"cyclic quotient N={N}: dim {algebra.dim}")
    return TwistedWindow(grading, -(N - 1), 0, "cyclic", N, algebra, index_of)


def embed_in_quotient(window: TwistedWindow, F: Poly) -> Poly:
    """Send x t^e to the quotient basis element x t^-((-e) mod N)"""
    N = window.N

    def image(v: Variable) -> Variable:
        key = (v.base_index, (-v.t_exponent) % N)
        if key not in window.index_of:
            raise UnknownVariable(f"{v} has no image in the cyclic quotient", witness=v)
        return Variable(window.index_of[key], 0)

    return F.rename(image)


def quotient_isomorphism(window: TwistedWindow, zeta_tilde: Optional[CycloScalar] = None) -> CheckResult:
    """
    Check the Fourier map x t^-k -> (zeta~^(ck) x)_c onto q^{+n}, n = N/m

    Verifies that it is bijective and preserves every basis bracket.
    """
    grading = window.grading
    N = window.N
    n = N // grading.order
    if zeta_tilde is None:
        zeta_tilde = zeta_power(N, 1)
    eigen = grading.eigen
    target = direct_sum(eigen, n)
    source = window.algebra
    images = {}
    for (a, k), i in window.index_of.items():
        images[i] = {c * eigen.dim + a: zeta_tilde ** (c * k) for c in range(n)}
    mat = zeros(target.dim, source.dim)
    for i, vec in images.items():
        for r, val in vec.items():
            mat[r][i] = val
    if source.dim != target.dim or rank(mat) != target.dim:
        return CheckResult(False, "not bijective", 0)
    checked = 0
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            checked += 1
            lhs: Dict[int, CycloScalar] = {}
            for k, c in source.bracket_basis(i, j).items():
                for r, val in images[k].items():
                    total = lhs.get(r, CycloScalar.zero()) + c * val
                    if total:
                        lhs[r] = total
                    else:
                        lhs.pop(r, None)
            rhs = target.bracket(images[i], images[j])
            if set(lhs) != set(rhs) or any(lhs[r] != rhs[r] for r in lhs):
                return CheckResult(False, (i, j), checked)
    return CheckResult(True, None, checked, {"n": n})


def build_takiff(grading: Grading, N: int) -> LieAlgebra:
    """
    q[t]^theta / (t^N): basis x t^k, 0 <= k < N, x in q_{(-k) mod m}

    Brackets reaching t^N vanish.
    """
    if N < 1:
        raise BadTruncation(f"Takiff truncation needs N >= 1, got {N}", witness=N)
    m = grading.order
    eigen = grading.eigen
    index_of: Dict[Tuple[int, int], int] = {}
    labels = []
    for k in range(N):
        for a in range(eigen.dim):
            if grading.degree_of[a] == (-k) % m:
                index_of[(a, k)] = len(labels)
                labels.append(eigen.basis[a] if k == 0 else f"{eigen.basis[a]}[t^{k}]")
    table = {}
    for (a, ka), i in index_of.items():
        for (b, kb), j in index_of.items():
            if ka + kb >= N:
                continue
            vec = eigen.bracket_basis(a, b)
            if vec:
                table[(i, j)] = {index_of[(c, ka + kb)]: coeff for c, coeff in vec.items()}
    return LieAlgebra(f"{eigen.name}[t]/(t^{N})", labels, table)
