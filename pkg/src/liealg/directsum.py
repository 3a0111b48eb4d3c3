"""
Direct Sums and the Cyclic Twist
r = q^{+n} and the automorphism that applies theta to one copy and rotates the copies
"""

import logging

from src.liealg.algebra import LieAlgebra
from src.liealg.automorphism import Automorphism
from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar, is_primitive_root
from src.utils.checks import CheckResult
from src.utils.errors import BadRoot
from src.utils.linalg import mat_vec, nullspace, rank, zeros

logger = logging.getLogger(__name__)


def copy_label(label: str, copy: int) -> str:
    return f"{label}@{copy}"


def direct_sum(L: LieAlgebra, n: int) -> LieAlgebra:
    """n copies of L; copy c occupies indices c*dim .. c*dim + dim - 1"""
    if n < 1:
        raise ValueError("direct sum needs n >= 1")
    dim = L.dim
    labels = [copy_label(lab, c) for c in range(n) for lab in L.basis]
    table = {}
    for c in range(n):
        off = c * dim
        for (i, j), vec in L.table.items():
            table[(off + i, off + j)] = {off + k: v for k, v in vec.items()}
    degrees = None
    if L.degrees is not None:
        degrees = list(L.degrees) * n
    return LieAlgebra(f"{L.name}^{n}" if n > 1 else L.name, labels, table, degrees, L.modulus)


def cyclic_twist(theta: Automorphism, n: int) -> Automorphism:
    """
    theta~(y_1, ..., y_n) = (y_n, theta(y_1), y_2, ..., y_{n-1}); order n*m

    For n = 1 this is theta itself.
    """
    if n < 1:
        raise ValueError("cyclic twist needs n >= 1")
    L = theta.algebra
    dim = L.dim
    big = direct_sum(L, n)
    if n == 1:
        return Automorphism(big, theta.matrix, name=theta.name, validate=False)
    mat = zeros(n * dim, n * dim)
    for j in range(dim):
        # copy 0 goes to copy 1 through theta
        for i in range(dim):
            if theta.matrix[i][j]:
                mat[dim + i][j] = theta.matrix[i][j]
        for c in range(1, n):
            target = (c + 1) % n
            mat[target * dim + j][c * dim + j] = mat[target * dim + j][c * dim + j] + 1
    return Automorphism(big, mat, name=f"{theta.name}~{n}", validate=False, order_cap=n * theta.order)


def diagonal_embedding(L: LieAlgebra, n: int, vec: dict) -> dict:
    """x -> (x, ..., x)"""
    return {c * L.dim + k: v for c in range(n) for k, v in vec.items()}


def check_cyclic_twist(grading: Grading, n: int, zeta_tilde: CycloScalar) -> CheckResult:
    """
    Eigenspaces of theta~ on r = q^{+n}, with theta in the eigenbasis of `grading`

    The zeta~^s-eigenspace r_s must project isomorphically onto q_{s mod m} through
    the first copy; the projection commutes with the diagonal q_0 action. For s = 0
    this makes r^theta~ the diagonal copy of q_0, which is checked directly as well.

    Raises:
        BadRoot: zeta_tilde is not a primitive nm-th root with zeta_tilde^n == zeta
    """
    L = grading.eigen
    m = grading.order
    size = n * L.dim
    if zeta_tilde ** n != grading.zeta or not is_primitive_root(zeta_tilde, n * m):
        raise BadRoot(f"{zeta_tilde} is not a primitive {n * m}-th root over {grading.zeta}", witness=zeta_tilde)
    twist = cyclic_twist(grading.eigen_theta(), n)
    checked = 0
    for s in range(n * m):
        value = zeta_tilde ** s
        shifted = [
            [twist.matrix[r][c] - value if r == c else twist.matrix[r][c] for c in range(size)] for r in range(size)
        ]
        space = nullspace(shifted, size)
        target = grading.components[s % m]
        checked += 1
        if len(space) != len(target):
            return CheckResult(False, {"s": s, "dim": len(space), "expected": len(target)}, checked)
        heads = [vec[: L.dim] for vec in space]
        stray = any(vec[a] for vec in heads for a in range(L.dim) if grading.degree_of[a] != s % m)
        if stray or (heads and rank(heads) != len(target)):
            return CheckResult(False, {"s": s, "projection": f"not onto q_{s % m}"}, checked)
    for a in grading.components[0]:
        sparse = diagonal_embedding(L, n, {a: CycloScalar.one()})
        vec = [sparse.get(k, CycloScalar.zero()) for k in range(size)]
        checked += 1
        if mat_vec(twist.matrix, vec) != vec:
            return CheckResult(False, {"not_fixed": L.basis[a]}, checked)
    logger.debug(f"cyclic twist of {L.name} with n={n}: {checked} eigenspace checks")
    return CheckResult(True, None, checked)
