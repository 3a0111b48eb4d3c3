"""
Periodic Gradings
Eigenspace decomposition q = q_0 + ... + q_{m-1} of a finite-order automorphism,
realized as a change to a theta-eigenbasis.

Downstream code works in the eigenbasis: `Grading.eigen` is the algebra in the
new basis, with `degrees[a]` the residue of basis vector b_a.
"""

import logging
from typing import List, Optional, Sequence

from src.liealg.algebra import LieAlgebra, SparseVector, add_into
from src.liealg.automorphism import Automorphism
from src.scalars.cyclo import CycloScalar, is_primitive_root, zeta_power
from src.utils.checks import CheckResult
from src.utils.errors import InvalidRoot
from src.utils.linalg import (
    Matrix,
    identity,
    inverse,
    mat_mul,
    matrices_equal,
    row_space_basis,
    transpose,
    zeros,
)

logger = logging.getLogger(__name__)


def projectors(theta: Automorphism, zeta: CycloScalar) -> List[Matrix]:
    """P_i = (1/m) sum_k zeta^(-ik) theta^k for i = 0..m-1"""
    m = theta.order
    powers = [theta.power(k) for k in range(m)]
    dim = theta.algebra.dim
    inv_m = CycloScalar.rational(m).inverse()
    result = []
    for i in range(m):
        proj = zeros(dim, dim)
        for k, mat in enumerate(powers):
            weight = (zeta ** (-i * k)) * inv_m
            for r in range(dim):
                for c in range(dim):
                    if mat[r][c]:
                        proj[r][c] = proj[r][c] + weight * mat[r][c]
        result.append(proj)
    return result


def _label_for(vec: Sequence[CycloScalar], labels: Sequence[str], degree: int, position: int) -> str:
    support = [i for i, c in enumerate(vec) if c]
    if len(support) == 1 and vec[support[0]] == 1:
        return labels[support[0]]
    return f"u{degree}_{position}"


def change_basis(L: LieAlgebra, columns: Matrix, labels: Sequence[str], name: Optional[str] = None) -> LieAlgebra:
    """
    The same algebra written in a new basis

    Args:
        L: algebra in its original basis
        columns: square matrix whose column a is the new basis vector b_a in old coordinates
        labels: labels of the new basis vectors

    Returns:
        LieAlgebra with structure constants of [b_a, b_b] in the new basis
    """
    inv = inverse(columns)
    vectors: List[SparseVector] = []
    for a in range(L.dim):
        vectors.append({i: columns[i][a] for i in range(L.dim) if columns[i][a]})
    table = {}
    for a in range(L.dim):
        for b in range(L.dim):
            old = L.bracket(vectors[a], vectors[b])
            if not old:
                continue
            new: SparseVector = {}
            for i, c in old.items():
                add_into(new, {k: inv[k][i] for k in range(L.dim) if inv[k][i]}, c)
            if new:
                table[(a, b)] = new
    return LieAlgebra(name or L.name, labels, table)


class Grading:
    """
    Z_m-grading of `algebra` by the eigenspaces of `theta`

    Attributes:
        algebra: the algebra in its original basis
        theta: the automorphism, order m
        zeta: primitive m-th root of unity; q_i is the zeta^i-eigenspace
        change: columns are the eigenbasis vectors in original coordinates
        change_inv: inverse of `change`
        eigen: the algebra in the eigenbasis, carrying `degrees` and `modulus`
        components: eigenbasis indices of q_0, ..., q_{m-1}
    """

    def __init__(self, algebra: LieAlgebra, theta: Automorphism, zeta: CycloScalar, change: Matrix, degrees: Sequence[int]):
        self.algebra = algebra
        self.theta = theta
        self.zeta = zeta
        self.order = theta.order
        self.change = change
        self.change_inv = inverse(change)
        self.degree_of = list(degrees)
        labels = []
        seen = {}
        for a, d in enumerate(self.degree_of):
            position = seen.get(d, 0)
            seen[d] = position + 1
            labels.append(_label_for([row[a] for row in change], algebra.basis, d, position))
        self.eigen = change_basis(algebra, change, labels).with_grading(self.degree_of, self.order)
        self.components = [[a for a, d in enumerate(self.degree_of) if d == i] for i in range(self.order)]

    @property
    def m(self) -> int:
        return self.order

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def component_dims(self) -> List[int]:
        return [len(c) for c in self.components]

    def eigen_theta(self) -> Automorphism:
        """theta in the eigenbasis: diag(zeta^deg)"""
        return Automorphism.diagonal(
            self.eigen, [self.zeta ** d for d in self.degree_of], name=f"{self.theta.name}[eigen]"
        )

    def component_vectors(self, i: int) -> List[List[CycloScalar]]:
        """Basis of q_i in original coordinates"""
        return [[row[a] for row in self.change] for a in self.components[i]]

    def check(self) -> CheckResult:
        """[q_i, q_j] inside q_{(i+j) mod m} for every eigenbasis pair"""
        return self.eigen.check_grading()

    def inverse_grading(self) -> "Grading":
        """The same components read as a grading of theta^-1: residue i becomes (m - i) mod m"""
        m = self.order
        return Grading(
            self.algebra,
            self.theta.inverse(),
            self.zeta,
            self.change,
            [(m - d) % m for d in self.degree_of],
        )

    def __repr__(self) -> str:
        return f"Grading({self.algebra.name}, {self.theta.name}, m={self.order}, dims={self.component_dims()})"


def grading_from_automorphism(theta: Automorphism, zeta: Optional[CycloScalar] = None) -> Grading:
    """
    Grade an algebra by the eigenspaces of theta

    Args:
        theta: automorphism of order m
        zeta: primitive m-th root of unity; defaults to zeta_m

    Returns:
        Grading whose component i is the exact zeta^i-eigenspace
    """
    m = theta.order
    if zeta is None:
        zeta = zeta_power(m, 1)
    if not is_primitive_root(zeta, m):
        raise InvalidRoot(f"{zeta} is not a primitive {m}-th root of unity", witness=zeta)
    dim = theta.algebra.dim
    columns: List[List[CycloScalar]] = []
    degrees: List[int] = []
    for i, proj in enumerate(projectors(theta, zeta)):
        for vec in row_space_basis(transpose(proj)):
            columns.append(vec)
            degrees.append(i)
    if len(columns) != dim:
        raise InvalidRoot(f"eigenspaces of {theta.name} span {len(columns)} of {dim} dimensions")
    change = transpose(columns)
    grading = Grading(theta.algebra, theta, zeta, change, degrees)
    logger.info(f"graded {theta.algebra.name} by {theta.name}: component dims {grading.component_dims()}")
    return grading


def grading_from_degrees(L: LieAlgebra, degrees: Sequence[int], m: int, zeta: Optional[CycloScalar] = None) -> Grading:
    """
    Grading declared directly on the basis, theta = diag(zeta^deg)

    The automorphism check is skipped so that non-gradings can be built and then
    rejected by `Grading.check`.
    """
    zeta = zeta if zeta is not None else zeta_power(m, 1)
    mat = identity(L.dim)
    for i, d in enumerate(degrees):
        mat[i][i] = zeta ** d
    theta = Automorphism(L, mat, name=f"diag-grading-{m}", validate=False)
    if theta.order != m:
        # a declared grading may use fewer residues than m; keep m as the modulus
        theta.order = m
    return Grading(L, theta, zeta, identity(L.dim), degrees)


def check_projectors(theta: Automorphism, zeta: CycloScalar) -> CheckResult:
    """sum P_i = id and P_i P_j = delta_ij P_i, exactly"""
    projs = projectors(theta, zeta)
    dim = theta.algebra.dim
    total = zeros(dim, dim)
    for p in projs:
        total = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(total, p)]
    if not matrices_equal(total, identity(dim)):
        return CheckResult(False, "sum", 1)
    checked = 1
    for i, pi in enumerate(projs):
        for j, pj in enumerate(projs):
            checked += 1
            expected = pi if i == j else zeros(dim, dim)
            if not matrices_equal(mat_mul(pi, pj), expected):
                return CheckResult(False, (i, j), checked)
    return CheckResult(True, None, checked)
