"""
Finite-Order Automorphisms
Matrices on a Lie algebra basis that respect the bracket and have finite order
"""

import logging
from typing import Optional, Sequence

from src.liealg.algebra import LieAlgebra, SparseVector
from src.scalars.cyclo import CycloScalar, common_order
from src.utils.checks import CheckResult
from src.utils.errors import InvalidAutomorphism
from src.utils.linalg import Matrix, identity, mat_mul, matrices_equal, to_matrix

logger = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 24


class Automorphism:
    """
    Linear map theta on an algebra; `matrix[i][j]` is the x_i-coordinate of theta(x_j)

    The order m is the least m >= 1 with theta^m = id, searched up to `order_cap`.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        matrix: Sequence[Sequence],
        name: str = "theta",
        order_cap: int = DEFAULT_ORDER_CAP,
        validate: bool = True,
    ):
        self.algebra = algebra
        self.matrix: Matrix = to_matrix(matrix)
        self.name = name
        if len(self.matrix) != algebra.dim or any(len(r) != algebra.dim for r in self.matrix):
            raise InvalidAutomorphism(f"{name}: matrix is not {algebra.dim}x{algebra.dim}")
        if validate:
            check = self.check_homomorphism()
            if not check:
                raise InvalidAutomorphism(
                    f"{name} does not respect the bracket of {algebra.name} on pair {check.witness}",
                    witness=check.witness,
                )
        self.order = self._find_order(order_cap)

    @classmethod
    def identity(cls, algebra: LieAlgebra) -> "Automorphism":
        return cls(algebra, identity(algebra.dim), name="id", validate=False)

    @classmethod
    def diagonal(cls, algebra: LieAlgebra, scalars: Sequence[CycloScalar], name: str = "diag") -> "Automorphism":
        mat = identity(algebra.dim)
        for i, c in enumerate(scalars):
            mat[i][i] = c
        return cls(algebra, mat, name=name)

    def image(self, j: int) -> SparseVector:
        return {i: self.matrix[i][j] for i in range(self.algebra.dim) if self.matrix[i][j]}

    def apply(self, vec: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for j, c in vec.items():
            for i in range(self.algebra.dim):
                if self.matrix[i][j]:
                    value = result[i] + c * self.matrix[i][j] if i in result else c * self.matrix[i][j]
                    if value:
                        result[i] = value
                    else:
                        result.pop(i)
        return result

    def check_homomorphism(self) -> CheckResult:
        """theta([x_i, x_j]) == [theta x_i, theta x_j] on every basis pair"""
        L = self.algebra
        checked = 0
        for i in range(L.dim):
            ti = self.image(i)
            for j in range(i + 1, L.dim):
                checked += 1
                lhs = self.apply(L.bracket_basis(i, j))
                rhs = L.bracket(ti, self.image(j))
                if set(lhs) != set(rhs) or any(lhs[k] != rhs[k] for k in lhs):
                    return CheckResult(False, (i, j), checked)
        return CheckResult(True, None, checked)

    def _find_order(self, cap: int) -> int:
        ident = identity(self.algebra.dim)
        power = self.matrix
        for m in range(1, cap + 1):
            if matrices_equal(power, ident):
                return m
            power = mat_mul(power, self.matrix)
        raise InvalidAutomorphism(f"{self.name} has no finite order <= {cap}")

    def power(self, k: int) -> Matrix:
        k %= self.order
        result = identity(self.algebra.dim)
        for _ in range(k):
            result = mat_mul(result, self.matrix)
        return result

    def inverse(self) -> "Automorphism":
        return Automorphism(
            self.algebra, self.power(self.order - 1), name=f"{self.name}^-1", validate=False
        )

    def scalar_order(self) -> int:
        return common_order(*(c.order for row in self.matrix for c in row if c))

    def to_json(self, order: Optional[int] = None) -> dict:
        order = order or self.scalar_order()
        return {
            "name": self.name,
            "cyclotomic_order": order,
            "matrix": [[c.lift(order).to_json() for c in row] for row in self.matrix],
        }

    def __repr__(self) -> str:
        return f"Automorphism({self.name!r} on {self.algebra.name}, order={self.order})"
