"""
Lie Algebras
Finite-dimensional Lie algebras given by structure constants over Q(zeta_M),
with optional Z_m-grading metadata on the basis
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.scalars.cyclo import CycloScalar, as_scalar, common_order
from src.utils.checks import CheckResult
from src.utils.errors import JobParseError
from src.utils.linalg import Matrix, zeros

logger = logging.getLogger(__name__)

SparseVector = Dict[int, CycloScalar]
Table = Dict[Tuple[int, int], SparseVector]


def _clean(vec: SparseVector) -> SparseVector:
    return {k: c for k, c in vec.items() if c}


def add_into(target: SparseVector, vec: SparseVector, factor: Optional[CycloScalar] = None):
    """target += factor * vec, dropping cancelled entries"""
    for k, c in vec.items():
        value = c if factor is None else factor * c
        total = target[k] + value if k in target else value
        if total:
            target[k] = total
        else:
            target.pop(k, None)


class LieAlgebra:
    """
    Lie algebra on a labelled basis x_0..x_{dim-1}

    `table[(i, j)]` is the sparse coordinate vector of [x_i, x_j]. Pairs that
    bracket to zero are absent. When `degrees` is set, x_i spans part of the
    degree-`degrees[i]` component of a Z_modulus grading.
    """

    def __init__(
        self,
        name: str,
        basis: Sequence[str],
        table: Table,
        degrees: Optional[Sequence[int]] = None,
        modulus: int = 1,
    ):
        self.name = name
        self.basis = tuple(basis)
        self.table: Table = {}
        for pair, vec in table.items():
            cleaned = _clean(vec)
            if cleaned:
                self.table[pair] = cleaned
        self.degrees = tuple(degrees) if degrees is not None else None
        self.modulus = modulus
        if self.degrees is not None and len(self.degrees) != len(self.basis):
            raise ValueError(f"{name}: {len(self.degrees)} degrees for {len(self.basis)} basis elements")

    @classmethod
    def from_brackets(
        cls,
        name: str,
        basis: Sequence[str],
        brackets: Iterable[Tuple[int, int, Dict[int, object]]],
        degrees: Optional[Sequence[int]] = None,
        modulus: int = 1,
    ) -> "LieAlgebra":
        """Build from [x_i, x_j] entries; the reversed pair is filled by antisymmetry when absent"""
        table: Table = {}
        for i, j, vec in brackets:
            table[(i, j)] = {k: as_scalar(c) for k, c in vec.items()}
        for (i, j), vec in list(table.items()):
            if (j, i) not in table:
                table[(j, i)] = {k: -c for k, c in vec.items()}
        return cls(name, basis, table, degrees, modulus)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"{self.name} has no basis element '{label}'") from None

    def scalar_order(self) -> int:
        """Smallest M such that all structure constants lie in Q(zeta_M)"""
        return common_order(*(c.order for vec in self.table.values() for c in vec.values()))

    def with_grading(self, degrees: Sequence[int], modulus: int, name: Optional[str] = None) -> "LieAlgebra":
        return LieAlgebra(name or self.name, self.basis, self.table, degrees, modulus)

    # ------------------------------------------------------------------
    # brackets

    def bracket_basis(self, i: int, j: int) -> SparseVector:
        return self.table.get((i, j), {})

    def bracket(self, u: SparseVector, v: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for i, a in u.items():
            for j, b in v.items():
                vec = self.table.get((i, j))
                if vec:
                    add_into(result, vec, a * b)
        return result

    def ad_matrix(self, i: int) -> Matrix:
        """Matrix of ad x_i: column j holds the coordinates of [x_i, x_j]"""
        mat = zeros(self.dim, self.dim)
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                mat[k][j] = c
        return mat

    def structure_matrix(self, xi: Sequence[CycloScalar]) -> Matrix:
        """B(xi)_{ij} = xi([x_i, x_j])"""
        mat = zeros(self.dim, self.dim)
        for (i, j), vec in self.table.items():
            acc = CycloScalar.zero()
            for k, c in vec.items():
                if xi[k]:
                    acc = acc + c * xi[k]
            mat[i][j] = acc
        return mat

    def killing_form(self) -> Matrix:
        """Gram matrix of tr(ad x_i ad x_j)"""
        ads = [self.ad_matrix(i) for i in range(self.dim)]
        gram = zeros(self.dim, self.dim)
        for i in range(self.dim):
            for j in range(i, self.dim):
                acc = CycloScalar.zero()
                for p in range(self.dim):
                    for q in range(self.dim):
                        if ads[i][p][q] and ads[j][q][p]:
                            acc = acc + ads[i][p][q] * ads[j][q][p]
                gram[i][j] = gram[j][i] = acc
        return gram

    def is_abelian(self) -> bool:
        return not self.table

    # ------------------------------------------------------------------
    # validation

    def check_jacobi(self) -> CheckResult:
        """
        Antisymmetry on all pairs, then the Jacobi identity on all triples i < j < k

        Returns:
            CheckResult whose witness is ("antisymmetry", (i, j)) or ("jacobi", (i, j, k))
        """
        n = self.dim
        checked = 0
        for i in range(n):
            for j in range(i, n):
                checked += 1
                forward = self.bracket_basis(i, j)
                backward = self.bracket_basis(j, i)
                if set(forward) != set(backward) or any(forward[k] != -backward[k] for k in forward):
                    logger.debug(f"{self.name}: antisymmetry fails on {(i, j)}")
                    return CheckResult(False, ("antisymmetry", (i, j)), checked)
        for i in range(n):
            for j in range(i + 1, n):
                ij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    checked += 1
                    total: SparseVector = {}
                    add_into(total, self.bracket(ij, {k: CycloScalar.one()}))
                    add_into(total, self.bracket(self.bracket_basis(j, k), {i: CycloScalar.one()}))
                    add_into(total, self.bracket(self.bracket_basis(k, i), {j: CycloScalar.one()}))
                    if total:
                        logger.debug(f"{self.name}: Jacobi fails on {(i, j, k)}")
                        return CheckResult(False, ("jacobi", (i, j, k)), checked)
        return CheckResult(True, None, checked)

    def check_grading(self) -> CheckResult:
        """[q_i, q_j] lands in q_{(i+j) mod m} for every basis pair"""
        if self.degrees is None:
            return CheckResult(True, None, 0)
        m = self.modulus
        checked = 0
        for (i, j), vec in self.table.items():
            checked += 1
            target = (self.degrees[i] + self.degrees[j]) % m
            for k in vec:
                if self.degrees[k] != target:
                    return CheckResult(False, ("grading", (i, j), k), checked)
        return CheckResult(True, None, checked)

    # ------------------------------------------------------------------
    # JSON algebra documents

    def to_json(self) -> dict:
        order = self.scalar_order()
        brackets = []
        for (i, j) in sorted(self.table):
            if i < j:
                vec = self.table[(i, j)]
                brackets.append([i, j, [[k, vec[k].lift(order).to_json()] for k in sorted(vec)]])
        doc = {
            "name": self.name,
            "cyclotomic_order": order,
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": brackets,
        }
        if self.degrees is not None:
            doc["degrees"] = list(self.degrees)
            doc["modulus"] = self.modulus
        return doc

    @classmethod
    def from_json(cls, doc: dict, location: str = "$") -> "LieAlgebra":
        for key in ("name", "dim", "basis", "brackets"):
            if key not in doc:
                raise JobParseError(f"missing key '{key}'", location)
        order = doc.get("cyclotomic_order", 1)
        if not isinstance(order, int) or order < 1:
            raise JobParseError("cyclotomic_order must be a positive integer", f"{location}.cyclotomic_order")
        basis = doc["basis"]
        if len(basis) != doc["dim"]:
            raise JobParseError(f"dim {doc['dim']} but {len(basis)} basis labels", f"{location}.basis")
        entries = []
        for pos, entry in enumerate(doc["brackets"]):
            where = f"{location}.brackets[{pos}]"
            try:
                i, j, terms = entry
                vec = {int(k): CycloScalar.from_json(c, order) for k, c in terms}
            except (TypeError, ValueError) as exc:
                raise JobParseError(f"bad bracket entry: {exc}", where) from exc
            if not (0 <= i < len(basis) and 0 <= j < len(basis)) or any(
                not 0 <= k < len(basis) for k in vec
            ):
                raise JobParseError("basis index out of range", where)
            entries.append((i, j, vec))
        return cls.from_brackets(
            doc["name"], basis, entries, doc.get("degrees"), doc.get("modulus", 1)
        )

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def abelian(dim: int, name: Optional[str] = None, labels: Optional[List[str]] = None) -> LieAlgebra:
    return LieAlgebra(name or f"abelian{dim}", labels or [f"a{i}" for i in range(dim)], {})
