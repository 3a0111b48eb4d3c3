"""
Algebra Catalog
Small matrix Lie algebras with named automorphisms, addressable by id
(`sl2`, `sl3`, `sl4`, `so3`, `heisenberg3`, `sl2xsl2`) and automorphism strings
such as `id`, `inner:diag(1,-1)`, `inner:zdiag(3;0,1,2)`, `outer:negtranspose`,
`basis:diag(-1,-1,1)` or `outer:swap`.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional

from src.liealg.algebra import LieAlgebra
from src.liealg.automorphism import Automorphism
from src.scalars.cyclo import CycloScalar, to_rational, zeta_power
from src.utils.errors import InvalidAutomorphism, JobParseError
from src.utils.linalg import Matrix, identity, mat_mul, solve_in_span, transpose, zeros

logger = logging.getLogger(__name__)


@dataclass
class CatalogEntry:
    """A catalog algebra together with its matrix realization and preset automorphisms"""

    name: str
    algebra: LieAlgebra
    matrices: Optional[List[Matrix]]
    rank: Optional[int]
    reductive: bool
    presets: Dict[str, str] = field(default_factory=dict)
    description: str = ""

    def coordinates(self, mat: Matrix) -> List[CycloScalar]:
        """Coordinates of a matrix in the realization basis"""
        flat_basis = [[x for row in b for x in row] for b in self.matrices]
        coords = solve_in_span(flat_basis, [x for row in mat for x in row])
        if coords is None:
            raise InvalidAutomorphism(f"matrix leaves the realization of {self.name}")
        return coords


def _unit(n: int, a: int, b: int) -> Matrix:
    mat = zeros(n, n)
    mat[a][b] = CycloScalar.one()
    return mat


def _commutator(x: Matrix, y: Matrix) -> Matrix:
    xy, yx = mat_mul(x, y), mat_mul(y, x)
    return [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def algebra_from_matrices(name: str, labels: List[str], matrices: List[Matrix]) -> LieAlgebra:
    """Structure constants of a matrix Lie algebra from commutators"""
    flat_basis = [[x for row in b for x in row] for b in matrices]
    brackets = []
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            comm = _commutator(matrices[i], matrices[j])
            coords = solve_in_span(flat_basis, [x for row in comm for x in row])
            if coords is None:
                raise ValueError(f"{name}: [{labels[i]}, {labels[j]}] leaves the span")
            vec = {k: c for k, c in enumerate(coords) if c}
            if vec:
                brackets.append((i, j, vec))
    return LieAlgebra.from_brackets(name, labels, brackets)


def sl_basis(n: int):
    """E_ab for a != b, then H_a = E_aa - E_(a+1)(a+1); sl2 uses e, f, h"""
    labels, mats = [], []
    for a in range(n):
        for b in range(n):
            if a != b:
                labels.append(f"E{a + 1}{b + 1}")
                mats.append(_unit(n, a, b))
    for a in range(n - 1):
        h = zeros(n, n)
        h[a][a] = CycloScalar.one()
        h[a + 1][a + 1] = CycloScalar.rational(-1)
        labels.append(f"H{a + 1}")
        mats.append(h)
    if n == 2:
        labels = ["e", "f", "h"]
    return labels, mats


def _so3_basis():
    def m(entries):
        mat = zeros(3, 3)
        for (a, b), v in entries.items():
            mat[a][b] = CycloScalar.rational(v)
        return mat

    return ["Lx", "Ly", "Lz"], [
        m({(2, 1): 1, (1, 2): -1}),
        m({(0, 2): 1, (2, 0): -1}),
        m({(1, 0): 1, (0, 1): -1}),
    ]


def _block_diagonal(blocks: List[Matrix]) -> Matrix:
    size = sum(len(b) for b in blocks)
    mat = zeros(size, size)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                mat[off + i][off + j] = x
        off += len(b)
    return mat


def _build_entry(name: str) -> CatalogEntry:
    if name in ("sl2", "sl3", "sl4"):
        n = int(name[2])
        labels, mats = sl_basis(n)
        presets = {"id": "id"}
        if n == 2:
            presets.update({"involution": "inner:diag(1,-1)", "order3": "inner:zdiag(3;1,0)"})
        elif n == 3:
            presets.update(
                {
                    "inner-involution": "inner:diag(1,1,-1)",
                    "outer-involution": "outer:negtranspose",
                    "order3": "inner:zdiag(3;0,1,2)",
                }
            )
        else:
            presets.update({"inner-involution": "inner:diag(1,1,-1,-1)", "outer-involution": "outer:negtranspose"})
        return CatalogEntry(
            name, algebra_from_matrices(name, labels, mats), mats, n - 1, True, presets,
            f"traceless {n}x{n} matrices",
        )
    if name == "so3":
        labels, mats = _so3_basis()
        return CatalogEntry(
            name, algebra_from_matrices(name, labels, mats), mats, 1, True,
            {"id": "id", "involution": "inner:diag(1,1,-1)"}, "antisymmetric 3x3 matrices",
        )
    if name == "heisenberg3":
        mats = [_unit(3, 0, 1), _unit(3, 1, 2), _unit(3, 0, 2)]
        return CatalogEntry(
            name, algebra_from_matrices(name, ["x", "y", "z"], mats), mats, None, False,
            {"id": "id", "involution": "basis:diag(-1,-1,1)"}, "strictly upper triangular 3x3 matrices",
        )
    if name == "sl2xsl2":
        labels, small = sl_basis(2)
        zero = zeros(2, 2)
        mats = [_block_diagonal([b, zero]) for b in small] + [_block_diagonal([zero, b]) for b in small]
        labels = [f"{lab}@0" for lab in labels] + [f"{lab}@1" for lab in labels]
        return CatalogEntry(
            name, algebra_from_matrices(name, labels, mats), mats, 2, True,
            {"id": "id", "swap": "outer:swap", "involution": "inner:diag(1,-1,1,-1)"},
            "two commuting copies of sl2",
        )
    raise JobParseError(f"unknown catalog algebra '{name}'", "$.algebra")


CATALOG_NAMES = ("sl2", "sl3", "sl4", "so3", "heisenberg3", "sl2xsl2")


@lru_cache(maxsize=None)
def get_entry(name: str) -> CatalogEntry:
    entry = _build_entry(name)
    logger.debug(f"catalog: built {name} (dim {entry.algebra.dim})")
    return entry


def get_algebra(name: str) -> LieAlgebra:
    return get_entry(name).algebra


def list_entries() -> List[CatalogEntry]:
    return [get_entry(name) for name in CATALOG_NAMES]


_DIAG = re.compile(r"^(inner|basis):diag\((.*)\)$")
_ZDIAG = re.compile(r"^inner:zdiag\((\d+);(.*)\)$")


def _conjugation(
    entry: CatalogEntry, diag: List[CycloScalar], name: str, order_cap: int = 24
) -> Automorphism:
    size = len(entry.matrices[0])
    if len(diag) != size:
        raise JobParseError(f"{name}: expected {size} diagonal entries, got {len(diag)}", "$.automorphism")
    if any(not d for d in diag):
        raise JobParseError(f"{name}: zero on the diagonal", "$.automorphism")
    inv = [d.inverse() for d in diag]
    columns = []
    for b in entry.matrices:
        image = [[diag[r] * b[r][c] * inv[c] if b[r][c] else b[r][c] for c in range(size)] for r in range(size)]
        columns.append(entry.coordinates(image))
    return Automorphism(entry.algebra, transpose(columns), name=name, order_cap=order_cap)


def parse_automorphism(entry: CatalogEntry, text: str, order_cap: int = 24) -> Automorphism:
    """
    Resolve an automorphism string (or a preset name) on a catalog algebra

    Raises:
        JobParseError: unknown syntax
        InvalidAutomorphism: the map is not an automorphism of finite order
    """
    text = entry.presets.get(text, text).replace(" ", "")
    L = entry.algebra
    if text == "id":
        return Automorphism.identity(L)
    match = _DIAG.match(text)
    if match:
        kind, body = match.groups()
        try:
            diag = [CycloScalar.rational(to_rational(x)) for x in body.split(",")]
        except ValueError as exc:
            raise JobParseError(f"bad diagonal '{body}'", "$.automorphism") from exc
        if kind == "basis":
            if len(diag) != L.dim:
                raise JobParseError(f"basis:diag needs {L.dim} entries", "$.automorphism")
            mat = identity(L.dim)
            for i, d in enumerate(diag):
                mat[i][i] = d
            return Automorphism(L, mat, name=text, order_cap=order_cap)
        return _conjugation(entry, diag, text, order_cap)
    match = _ZDIAG.match(text)
    if match:
        order, body = int(match.group(1)), match.group(2)
        try:
            diag = [zeta_power(order, int(e)) for e in body.split(",")]
        except ValueError as exc:
            raise JobParseError(f"bad zdiag exponents '{body}'", "$.automorphism") from exc
        return _conjugation(entry, diag, text, order_cap)
    if text == "outer:negtranspose":
        columns = []
        for b in entry.matrices:
            columns.append(entry.coordinates([[-x for x in row] for row in transpose(b)]))
        return Automorphism(L, transpose(columns), name=text, order_cap=order_cap)
    if text == "outer:swap":
        if L.dim % 2:
            raise JobParseError("outer:swap needs an even number of basis elements", "$.automorphism")
        half = L.dim // 2
        mat = zeros(L.dim, L.dim)
        for i in range(L.dim):
            mat[(i + half) % L.dim][i] = CycloScalar.one()
        return Automorphism(L, mat, name=text, order_cap=order_cap)
    raise JobParseError(f"unknown automorphism '{text}' for {entry.name}", "$.automorphism")
