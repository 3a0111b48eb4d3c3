"""
Exact Linear Algebra
Gauss-Jordan elimination, rank, kernels and inverses over Q(zeta_M).

Matrices are lists of rows of CycloScalar. Nothing here rounds: a pivot is
any entry that is structurally nonzero.
"""

from typing import List, Optional, Sequence, Tuple

from src.scalars.cyclo import CycloScalar, as_scalar
from src.utils.errors import DivisionByZero

Matrix = List[List[CycloScalar]]
Vector = List[CycloScalar]


def zeros(rows: int, cols: int, order: int = 1) -> Matrix:
    zero = CycloScalar.zero(order)
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, order: int = 1) -> Matrix:
    mat = zeros(n, n, order)
    one = CycloScalar.one(order)
    for i in range(n):
        mat[i][i] = one
    return mat


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce nested ints / strings / rationals into a CycloScalar matrix"""
    return [[as_scalar(x) for x in row] for row in rows]


def transpose(mat: Matrix) -> Matrix:
    if not mat:
        return []
    return [list(col) for col in zip(*mat)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols_b = transpose(b)
    result = []
    for row in a:
        out = []
        for col in cols_b:
            acc = CycloScalar.zero()
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        result.append(out)
    return result


def mat_vec(a: Matrix, v: Sequence[CycloScalar]) -> Vector:
    out = []
    for row in a:
        acc = CycloScalar.zero()
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def row_reduce(mat: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form

    Args:
        mat: rows of scalars; left untouched

    Returns:
        (rref rows with zero rows dropped, pivot column of each row)
    """
    rows = [list(r) for r in mat]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv if x else x for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y if y else x for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(mat: Matrix) -> int:
    return len(row_reduce(mat)[1])


def nullspace(mat: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {v : mat . v = 0}, one vector per free column"""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    reduced, pivots = row_reduce(mat) if mat else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [CycloScalar.zero()] * ncols
        vec[free] = CycloScalar.one()
        for row, p in zip(reduced, pivots):
            if row[free]:
                vec[p] = -row[free]
        basis.append(vec)
    return basis


def row_space_basis(vectors: Sequence[Vector]) -> List[Vector]:
    """Echelon basis of the span of the given vectors"""
    if not vectors:
        return []
    return row_reduce([list(v) for v in vectors])[0]


def inverse(mat: Matrix) -> Matrix:
    """Inverse of a square matrix; raises DivisionByZero when singular"""
    n = len(mat)
    augmented = [list(row) + ident for row, ident in zip(mat, identity(n))]
    reduced, pivots = row_reduce(augmented)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DivisionByZero("matrix is singular", witness=pivots)
    return [row[n:] for row in reduced]


def solve_in_span(vectors: Sequence[Vector], target: Vector) -> Optional[Vector]:
    """
    Coefficients c with sum c_i vectors[i] == target, or None when target is outside the span
    """
    if not vectors:
        return [] if not any(target) else None
    columns = transpose([list(v) for v in vectors])
    augmented = [row + [t] for row, t in zip(columns, target)]
    reduced, pivots = row_reduce(augmented)
    count = len(vectors)
    if count in pivots:
        return None
    coeffs = [CycloScalar.zero()] * count
    for row, p in zip(reduced, pivots):
        coeffs[p] = row[count]
    return coeffs
