"""
The Quotient Map psi
psi: S(q[t, t^-1]^theta) -> S(q) sends x t^k to x (t^m = 1 identifies the twisted
loop algebra modulo t^m - 1 with q). Applied to polarisations it produces
binomial combinations of the phi-components of F, which are checked here.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Sequence

from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar
from src.sympoly.phi import phi_split
from src.sympoly.poly import Poly, Variable, poly_sum
from src.twistloop.polarisation import t_polarisation, t_side_polarisation
from src.twistloop.window import is_loop_variable
from src.utils.checks import CheckResult
from src.utils.errors import UnknownVariable

logger = logging.getLogger(__name__)


def psi_quotient(F: Poly, grading: Optional[Grading] = None) -> Poly:
    """x t^k -> x; with a grading, every variable is first checked to lie in the twisted loop algebra"""
    if grading is not None:
        for v in F.variables():
            if not is_loop_variable(grading, v):
                raise UnknownVariable(f"{v} is not in the twisted loop algebra", witness=v)
    return F.rename(lambda v: Variable(v.base_index, 0))


def image_formula(F: Poly, ell: int, j: int, grading: Grading) -> Poly:
    """sum_{k=0..j} C(d+k-1, k) F_{ell+(j-k)m}"""
    d = F.degree()
    split = phi_split(F, grading.degree_of)
    m = grading.order
    return poly_sum(split.get(ell + (j - k) * m).scale(comb(d + k - 1, k)) for k in range(j + 1))


def verify_image_formula(F: Poly, ell: int, j: int, grading: Grading) -> CheckResult:
    """psi(F_[ell + jm]) against the binomial combination of phi-components"""
    lhs = psi_quotient(t_polarisation(F, ell + j * grading.order, grading), grading)
    rhs = image_formula(F, ell, j, grading)
    diff = lhs - rhs
    if diff:
        return CheckResult(False, {"lhs": lhs, "rhs": rhs, "difference": diff}, 1)
    return CheckResult(True, {"lhs": lhs}, 1)


def t_side_shift(F: Poly, grading: Grading) -> int:
    """b = m d - d*, the first nonzero t-side polarisation is F_[-b]"""
    split = phi_split(F, grading.degree_of)
    return grading.order * F.degree() - max(split.components)


def t_side_image_formula(F: Poly, J: int, grading: Grading) -> Poly:
    """sum_{p=0..J} C(J-p+d-1, d-1) F_{d*-pm}"""
    d = F.degree()
    split = phi_split(F, grading.degree_of)
    top = max(split.components)
    m = grading.order
    return poly_sum(split.get(top - p * m).scale(comb(J - p + d - 1, d - 1)) for p in range(J + 1))


def verify_t_side_image(F: Poly, J: int, grading: Grading) -> CheckResult:
    """psi(F_[-b-Jm]) against the binomial combination ending at F*"""
    b = t_side_shift(F, grading)
    lhs = psi_quotient(t_side_polarisation(F, -(b + J * grading.order), grading), grading)
    rhs = t_side_image_formula(F, J, grading)
    diff = lhs - rhs
    if diff:
        return CheckResult(False, {"lhs": lhs, "rhs": rhs, "difference": diff, "b": b}, 1)
    return CheckResult(True, {"lhs": lhs, "b": b}, 1)


def proportionality(part: Poly, component: Poly) -> Optional[CycloScalar]:
    """c with part == c * component, or None"""
    if not component:
        return None
    if not part:
        return CycloScalar.zero()
    mono = component.monomials()[0]
    c = part.coefficient(mono) / component.coefficient(mono)
    return c if part == component.scale(c) else None


@dataclass
class TransitionMatrix:
    """
    Coefficients of psi-images of polarisations on the phi-components of F

    rows[r] is the polarisation index j of row r; columns[c] is the phi-degree of
    column c. `entries[r][c]` is None where the row is not proportional to the column.
    """

    rows: List[int]
    columns: List[int]
    entries: List[List[Optional[CycloScalar]]]
    ell: int
    m: int
    g0_rows: int = 0
    residuals: List[Poly] = field(default_factory=list)

    @property
    def size(self) -> int:
        return self.g0_rows + len(self.rows)

    def diagonal_column(self, r: int) -> Optional[int]:
        """Column holding phi-degree ell + j m for row r, or None when absent"""
        p = self.ell + self.rows[r] * self.m
        return self.columns.index(p) if p in self.columns else None

    def is_lower_unitriangular(self) -> bool:
        """
        Every entry determined, no residual, 1 on the diagonal and 0 right of it

        Rows whose phi-degree ell + j m lies past the last column form the rectangular
        tail: their diagonal falls outside the matrix and only determinacy is required.
        A diagonal degree inside the column range but missing from it fails.
        """
        if any(r for r in self.residuals):
            return False
        top = max(self.columns, default=None)
        for r, j in enumerate(self.rows):
            if any(value is None for value in self.entries[r]):
                return False
            p = self.ell + j * self.m
            if top is not None and p > top:
                continue
            c = self.diagonal_column(r)
            if c is None or self.entries[r][c] != 1:
                return False
            if any(self.entries[r][c + 1:]):
                return False
        return True

    def matches_binomials(self, d: int) -> bool:
        for r, j in enumerate(self.rows):
            for c, p in enumerate(self.columns):
                k = j - (p - self.ell) // self.m
                expected = comb(d + k - 1, k) if 0 <= k <= j else 0
                if self.entries[r][c] != expected:
                    return False
        return True


def transition_matrix(
    F: Poly, ell: int, grading: Grading, js: Sequence[int], g0_count: int = 0
) -> TransitionMatrix:
    """
    Observed coefficients of psi(F_[ell+jm]), j in `js`, on the nonzero phi-components of F

    `g0_count` records the g0-invariant generators that sit on the diagonal
    unchanged, so the reported size matches the generator family.
    """
    m = grading.order
    split = phi_split(F, grading.degree_of)
    columns = sorted(p for p in split.components if (p - ell) % m == 0)
    entries = []
    residuals = []
    for j in js:
        image = psi_quotient(t_polarisation(F, ell + j * m, grading), grading)
        parts = phi_split(image, grading.degree_of)
        entries.append([proportionality(parts.get(p), split.get(p)) for p in columns])
        residuals.append(poly_sum(q for p, q in parts.components.items() if p not in columns))
    return TransitionMatrix(list(js), columns, entries, ell, m, g0_count, residuals)
