"""
Invariant Families
Generating sets of S(q)^q, their re-selection as theta-eigenvectors, and the
g0-invariants h_u a grading needs for Z(q^theta, [0]).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from src.invariants.casimir import casimir
from src.liealg.algebra import LieAlgebra
from src.liealg.grading import Grading
from src.scalars.cyclo import CycloScalar
from src.sympoly.independence import random_jacobian_rank
from src.sympoly.phi import theta_eigen_split, to_eigenbasis
from src.sympoly.poisson import PoissonAlgebra
from src.sympoly.poly import Poly, Variable, apply_linear
from src.twistloop.generators import EigenInvariant
from src.utils.checks import CheckResult
from src.utils.errors import CatalogRefusal, ResolutionFailed
from src.utils.linalg import nullspace, rank, row_space_basis, solve_in_span, transpose

logger = logging.getLogger(__name__)


@dataclass
class InvariantGenerator:
    poly: Poly
    degree: int
    ell: Optional[int] = None
    name: str = "F"


@dataclass
class InvariantFamily:
    """
    Homogeneous generators of S(q)^q

    Attributes:
        algebra_id: catalog id of the algebra
        algebra: the algebra whose basis indexes the polynomial variables
        generators: one entry per generator, `ell` set once theta is attached
        rank: number of generators (rk g for reductive g)
        grading: the grading the family was attached to, if any
    """

    algebra_id: str
    algebra: LieAlgebra
    generators: List[InvariantGenerator] = field(default_factory=list)
    rank: int = 0
    grading: Optional[Grading] = None

    def degrees(self) -> List[int]:
        return sorted(g.degree for g in self.generators)

    def polys(self) -> List[Poly]:
        return [g.poly for g in self.generators]

    def check_invariance(self) -> CheckResult:
        """{G, x} == 0 for every generator G and basis element x"""
        poisson = PoissonAlgebra.of_algebra(self.algebra)
        actors = [Variable(i) for i in range(self.algebra.dim)]
        for g in self.generators:
            ok, actor = poisson.is_central(g.poly, actors)
            if not ok:
                return CheckResult(False, {"generator": g.name, "actor": self.algebra.basis[actor.base_index]})
        return CheckResult(True, None, len(self.generators) * len(actors))

    def eigen_invariants(self) -> List[EigenInvariant]:
        """The generators as EigenInvariants; requires an attached automorphism"""
        if self.grading is None:
            raise ResolutionFailed(f"no automorphism attached to the {self.algebra_id} family")
        return [EigenInvariant(g.poly, g.degree, g.ell, g.name) for g in self.generators]


def attach_automorphism(family: InvariantFamily, grading: Grading, seed: int = 0) -> InvariantFamily:
    """
    Replace each generator by one of its theta-eigencomponents

    Generators are taken in degree order; for each, the first eigencomponent that
    raises the Jacobian rank of the selection is kept. The result lives in the
    eigenbasis variables of `grading`.

    Raises:
        ResolutionFailed: some generator has no component independent of the earlier choices
    """
    theta = grading.eigen_theta()
    variables = [Variable(a) for a in range(grading.dim)]
    chosen: List[InvariantGenerator] = []
    for gen in sorted(family.generators, key=lambda g: g.degree):
        F = to_eigenbasis(gen.poly, grading)
        picked = None
        for u, _, comp in theta_eigen_split(F, theta, grading.zeta):
            trial = [c.poly for c in chosen] + [comp]
            if random_jacobian_rank(trial, seed=seed, variables=variables) == len(trial):
                picked = InvariantGenerator(comp, gen.degree, u, gen.name)
                break
        if picked is None:
            raise ResolutionFailed(
                f"{gen.name} has no theta-eigencomponent independent of {[c.name for c in chosen]}",
                witness=gen.name,
            )
        logger.debug(f"{gen.name}: eigencomponent with ell={picked.ell}")
        chosen.append(picked)
    logger.info(f"attached {grading.theta.name} to {family.algebra_id}: ell = {[g.ell for g in chosen]}")
    return InvariantFamily(family.algebra_id, grading.eigen, chosen, family.rank, grading)


def _subalgebra(L: LieAlgebra, columns: List[List[CycloScalar]], name: str) -> LieAlgebra:
    """Structure constants of the span of `columns` (coordinate vectors), assumed closed"""
    brackets = []
    for i, u in enumerate(columns):
        for j, v in enumerate(columns):
            if j <= i:
                continue
            image = L.bracket(
                {k: c for k, c in enumerate(u) if c}, {k: c for k, c in enumerate(v) if c}
            )
            if not image:
                continue
            target = [image.get(k, CycloScalar.zero()) for k in range(L.dim)]
            coords = solve_in_span(columns, target)
            if coords is None:
                raise CatalogRefusal(f"{name} is not closed under the bracket")
            brackets.append((i, j, {k: c for k, c in enumerate(coords) if c}))
    return LieAlgebra.from_brackets(name, [f"d{i}" for i in range(len(columns))], brackets)


def g0_invariants(grading: Grading, family: Optional[InvariantFamily] = None) -> List[Poly]:
    """
    Generators h_u of S(g0)^{g0} in eigenbasis variables

    g0 is handled when it is the whole algebra with a known family, abelian, or a
    centre plus a three-dimensional simple derived algebra.

    Raises:
        CatalogRefusal: no generating set is known for this g0
    """
    L = grading.eigen
    zero_part = grading.components[0]
    if grading.order == 1 and family is not None:
        if family.grading is not None:
            return family.polys()
        return [to_eigenbasis(p, grading) for p in family.polys()]
    dim0 = len(zero_part)
    unit = [[CycloScalar.one() if k == a else CycloScalar.zero() for k in range(L.dim)] for a in zero_part]
    derived = row_space_basis(
        [
            [L.bracket_basis(a, b).get(k, CycloScalar.zero()) for k in range(L.dim)]
            for a in zero_part
            for b in zero_part
        ]
    )
    # centre of g0: coefficient vectors c with [sum c_a b_a, b_b] = 0 for all b in g0
    rows = []
    for b in zero_part:
        for k in range(L.dim):
            rows.append([L.bracket_basis(a, b).get(k, CycloScalar.zero()) for a in zero_part])
    centre = [
        [sum((c * u[k] for c, u in zip(vec, unit)), CycloScalar.zero()) for k in range(L.dim)]
        for vec in nullspace(rows, dim0)
    ]
    linear = [Poly.linear({k: c for k, c in enumerate(vec) if c}) for vec in centre]
    if not derived:
        logger.info(f"g0 is abelian of dimension {dim0}")
        return [Poly.var(a) for a in zero_part]
    if len(derived) != 3 or rank(centre + derived) != dim0:
        raise CatalogRefusal(
            f"no generating set for S(g0)^g0 with dim g0 = {dim0}, "
            f"centre {len(centre)}, derived algebra {len(derived)}",
            witness={"dim": dim0, "centre": len(centre), "derived": len(derived)},
        )
    simple = _subalgebra(L, derived, f"[g0,g0] of {L.name}")
    C = casimir(simple)
    h = apply_linear(C, transpose(derived))
    generators = linear + [h]
    poisson = PoissonAlgebra.of_algebra(L)
    for p in generators:
        ok, actor = poisson.is_central(p, [Variable(a) for a in zero_part])
        if not ok:
            raise CatalogRefusal(f"g0-invariant candidate fails against {L.basis[actor.base_index]}")
    logger.info(f"g0 invariants: {len(linear)} linear, one Casimir of the derived algebra")
    return generators
