"""
Invariant Catalog
Invariant families for the catalog algebras, classical degree lists, and
degree-only records for cases kept out of computational scope.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.invariants.casimir import casimir
from src.invariants.charpoly import charpoly_invariants
from src.invariants.family import InvariantFamily, InvariantGenerator
from src.liealg.catalog import get_entry
from src.sympoly.poly import Poly, Variable
from src.utils.errors import CatalogRefusal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeRecord:
    """Degrees of S(g)^g and S(g0)^{g0} for a case with no symbolic generators"""

    name: str
    description: str
    invariant_degrees: Tuple[int, ...]
    g0_invariant_degrees: Tuple[int, ...]
    good_generating_system: bool
    z0_polynomial_ring: bool


E6_RECORD = DegreeRecord(
    name="e6-involution",
    description="E6 with the inner involution fixing so10 + so2; no good generating system, Z_0 not a polynomial ring",
    invariant_degrees=(2, 5, 6, 8, 9, 12),
    g0_invariant_degrees=(1, 2, 4, 5, 6, 8),
    good_generating_system=False,
    z0_polynomial_ring=False,
)

DEGREE_RECORDS: Dict[str, DegreeRecord] = {E6_RECORD.name: E6_RECORD}

CLASSICAL_DEGREES: Dict[str, Tuple[int, ...]] = {
    "sl2": (2,),
    "sl3": (2, 3),
    "sl4": (2, 3, 4),
    "so3": (2,),
    "sl2xsl2": (2, 2),
    "heisenberg3": (1,),
}


def catalog_family(name: str) -> InvariantFamily:
    """
    Symbolic generators of S(q)^q for a catalog algebra, checked for invariance

    Raises:
        CatalogRefusal: the algebra has no symbolic catalog or a generator fails the check
    """
    if name in DEGREE_RECORDS:
        raise CatalogRefusal(f"{name} is listed by degrees only: {DEGREE_RECORDS[name].description}", witness=name)
    entry = get_entry(name)
    L = entry.algebra
    if name in ("sl2", "sl3", "sl4"):
        family = charpoly_invariants(int(name[2]))
    elif name == "so3":
        family = InvariantFamily(name, L, [InvariantGenerator(casimir(L), 2, None, "F2")], 1)
    elif name == "sl2xsl2":
        small = charpoly_invariants(2).generators[0].poly
        generators = [
            InvariantGenerator(small.rename(lambda v, c=c: Variable(v.base_index + 3 * c, v.t_exponent)), 2, None, f"F2@{c}")
            for c in range(2)
        ]
        family = InvariantFamily(name, L, generators, 2)
    elif name == "heisenberg3":
        # the centre z generates the invariants
        family = InvariantFamily(name, L, [InvariantGenerator(Poly.var(L.index_of("z")), 1, None, "z")], 1)
    else:
        raise CatalogRefusal(f"no symbolic invariants for '{name}'")
    result = family.check_invariance()
    if not result:
        raise CatalogRefusal(f"catalog invariant of {name} is not invariant", witness=result.witness)
    return family


def degree_listing() -> List[dict]:
    """Rows for the catalog listing: computed families and degree-only records"""
    rows = [
        {"name": name, "degrees": list(degrees), "symbolic": True}
        for name, degrees in CLASSICAL_DEGREES.items()
    ]
    for record in DEGREE_RECORDS.values():
        rows.append(
            {
                "name": record.name,
                "degrees": list(record.invariant_degrees),
                "g0_degrees": list(record.g0_invariant_degrees),
                "good_generating_system": record.good_generating_system,
                "symbolic": False,
                "note": record.description,
            }
        )
    return rows
