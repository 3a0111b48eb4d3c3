"""
Generator Families
Generating sets of the Poisson-commutative subalgebras: Z(q^theta, [0]) from
g0-invariants and nonzero t-polarisations, its t-side counterpart, and Z_x from
the phi-components of the invariants.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from src.liealg.grading import Grading
from src.sympoly.phi import phi_split
from src.sympoly.poly import Poly
from src.twistloop.polarisation import t_polarisation, t_side_polarisation
from src.twistloop.psi import t_side_shift
from src.twistloop.window import TwistedWindow, minus_window, t_side_window

logger = logging.getLogger(__name__)


@dataclass
class EigenInvariant:
    """A homogeneous theta-eigenvector invariant F with theta(F) = zeta^ell F"""

    poly: Poly
    degree: int
    ell: int
    name: str = "F"


@dataclass
class GeneratorEntry:
    name: str
    poly: Poly
    source: str
    k: Optional[int] = None


@dataclass
class GeneratorSet:
    """Named generators with provenance: `source` is the invariant or g0 generator, `k` the polarisation index"""

    entries: List[GeneratorEntry] = field(default_factory=list)
    window: Optional[TwistedWindow] = None

    def polys(self) -> List[Poly]:
        return [e.poly for e in self.entries]

    def names(self) -> List[str]:
        return [e.name for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def polarisation_indices(ell: int, m: int, depth: int) -> List[int]:
    """k = mj + ell for j >= 0, except that a theta-fixed invariant (ell = 0) starts at j = 1"""
    start = 1 if ell == 0 else 0
    return [m * j + ell for j in range(start, depth // m + 2) if m * j + ell <= depth]


def generators_Z0(
    invariants: Sequence[EigenInvariant],
    g0_invariants: Sequence[Poly],
    grading: Grading,
    depth: int,
) -> GeneratorSet:
    """
    Generators of Z(q^theta, [0]) whose polarisation index is at most `depth`

    Entries: the g0-invariants h_u, then (F_i)_[k] for k from `polarisation_indices`.
    """
    window = minus_window(grading, depth)
    entries = [GeneratorEntry(f"h{u}", h, f"h{u}") for u, h in enumerate(g0_invariants)]
    for F in invariants:
        for k in polarisation_indices(F.ell, grading.order, depth):
            P = t_polarisation(F.poly, k, grading, window)
            if P:
                entries.append(GeneratorEntry(f"{F.name}[{k}]", P, F.name, k))
            else:
                logger.debug(f"{F.name}[{k}] vanishes")
    logger.info(f"Z0 generators up to depth {depth}: {len(entries)}")
    return GeneratorSet(entries, window)


def generators_Zt(invariants: Sequence[EigenInvariant], grading: Grading, depth: int) -> GeneratorSet:
    """t-side polarisations F_[-b-jm], j >= 0, with b + jm <= depth"""
    window = t_side_window(grading, depth)
    entries = []
    m = grading.order
    for F in invariants:
        b = t_side_shift(F.poly, grading)
        j = 0
        while b + j * m <= depth:
            k = -(b + j * m)
            P = t_side_polarisation(F.poly, k, grading)
            if P:
                entries.append(GeneratorEntry(f"{F.name}[{k}]", P, F.name, k))
            j += 1
    return GeneratorSet(entries, window)


def generators_Zx(invariants: Sequence[EigenInvariant], grading: Grading) -> GeneratorSet:
    """All nonzero phi-components F_{i,j}"""
    entries = []
    for F in invariants:
        split = phi_split(F.poly, grading.degree_of)
        for j in split.degrees():
            entries.append(GeneratorEntry(f"{F.name},{j}", split.components[j], F.name, j))
    return GeneratorSet(entries)
