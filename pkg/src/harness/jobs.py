"""
Job Files
The JSON job model and its resolution into a concrete case: algebra, automorphism,
grading and, for catalog algebras, the theta-eigen invariant family.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.invariants.family import InvariantFamily, attach_automorphism
from src.invariants.metadata import CLASSICAL_DEGREES, catalog_family
from src.liealg.algebra import LieAlgebra
from src.liealg.automorphism import Automorphism
from src.liealg.catalog import CatalogEntry, get_entry, parse_automorphism
from src.liealg.grading import Grading, grading_from_automorphism
from src.scalars.cyclo import CycloScalar, zeta_power
from src.utils.errors import JobParseError

logger = logging.getLogger(__name__)

TASKS = ("check", "grade", "index", "commute", "free", "psi-image", "psi-t", "invariance", "h-generators")


class JobFile(BaseModel):
    """
    A verification job

    `algebra` is a catalog id or an inline algebra document; `automorphism` is an
    automorphism string, a preset name, or a dense matrix of JSON scalars.
    """

    id: str = "job"
    algebra: Union[str, Dict[str, Any]]
    automorphism: Union[str, List[List[Any]]] = "id"
    zeta_choice: int = 1
    window_N: Optional[int] = Field(None, ge=0)
    seed: Optional[int] = None
    trials: Optional[int] = Field(None, ge=1)
    n: int = Field(2, ge=1)
    tasks: List[str] = Field(default_factory=lambda: ["check"])

    @field_validator("tasks")
    @classmethod
    def known_tasks(cls, v: List[str]) -> List[str]:
        unknown = [t for t in v if t not in TASKS]
        if unknown:
            raise ValueError(f"unknown tasks {unknown}; expected one of {list(TASKS)}")
        return v


def load_job(path: Union[str, Path]) -> JobFile:
    """Read and validate a job file; errors carry the JSON path of the problem"""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise JobParseError(f"invalid JSON: {exc.msg} at line {exc.lineno}", "$") from exc
    try:
        return JobFile.model_validate(doc)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in first["loc"])
        raise JobParseError(first["msg"], location) from exc


@dataclass
class Case:
    """A resolved job: everything the suites need to run its tasks"""

    job_id: str
    algebra: LieAlgebra
    theta: Automorphism
    grading: Grading
    seed: int
    trials: int
    window: Optional[int]
    n: int = 2
    entry: Optional[CatalogEntry] = None
    _family: Optional[InvariantFamily] = field(default=None, repr=False)

    @property
    def reductive(self) -> bool:
        return self.entry is not None and self.entry.reductive

    @property
    def has_family(self) -> bool:
        return self.entry is not None and self.entry.name in CLASSICAL_DEGREES and self.reductive

    def family(self) -> InvariantFamily:
        """Catalog invariants re-selected as theta-eigenvectors, computed once"""
        if self._family is None:
            if not self.has_family:
                raise JobParseError(f"no invariant catalog for {self.algebra.name}", "$.algebra")
            self._family = attach_automorphism(catalog_family(self.entry.name), self.grading, self.seed)
        return self._family


def _inline_automorphism(L: LieAlgebra, rows: List[List[Any]], order_cap: int) -> Automorphism:
    order = L.scalar_order()
    try:
        matrix = [[CycloScalar.from_json(c, order) for c in row] for row in rows]
    except (TypeError, ValueError) as exc:
        raise JobParseError(f"bad matrix entry: {exc}", "$.automorphism") from exc
    return Automorphism(L, matrix, name="inline", order_cap=order_cap)


def resolve_case(job: JobFile, seed: int, trials: int, order_cap: int = 24) -> Case:
    """
    Build the algebra, automorphism and grading of a job

    Raises:
        JobParseError: unknown catalog id or malformed inline document
        InvalidAutomorphism: the automorphism fails validation
        InvalidRoot: zeta_choice is not coprime to the order
    """
    entry = None
    if isinstance(job.algebra, str):
        entry = get_entry(job.algebra)
        L = entry.algebra
    else:
        L = LieAlgebra.from_json(job.algebra, "$.algebra")
    if isinstance(job.automorphism, str):
        if entry is not None:
            theta = parse_automorphism(entry, job.automorphism, order_cap)
        elif job.automorphism == "id":
            theta = Automorphism.identity(L)
        else:
            raise JobParseError("inline algebras take 'id' or a matrix", "$.automorphism")
    else:
        theta = _inline_automorphism(L, job.automorphism, order_cap)
    zeta = zeta_power(theta.order, job.zeta_choice)
    grading = grading_from_automorphism(theta, zeta)
    logger.info(f"job {job.id}: {L.name} with {theta.name} (m={theta.order})")
    return Case(
        job.id,
        L,
        theta,
        grading,
        job.seed if job.seed is not None else seed,
        job.trials if job.trials is not None else trials,
        job.window_N,
        job.n,
        entry,
    )
