"""
Verification Reports
One pydantic Report per task, rendered as JSON or as a rich table, and the
exit-code contract: 0 when every report passes, 1 on any failure, 2 otherwise.
"""

import time
from contextlib import contextmanager
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field, model_validator
from rich.console import Console
from rich.table import Table


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    HYPOTHESES_NOT_ESTABLISHED = "hypotheses-not-established"


class Report(BaseModel):
    """Outcome of one task; a failure always names a witness"""

    job_id: str = "adhoc"
    task: str
    status: Status = Status.PASS
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)
    seeds: List[int] = Field(default_factory=list)
    window: Optional[int] = None
    wall_time: float = 0.0
    checked: int = 0
    identities: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    detail: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def fail_has_witness(self) -> "Report":
        if self.status == Status.FAIL and not self.witnesses:
            raise ValueError(f"failing report for '{self.task}' carries no witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def fail(self, witness: Dict[str, Any]) -> "Report":
        self.witnesses.append(witness)
        self.status = Status.FAIL
        return self

    def downgrade(self, status: Status, note: str) -> "Report":
        """Set a non-failing, non-passing status unless the report already failed"""
        if self.status != Status.FAIL:
            self.status = status
        self.notes.append(note)
        return self


@contextmanager
def timed(report: Report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.wall_time = round(time.perf_counter() - start, 4)


def exit_code(reports: Sequence[Report]) -> int:
    if any(r.status == Status.FAIL for r in reports):
        return 1
    if all(r.passed for r in reports):
        return 0
    return 2


def reports_to_json(reports: Sequence[Report]) -> str:
    return "[" + ",\n".join(r.model_dump_json(indent=2) for r in reports) + "]"


_STYLES = {
    Status.PASS: "green",
    Status.FAIL: "bold red",
    Status.INCONCLUSIVE: "yellow",
    Status.HYPOTHESES_NOT_ESTABLISHED: "magenta",
}


def render_reports(reports: Sequence[Report], console: Optional[Console] = None) -> None:
    """Print a summary table followed by witnesses and notes"""
    console = console or Console()
    table = Table(title="twistloop reports")
    table.add_column("job")
    table.add_column("task")
    table.add_column("status")
    table.add_column("checked", justify="right")
    table.add_column("N", justify="right")
    table.add_column("time (s)", justify="right")
    for r in reports:
        table.add_row(
            r.job_id,
            r.task,
            f"[{_STYLES[r.status]}]{r.status.value}[/]",
            str(r.checked),
            "" if r.window is None else str(r.window),
            f"{r.wall_time:.2f}",
        )
    console.print(table)
    for r in reports:
        for w in r.witnesses:
            console.print(f"[bold]{r.task}[/] witness: {w}")
        for note in r.notes:
            console.print(f"[dim]{r.task}: {note}[/]")
