"""
Command Line Interface
`twistloop check|grade|index|commute|free|psi|invariance|hgen|catalog|run|report`
"""

import json
import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from src.harness.config import get_settings, initialize_settings
from src.harness.jobs import JobFile, load_job, resolve_case
from src.harness.report import Report, exit_code, render_reports, reports_to_json
from src.harness.suites import (
    cmd_catalog,
    cmd_check,
    cmd_commute,
    cmd_free,
    cmd_grade,
    cmd_h_generators,
    cmd_index,
    cmd_invariance,
    cmd_psi,
    cmd_run,
    load_reports,
)
from src.liealg.catalog import get_entry
from src.utils.errors import TwistloopError

logger = logging.getLogger(__name__)

app = typer.Typer(help="Exact verification of Poisson-commutative subalgebras of twisted loop algebras")
console = Console()

AlgebraOption = typer.Option("sl2", "--algebra", "-a", help="catalog id or path to a JSON algebra document")
AutoOption = typer.Option("id", "--auto", help="automorphism string or preset name")
ZetaOption = typer.Option(1, "--zeta", help="k with zeta = zeta_m^k")
WindowOption = typer.Option(None, "--window", "-N", help="window depth N")
SeedOption = typer.Option(None, "--seed", help="seed for randomized checks")
TrialsOption = typer.Option(None, "--trials", help="samples for index and regularity searches")
JsonOption = typer.Option(False, "--json", help="print reports as JSON")


def configure_logging(level: str):
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
    )


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="log at INFO"),
    env_file: Optional[Path] = typer.Option(None, "--env-file", help=".env file with TWISTLOOP_* settings"),
):
    settings = initialize_settings(str(env_file) if env_file else None)
    configure_logging("INFO" if verbose else settings.log_level)


def _algebra_arg(algebra: str):
    path = Path(algebra)
    if path.suffix == ".json" and path.exists():
        return json.loads(path.read_text())
    return algebra


def _finish(reports: List[Report], as_json: bool):
    if as_json:
        console.print_json(reports_to_json(reports))
    else:
        render_reports(reports, console)
    raise typer.Exit(exit_code(reports))


def _case(algebra: str, auto: str, zeta: int, window: Optional[int], seed: Optional[int], trials: Optional[int]):
    settings = get_settings()
    job = JobFile(id="cli", algebra=_algebra_arg(algebra), automorphism=auto, zeta_choice=zeta,
                  window_N=window, seed=seed, trials=trials)
    return resolve_case(job, settings.seed, settings.trials, settings.order_cap), settings


def _run_single(task, algebra, auto, zeta, window, seed, trials, as_json, **kwargs):
    try:
        case, _ = _case(algebra, auto, zeta, window, seed, trials)
    except TwistloopError as exc:
        report = Report(job_id="cli", task="resolve")
        report.fail({"error": type(exc).__name__, "location": getattr(exc, "location", "$"), "message": str(exc)})
        _finish([report], as_json)
    _finish([task(case, **kwargs)], as_json)


@app.command()
def check(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
          seed: Optional[int] = SeedOption, as_json: bool = JsonOption):
    """Jacobi identity, automorphism and grading validation"""
    _run_single(cmd_check, algebra, auto, zeta, None, seed, None, as_json)


@app.command()
def grade(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
          as_json: bool = JsonOption):
    """Eigenspace components of the automorphism"""
    _run_single(cmd_grade, algebra, auto, zeta, None, None, None, as_json)


@app.command()
def index(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
          seed: Optional[int] = SeedOption, trials: Optional[int] = TrialsOption, as_json: bool = JsonOption):
    """Index of q and of its two contractions"""
    _run_single(cmd_index, algebra, auto, zeta, None, seed, trials, as_json)


@app.command()
def commute(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
            window: Optional[int] = WindowOption, seed: Optional[int] = SeedOption,
            trials: Optional[int] = TrialsOption, as_json: bool = JsonOption):
    """Pairwise Poisson-commutativity of the truncated Z(q^theta, [0])"""
    _run_single(cmd_commute, algebra, auto, zeta, window, seed, trials, as_json, n_jobs=get_settings().n_jobs)


@app.command()
def free(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
         window: Optional[int] = WindowOption, seed: Optional[int] = SeedOption, as_json: bool = JsonOption):
    """Free generation by Jacobian rank and the vanishing rule"""
    _run_single(cmd_free, algebra, auto, zeta, window, seed, None, as_json)


@app.command()
def invariance(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
               window: Optional[int] = WindowOption, as_json: bool = JsonOption):
    """Invariance of every generator modulo the positive part"""
    _run_single(cmd_invariance, algebra, auto, zeta, window, None, None, as_json)


@app.command()
def psi(mode: str = typer.Argument("Z0", help="Z0 or Zt"), algebra: str = AlgebraOption, auto: str = AutoOption,
        zeta: int = ZetaOption, window: Optional[int] = WindowOption, seed: Optional[int] = SeedOption,
        trials: Optional[int] = TrialsOption, as_json: bool = JsonOption):
    """Images under the quotient map psi"""
    _run_single(cmd_psi, algebra, auto, zeta, window, seed, trials, as_json,
                mode=mode, image_bound=get_settings().image_bound)


@app.command()
def hgen(algebra: str = AlgebraOption, auto: str = AutoOption, zeta: int = ZetaOption,
         seed: Optional[int] = SeedOption, as_json: bool = JsonOption):
    """Eigenvector generators on q^{+n} for n = 2, 3"""
    _run_single(cmd_h_generators, algebra, auto, zeta, None, seed, None, as_json)


@app.command()
def catalog(what: str = typer.Argument("list", help="`list`, or a catalog id to export as a JSON algebra document"),
            as_json: bool = JsonOption):
    """List catalog algebras, automorphisms and invariant degrees"""
    if what != "list":
        console.print_json(json.dumps(get_entry(what).algebra.to_json()))
        raise typer.Exit(0)
    report = cmd_catalog()
    if as_json:
        console.print_json(report.model_dump_json())
        raise typer.Exit(0)
    for row in report.detail["algebras"]:
        presets = ", ".join(f"{k}={v}" for k, v in row["automorphisms"].items())
        console.print(f"[bold]{row['name']}[/] dim {row['dim']} rank {row['rank']}: {row['description']}")
        console.print(f"  automorphisms: {presets}")
    for row in report.detail["invariants"]:
        tag = "" if row["symbolic"] else " (degrees only)"
        console.print(f"invariant degrees of {row['name']}: {row['degrees']}{tag}")


@app.command()
def run(job_file: Path = typer.Argument(..., exists=True), as_json: bool = JsonOption):
    """Run every task of a job file"""
    try:
        job = load_job(job_file)
    except TwistloopError as exc:
        report = Report(job_id=str(job_file), task="parse")
        report.fail({"error": type(exc).__name__, "location": getattr(exc, "location", "$"), "message": str(exc)})
        _finish([report], as_json)
    _finish(cmd_run(job, get_settings()), as_json)


@app.command()
def report(paths: List[Path] = typer.Argument(..., exists=True), as_json: bool = JsonOption):
    """Re-render saved JSON reports and exit with their combined code"""
    reports: List[Report] = []
    for path in paths:
        reports.extend(load_reports(path))
    _finish(reports, as_json)


if __name__ == "__main__":
    app()
