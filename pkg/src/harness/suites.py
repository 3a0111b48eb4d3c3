"""
Verification Suites
One function per CLI command. Each takes a resolved Case and returns a Report;
domain errors raised inside a suite become failing or inconclusive reports.
"""

import json
import logging
from math import gcd
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from joblib import Parallel, delayed

from src.harness.config import Settings, get_settings
from src.harness.jobs import Case, JobFile, resolve_case
from src.harness.report import Report, Status, timed
from src.invariants.family import g0_invariants
from src.invariants.metadata import degree_listing
from src.liealg.catalog import list_entries
from src.liealg.contraction import (
    contract_infinity,
    contract_infinity_with_automorphism,
    contract_zero,
    semidirect_g0_ginf,
)
from src.liealg.directsum import check_cyclic_twist
from src.liealg.grading import Grading, check_projectors
from src.liealg.regularity import check_q0_regular_intersection, index_with_witness
from src.scalars.cyclo import CycloScalar, zeta_power
from src.sympoly.independence import random_jacobian_rank
from src.sympoly.phi import highest_component
from src.sympoly.poly import Poly
from src.twistloop.generators import GeneratorEntry, GeneratorSet, generators_Z0, generators_Zt, generators_Zx
from src.twistloop.hgen import build_H_generators, check_H_generator
from src.twistloop.polarisation import vanishing_rule_holds
from src.twistloop.psi import transition_matrix, verify_image_formula, verify_t_side_image
from src.twistloop.solver import solve_window_invariants
from src.twistloop.verify import verify_invariance, verify_pairwise_commute
from src.twistloop.window import minus_window
from src.utils.errors import CatalogRefusal, JobParseError, TwistloopError

logger = logging.getLogger(__name__)

# depth and degree of the invariant search for algebras without a catalog
SOLVER_DEPTH = 4
SOLVER_DEGREE = 2


def _text(F: Poly, grading: Grading) -> str:
    return F.to_text(grading.eigen.basis)


def _covector(xi) -> List[str]:
    return [c.to_text() for c in xi]


def default_window(case: Case) -> int:
    """The job's window, else 2 m times the top invariant degree, else the solver depth"""
    if case.window is not None:
        return case.window
    if case.has_family:
        return 2 * case.grading.order * max(case.family().degrees())
    return SOLVER_DEPTH


def _guarded(report: Report, body: Callable[[Report], None]) -> Report:
    """Run a suite body, turning domain errors into report statuses"""
    with timed(report):
        try:
            body(report)
        except CatalogRefusal as exc:
            report.downgrade(Status.INCONCLUSIVE, str(exc))
        except JobParseError as exc:
            report.fail({"error": "JobParseError", "location": exc.location, "message": str(exc)})
        except TwistloopError as exc:
            logger.warning(f"{report.task}: {type(exc).__name__}: {exc}")
            report.fail({"error": type(exc).__name__, "message": str(exc), "witness": str(exc.witness)})
    return report


def _new_report(case: Case, task: str) -> Report:
    return Report(job_id=case.job_id, task=task, seeds=[case.seed])


# ----------------------------------------------------------------------
# structure


def cmd_check(case: Case) -> Report:
    """Jacobi identity, automorphism validation and the grading condition"""

    def body(report: Report):
        jacobi = case.algebra.check_jacobi()
        report.checked += jacobi.checked
        if not jacobi:
            kind, indices = jacobi.witness
            report.fail({"check": kind, "indices": list(indices), "basis": [case.algebra.basis[i] for i in indices]})
            return
        declared = case.algebra.check_grading()
        report.checked += declared.checked
        if not declared:
            _, pair, k = declared.witness
            report.fail(
                {
                    "check": "declared grading",
                    "pair": list(pair),
                    "basis": [case.algebra.basis[i] for i in pair],
                    "offending_element": case.algebra.basis[k],
                }
            )
            return
        hom = case.theta.check_homomorphism()
        report.checked += hom.checked
        if not hom:
            report.fail({"check": "automorphism", "pair": list(hom.witness)})
            return
        graded = case.grading.check()
        report.checked += graded.checked
        if not graded:
            _, pair, k = graded.witness
            report.fail({"check": "grading", "pair": list(pair), "offending_component": k})
        report.detail["order"] = case.grading.order

    return _guarded(_new_report(case, "check"), body)


def cmd_grade(case: Case) -> Report:
    """Components of the grading, the projector identities and the grading condition"""

    def body(report: Report):
        grading = case.grading
        projectors = check_projectors(case.theta, grading.zeta)
        graded = grading.check()
        report.checked = projectors.checked + graded.checked
        report.detail = {
            "order": grading.order,
            "zeta": grading.zeta.to_text(),
            "component_dims": grading.component_dims(),
            "components": [[grading.eigen.basis[a] for a in comp] for comp in grading.components],
            "inverse_component_dims": grading.inverse_grading().component_dims(),
        }
        if not projectors:
            report.fail({"check": "projectors", "at": str(projectors.witness)})
        if not graded:
            _, pair, k = graded.witness
            report.fail({"check": "grading", "pair": list(pair), "offending_component": k})

    return _guarded(_new_report(case, "grade"), body)


def cmd_index(case: Case) -> Report:
    """ind q, ind q_(0), ind q_(inf) with the covectors attaining them, and a regular element of q_0*"""

    def body(report: Report):
        grading = case.grading
        for label, algebra in (
            ("q", grading.eigen),
            ("q_(0)", contract_zero(grading)),
            ("q_(inf)", contract_infinity(grading)),
        ):
            value, xi = index_with_witness(algebra, case.trials, case.seed)
            report.detail[label] = {"index": value, "witness": _covector(xi)}
            report.checked += 1
        regular = check_q0_regular_intersection(grading, case.trials, case.seed, report.detail["q"]["index"])
        report.detail["q0_regular"] = _covector(regular.witness) if regular else None
        if not regular:
            report.downgrade(Status.INCONCLUSIVE, "no regular covector found in q_0*")

    return _guarded(_new_report(case, "index"), body)


# ----------------------------------------------------------------------
# generator families


def z0_generators(case: Case, depth: int) -> GeneratorSet:
    """Generators of Z(q^theta, [0]) up to `depth`: from the invariant catalog, or solved for in the window"""
    if case.has_family:
        family = case.family()
        h = g0_invariants(case.grading, family)
        return generators_Z0(family.eigen_invariants(), h, case.grading, depth)
    return solved_generators(case.grading, depth)


def solved_generators(grading: Grading, depth: int, max_degree: int = SOLVER_DEGREE) -> GeneratorSet:
    """Window invariants of each degree and t-weight up to the bounds"""
    entries = []
    for degree in range(1, max_degree + 1):
        for weight in range(0, degree * depth + 1):
            for pos, P in enumerate(solve_window_invariants(grading, depth, degree, weight)):
                entries.append(GeneratorEntry(f"Y{degree}.{weight}.{pos}", P, "solver", weight))
    return GeneratorSet(entries, minus_window(grading, depth))


def _commute_suite(grading: Grading, generators: GeneratorSet, n_jobs: int) -> Tuple[bool, Dict]:
    result = verify_pairwise_commute(generators, grading, n_jobs)
    summary = {"generators": len(generators), "pairs": result.checked, "N": result.detail.get("N")}
    if not result:
        summary["witness"] = result.witness
    return bool(result), summary


def cmd_commute(case: Case, n_jobs: int = 1) -> Report:
    """Pairwise Poisson-commutativity of the truncated Z(q^theta, [0]) in the doubled cyclic quotient"""

    def body(report: Report):
        grading = case.grading
        depth = default_window(case)
        report.window = depth
        if case.reductive:
            report.notes.append("regularity hypothesis holds for reductive algebras; search skipped")
        else:
            regular = check_q0_regular_intersection(grading, case.trials, case.seed)
            report.detail["hypothesis_witness"] = _covector(regular.witness) if regular else None
            if not regular:
                report.downgrade(Status.INCONCLUSIVE, "no regular covector found in q_0*")
                return
        generators = z0_generators(case, depth)
        ok, summary = _commute_suite(grading, generators, n_jobs)
        report.checked += summary["pairs"]
        report.detail["main"] = summary
        report.identities.extend(f"{name} = {_text(P, grading)}" for name, P in zip(generators.names(), generators.polys()))
        if not ok:
            report.fail(summary["witness"])
            return
        if case.reductive and grading.order > 1:
            inherited = {
                "g_(inf)": contract_infinity_with_automorphism(grading),
                "g0 x| g_(inf)": semidirect_g0_ginf(grading),
            }
            sub_depth = min(depth, SOLVER_DEPTH)
            for label, sub in inherited.items():
                regular = check_q0_regular_intersection(sub, case.trials, case.seed)
                if not regular:
                    report.downgrade(Status.INCONCLUSIVE, f"{label}: no regular covector found in q_0*")
                    continue
                ok, summary = _commute_suite(sub, solved_generators(sub, sub_depth), n_jobs)
                summary["hypothesis_witness"] = _covector(regular.witness)
                report.detail[label] = summary
                report.checked += summary["pairs"]
                if not ok:
                    report.fail({"algebra": label, **summary["witness"]})

    return _guarded(_new_report(case, "commute"), body)


def cmd_free(case: Case) -> Report:
    """Free generation: Jacobian rank equals the number of generators, all nonzero, vanishing rule"""

    def body(report: Report):
        if not case.has_family:
            raise CatalogRefusal(f"free generation needs an invariant catalog; {case.algebra.name} has none")
        grading = case.grading
        depth = default_window(case)
        report.window = depth
        generators = z0_generators(case, depth)
        zero = [e.name for e in generators.entries if not e.poly]
        if zero:
            report.fail({"zero_generators": zero})
            return
        found = random_jacobian_rank(generators.polys(), seed=case.seed, retries=3)
        report.detail.update({"generators": generators.names(), "jacobian_rank": found})
        report.checked += 1
        if found != len(generators):
            report.fail({"jacobian_rank": found, "generators": len(generators)})
        bound = 3 * grading.order
        for F in case.family().eigen_invariants():
            report.checked += 1
            if not vanishing_rule_holds(F.poly, F.ell, grading, bound):
                report.fail({"vanishing_rule": F.name, "ell": F.ell, "bound": bound})

    return _guarded(_new_report(case, "free"), body)


def cmd_invariance(case: Case) -> Report:
    """Every Z0 generator is invariant modulo the positive part"""

    def body(report: Report):
        grading = case.grading
        depth = default_window(case)
        report.window = depth
        generators = z0_generators(case, depth)
        for entry in generators.entries:
            result = verify_invariance(entry.poly, grading, "zero", generators.window)
            report.checked += result.checked
            if not result:
                actor = result.witness["actor"]
                report.fail(
                    {
                        "generator": entry.name,
                        "actor": f"{grading.eigen.basis[actor.base_index]}[t^{actor.t_exponent}]",
                        "residue": _text(result.witness["residue"], grading),
                    }
                )
                return

    return _guarded(_new_report(case, "invariance"), body)


# ----------------------------------------------------------------------
# the quotient map


def cmd_psi(case: Case, mode: str = "Z0", image_bound: int = 3) -> Report:
    """psi-image identities (Z0) or the t-side regime with its checkable hypotheses (Zt)"""
    task = "psi-image" if mode == "Z0" else "psi-t"

    def body(report: Report):
        if not case.has_family:
            raise CatalogRefusal(f"psi suites need an invariant catalog; {case.algebra.name} has none")
        if mode == "Z0":
            _psi_z0(case, report, image_bound)
        elif mode == "Zt":
            _psi_zt(case, report, image_bound)
        else:
            raise JobParseError(f"unknown psi mode '{mode}'", "$.tasks")

    return _guarded(_new_report(case, task), body)


def _psi_z0(case: Case, report: Report, image_bound: int):
    grading = case.grading
    m = grading.order
    family = case.family()
    h = g0_invariants(grading, family)
    depth = default_window(case)
    report.window = depth
    size = len(h)
    for F in family.eigen_invariants():
        for j in range(image_bound + 1):
            result = verify_image_formula(F.poly, F.ell, j, grading)
            report.checked += 1
            report.identities.append(f"psi({F.name}[{F.ell + j * m}]) = {_text(result.witness['lhs'], grading)}")
            if not result:
                report.fail(
                    {
                        "identity": f"psi({F.name}[{F.ell + j * m}])",
                        "difference": _text(result.witness["difference"], grading),
                    }
                )
        js = [j for j in range(1 if F.ell == 0 else 0, depth // m + 1) if F.ell + j * m <= depth]
        tm = transition_matrix(F.poly, F.ell, grading, js)
        size += len(tm.rows)
        report.detail.setdefault("transition", {})[F.name] = {
            "rows": tm.rows,
            "columns": tm.columns,
            "entries": [[None if e is None else e.to_text() for e in row] for row in tm.entries],
        }
        if not tm.is_lower_unitriangular() or not tm.matches_binomials(F.degree):
            report.fail({"transition": F.name, "rows": tm.rows, "columns": tm.columns})
    report.detail["transition_size"] = size


def _psi_zt(case: Case, report: Report, image_bound: int):
    grading = case.grading
    family = case.family()
    invariants = family.eigen_invariants()
    rank_g = case.entry.rank
    # checkable hypotheses: ind g_(0) = rk g, and independent highest components
    ind0, xi = index_with_witness(contract_zero(grading), case.trials, case.seed)
    tops = [highest_component(F.poly, grading.degree_of) for F in invariants]
    ggs_rank = random_jacobian_rank([top for _, top in tops], seed=case.seed, retries=3)
    report.detail["hypotheses"] = {
        "ind_g(0)": ind0,
        "rk_g": rank_g,
        "ind_witness": _covector(xi),
        "highest_component_rank": ggs_rank,
        "codim2": "assumed, not verified",
    }
    report.notes.append("codim-2 property of g_(0) is assumed, not verified")
    if ind0 != rank_g or ggs_rank != len(invariants):
        report.downgrade(Status.HYPOTHESES_NOT_ESTABLISHED, "ind g_(0) = rk g or the good generating system check failed")
        return
    for F, (top_degree, top) in zip(invariants, tops):
        for J in range(image_bound + 1):
            result = verify_t_side_image(F.poly, J, grading)
            report.checked += 1
            b = result.witness["b"]
            if not result:
                report.fail({"identity": f"psi({F.name}[{-(b + J * grading.order)}])", "difference": _text(result.witness["difference"], grading)})
                continue
            if J == 0:
                report.detail.setdefault("b", {})[F.name] = b
                if result.witness["lhs"] != top:
                    report.fail({"identity": f"psi({F.name}[{-b}]) = {F.name}*", "lhs": _text(result.witness["lhs"], grading)})
    depth = default_window(case)
    report.window = depth
    t_side = generators_Zt(invariants, grading, depth)
    for entry in t_side.entries:
        result = verify_invariance(entry.poly, grading, "t", t_side.window)
        report.checked += result.checked
        if not result:
            report.fail({"generator": entry.name, "invariance": "t-side", "residue": _text(result.witness["residue"], grading)})
            return
    # transcendence degree of Z_x together with g0
    zx = generators_Zx(invariants, grading).polys()
    g0_basis = [Poly.var(a) for a in grading.components[0]]
    trdeg = random_jacobian_rank(zx + g0_basis, seed=case.seed, retries=3)
    expected = (grading.dim + rank_g) // 2
    report.detail["trdeg"] = {"found": trdeg, "expected": expected}
    report.checked += 1
    if trdeg != expected:
        report.fail({"trdeg": trdeg, "expected": expected})


def _zeta_tilde(grading: Grading, n: int) -> CycloScalar:
    """A primitive nm-th root whose n-th power is the grading's zeta"""
    m = grading.order
    N = n * m
    for k in range(1, N):
        if gcd(k, N) == 1 and zeta_power(N, k) ** n == grading.zeta:
            return zeta_power(N, k)
    raise CatalogRefusal(f"no primitive {N}-th root lifts {grading.zeta}")


def cmd_h_generators(case: Case) -> Report:
    """H-generators on q^{+n}: eigenvalues, the sum over j, and which are fixed"""

    def body(report: Report):
        grading = case.grading
        invariants = case.family().eigen_invariants() if case.has_family else None
        if invariants is None:
            raise CatalogRefusal(f"H-generators need an invariant catalog; {case.algebra.name} has none")
        for n in sorted({2, 3, case.n}):
            zeta_tilde = _zeta_tilde(grading, n)
            twisted = check_cyclic_twist(grading, n, zeta_tilde)
            report.checked += twisted.checked
            if not twisted:
                report.fail({"n": n, "check": "cyclic twist", **twisted.witness})
            hs, twist = build_H_generators([(F.poly, F.ell) for F in invariants], grading, n, zeta_tilde)
            for h in hs:
                report.checked += 1
                result = check_H_generator(h, twist, zeta_tilde)
                if not result:
                    report.fail({"n": n, "generator": invariants[h.i].name, "j": h.j, "check": "eigenvector"})
                fixed = h.exponent == 0
                if fixed != (invariants[h.i].ell == 0 and h.j == 0):
                    report.fail({"n": n, "generator": invariants[h.i].name, "j": h.j, "check": "fixed"})
            for i, F in enumerate(invariants):
                report.checked += 1
                total = Poly.zero()
                for h in hs:
                    if h.i == i:
                        total = total + h.poly
                if total != F.poly:
                    report.fail({"n": n, "generator": F.name, "check": "sum over j"})
            report.detail[f"n={n}"] = {"generators": len(hs), "zeta_tilde": zeta_tilde.to_text()}

    return _guarded(_new_report(case, "h-generators"), body)


# ----------------------------------------------------------------------
# catalog and jobs


def cmd_catalog() -> Report:
    """Catalog algebras, their preset automorphisms, and the invariant degree records"""
    report = Report(job_id="catalog", task="catalog")
    with timed(report):
        report.detail["algebras"] = [
            {
                "name": e.name,
                "dim": e.algebra.dim,
                "rank": e.rank,
                "reductive": e.reductive,
                "automorphisms": e.presets,
                "description": e.description,
            }
            for e in list_entries()
        ]
        report.detail["invariants"] = degree_listing()
        report.checked = len(report.detail["algebras"])
    return report


def run_task(case: Case, task: str, settings: Settings) -> Report:
    if task == "check":
        return cmd_check(case)
    if task == "grade":
        return cmd_grade(case)
    if task == "index":
        return cmd_index(case)
    if task == "commute":
        return cmd_commute(case, settings.n_jobs)
    if task == "free":
        return cmd_free(case)
    if task == "psi-image":
        return cmd_psi(case, "Z0", settings.image_bound)
    if task == "psi-t":
        return cmd_psi(case, "Zt", settings.image_bound)
    if task == "invariance":
        return cmd_invariance(case)
    if task == "h-generators":
        return cmd_h_generators(case)
    raise JobParseError(f"unknown task '{task}'", "$.tasks")


def cmd_run(job: JobFile, settings: Optional[Settings] = None) -> List[Report]:
    """Resolve a job and run its tasks; reports come back in job order"""
    settings = settings or get_settings()
    try:
        case = resolve_case(job, settings.seed, settings.trials, settings.order_cap)
    except TwistloopError as exc:
        location = getattr(exc, "location", "$")
        report = Report(job_id=job.id, task="resolve")
        report.fail({"error": type(exc).__name__, "location": location, "message": str(exc)})
        return [report]
    if case.has_family:
        # resolve the shared family before tasks fan out
        try:
            case.family()
        except TwistloopError as exc:
            logger.warning(f"job {job.id}: invariant family unavailable: {exc}")
    reports = Parallel(n_jobs=settings.n_jobs, prefer="threads")(
        delayed(run_task)(case, task, settings) for task in job.tasks
    )
    return list(reports)


def load_reports(path: Path) -> List[Report]:
    """Reports written by `--json`: a single report or a list"""
    doc = json.loads(Path(path).read_text())
    items = doc if isinstance(doc, list) else [doc]
    return [Report.model_validate(item) for item in items]
