import json

import pytest
from pydantic import ValidationError
from rich.console import Console

from src.harness.config import Settings, get_settings, initialize_settings
from src.harness.jobs import JobFile, load_job, resolve_case
from src.harness.report import Report, Status, exit_code, render_reports, reports_to_json
from src.harness.suites import cmd_catalog, cmd_check, cmd_run, load_reports
from src.liealg.catalog import get_algebra
from src.utils.errors import InvalidAutomorphism, InvalidRoot, JobParseError

BROKEN = {
    "name": "broken",
    "dim": 3,
    "basis": ["x", "y", "z"],
    "brackets": [[0, 1, [[2, 1]]], [1, 2, [[0, 1]]], [2, 0, [[2, 1]]]],
}


def _case(algebra="sl2", automorphism="id", **kwargs):
    return resolve_case(JobFile(algebra=algebra, automorphism=automorphism, **kwargs), 7, 12)


def test_exit_codes():
    ok = Report(task="check")
    odd = Report(task="index").downgrade(Status.INCONCLUSIVE, "no witness found")
    bad = Report(task="commute").fail({"pair": ["a", "b"]})
    assert exit_code([ok, ok]) == 0
    assert exit_code([ok, odd]) == 2
    assert exit_code([ok, odd, bad]) == 1


def test_failure_needs_a_witness():
    with pytest.raises(ValidationError):
        Report(task="check", status=Status.FAIL)
    bad = Report(task="check").fail({"why": "x"})
    assert bad.downgrade(Status.INCONCLUSIVE, "later").status == Status.FAIL


def test_reports_survive_json(tmp_path):
    reports = [Report(task="check", checked=3), Report(task="free").fail({"zero_generators": ["F[2]"]})]
    path = tmp_path / "reports.json"
    path.write_text(reports_to_json(reports))
    again = load_reports(path)
    assert [r.status for r in again] == [Status.PASS, Status.FAIL]
    assert again[1].witnesses == [{"zero_generators": ["F[2]"]}]


def test_render_reports():
    console = Console(record=True, width=120)
    render_reports([Report(task="grade"), Report(task="commute").fail({"pair": ["h0", "F[2]"]})], console)
    text = console.export_text()
    assert "grade" in text and "fail" in text and "F[2]" in text


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("TWISTLOOP_TRIALS", "5")
    monkeypatch.setenv("TWISTLOOP_LOG_LEVEL", "info")
    settings = initialize_settings()
    assert settings.trials == 5
    assert settings.log_level == "INFO"
    assert get_settings() is settings
    monkeypatch.setenv("TWISTLOOP_TRIALS", "0")
    with pytest.raises(ValidationError):
        Settings.from_env()
    monkeypatch.delenv("TWISTLOOP_TRIALS")
    monkeypatch.delenv("TWISTLOOP_LOG_LEVEL")
    assert initialize_settings().trials == 24


@pytest.mark.parametrize(
    "content, location",
    [
        ("{not json", "$"),
        (json.dumps({"id": "x"}), "$.algebra"),
        (json.dumps({"algebra": "sl2", "tasks": ["check", "fly"]}), "$.tasks"),
        (json.dumps({"algebra": "sl2", "trials": 0}), "$.trials"),
    ],
)
def test_job_parse_errors_name_the_location(tmp_path, content, location):
    path = tmp_path / "job.json"
    path.write_text(content)
    with pytest.raises(JobParseError) as err:
        load_job(path)
    assert err.value.location == location


def test_resolve_catalog_and_inline_jobs():
    case = _case("sl3", "outer-involution", window_N=4)
    assert case.grading.component_dims() == [3, 5]
    assert case.reductive and case.has_family
    assert case.window == 4
    inline = _case("sl2", [[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
    assert inline.theta.order == 2
    with pytest.raises(InvalidAutomorphism):
        _case("sl2", [[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    with pytest.raises(InvalidRoot):
        _case("sl2", "involution", zeta_choice=2)
    with pytest.raises(JobParseError) as err:
        _case("g2")
    assert err.value.location == "$.algebra"
    with pytest.raises(JobParseError):
        _case(BROKEN, "involution")


def test_check_reports_the_jacobi_triple():
    report = cmd_check(_case(BROKEN))
    assert report.status == Status.FAIL
    assert report.witnesses[0]["check"] == "jacobi"
    assert report.witnesses[0]["basis"] == ["x", "y", "z"]


def test_check_rejects_a_declared_grading_the_bracket_breaks():
    doc = get_algebra("sl2").to_json()
    graded = cmd_check(_case({**doc, "degrees": [1, 1, 0], "modulus": 2}))
    assert graded.status == Status.PASS, graded.witnesses
    report = cmd_check(_case({**doc, "degrees": [1, 0, 0], "modulus": 2}))
    assert report.status == Status.FAIL
    witness = report.witnesses[0]
    assert witness["check"] == "declared grading"
    assert sorted(witness["basis"]) == ["e", "f"]
    assert witness["offending_element"] == "h"


def test_catalog_listing():
    report = cmd_catalog()
    names = [row["name"] for row in report.detail["algebras"]]
    assert names == ["sl2", "sl3", "sl4", "so3", "heisenberg3", "sl2xsl2"]
    assert any(row["name"] == "e6-involution" for row in report.detail["invariants"])


def test_run_keeps_job_order():
    job = JobFile(id="j1", algebra="sl2", automorphism="involution", tasks=["grade", "check"])
    reports = cmd_run(job, Settings(n_jobs=2))
    assert [r.task for r in reports] == ["grade", "check"]
    assert exit_code(reports) == 0
    failed = cmd_run(JobFile(id="j2", algebra="nope"), Settings())
    assert failed[0].task == "resolve"
    assert failed[0].witnesses[0]["location"] == "$.algebra"
    assert exit_code(failed) == 1
