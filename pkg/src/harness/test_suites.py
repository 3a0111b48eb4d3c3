import pytest

from src.harness.jobs import JobFile, resolve_case
from src.harness.report import Status
from src.harness.suites import (
    cmd_commute,
    cmd_free,
    cmd_grade,
    cmd_h_generators,
    cmd_index,
    cmd_invariance,
    cmd_psi,
    default_window,
)


def _case(algebra, automorphism, window=None):
    return resolve_case(JobFile(algebra=algebra, automorphism=automorphism, window_N=window), 7, 12)


@pytest.fixture
def involution():
    return _case("sl2", "involution", 8)


def test_default_windows():
    assert default_window(_case("sl2", "involution")) == 8
    assert default_window(_case("sl2", "id")) == 4
    assert default_window(_case("heisenberg3", "id")) == 4
    assert default_window(_case("sl3", "id", 2)) == 2


def test_grade(involution):
    report = cmd_grade(involution)
    assert report.passed
    assert report.detail["component_dims"] == [1, 2]
    assert report.detail["components"][0] == ["h"]


def test_index(involution):
    report = cmd_index(involution)
    assert report.passed
    assert report.detail["q"]["index"] == 1
    assert report.detail["q_(0)"]["index"] == 1
    assert report.detail["q_(inf)"]["index"] == 1


def test_commute_on_the_involution(involution):
    report = cmd_commute(involution)
    assert report.window == 8
    assert report.detail["main"]["generators"] == 5
    assert report.status == Status.PASS, report.witnesses
    assert "witness" not in report.detail["main"]
    assert report.identities[0].startswith("h0 = ")
    assert report.detail["g_(inf)"]["pairs"] == 36
    assert report.detail["g0 x| g_(inf)"]["pairs"] == 120
    for label in ("g_(inf)", "g0 x| g_(inf)"):
        assert "witness" not in report.detail[label]
        assert report.detail[label]["hypothesis_witness"] is not None


def test_commute_without_twist():
    report = cmd_commute(_case("sl2", "id", 6))
    assert report.status == Status.PASS, report.witnesses
    assert report.detail["main"]["generators"] == 7


def test_commute_on_the_heisenberg_algebra():
    report = cmd_commute(_case("heisenberg3", "id", 4))
    assert report.status == Status.PASS, report.witnesses
    assert report.detail["hypothesis_witness"] is not None


def test_free_and_invariance(involution):
    free = cmd_free(involution)
    assert free.passed, free.witnesses
    assert free.detail["jacobian_rank"] == 5
    assert cmd_invariance(involution).passed


def test_free_needs_a_catalog():
    report = cmd_free(_case("heisenberg3", "id", 4))
    assert report.status == Status.INCONCLUSIVE
    assert report.notes


def test_psi_images(involution):
    report = cmd_psi(involution, "Z0", 3)
    assert report.passed, report.witnesses
    assert report.detail["transition_size"] == 5
    assert report.detail["transition"]["F2"]["columns"] == [0, 2]


def test_psi_t_side(involution):
    report = cmd_psi(involution, "Zt", 2)
    assert report.passed, report.witnesses
    assert report.detail["b"]["F2"] == 2
    assert report.detail["trdeg"] == {"found": 2, "expected": 2}
    assert report.notes


def test_psi_rejects_unknown_mode(involution):
    report = cmd_psi(involution, "Zq")
    assert report.status == Status.FAIL
    assert report.witnesses[0]["location"] == "$.tasks"


def test_h_generators(involution):
    report = cmd_h_generators(involution)
    assert report.passed, report.witnesses
    assert report.detail["n=2"]["generators"] == 2
    assert report.detail["n=3"]["generators"] == 3


def test_h_generators_with_a_twisted_cubic():
    report = cmd_h_generators(_case("sl3", "outer-involution", 4))
    assert report.status == Status.PASS, report.witnesses
    assert report.detail["n=2"]["generators"] == 4
    assert report.detail["n=3"]["generators"] == 6


@pytest.mark.slow
def test_larger_g0_is_inconclusive():
    report = cmd_invariance(_case("sl4", "inner-involution", 2))
    assert report.status == Status.INCONCLUSIVE


@pytest.mark.slow
@pytest.mark.parametrize("automorphism", ["id", "outer-involution"])
def test_commute_on_sl3(automorphism):
    report = cmd_commute(_case("sl3", automorphism, 4))
    assert report.status == Status.PASS, report.witnesses
    assert "witness" not in report.detail["main"], report.detail["main"]
    if automorphism == "outer-involution":
        assert report.detail["g_(inf)"]["pairs"] > 0
        assert "witness" not in report.detail["g0 x| g_(inf)"]


@pytest.mark.slow
@pytest.mark.parametrize("automorphism, size", [("outer-involution", 5), ("inner-involution", 6)])
def test_psi_images_on_sl3(automorphism, size):
    report = cmd_psi(_case("sl3", automorphism, 4), "Z0", 2)
    assert report.status == Status.PASS, report.witnesses
    assert report.window == 4
    assert report.detail["transition_size"] == size
    assert set(report.detail["transition"]) == {"F2", "F3"}


@pytest.mark.slow
def test_free_on_sl3_without_twist():
    report = cmd_free(_case("sl3", "id", 4))
    assert report.status == Status.PASS, report.witnesses
    assert report.detail["jacobian_rank"] == 10


@pytest.mark.slow
def test_free_on_the_sl3_outer_involution():
    report = cmd_free(_case("sl3", "outer-involution", 4))
    assert report.status == Status.PASS, report.witnesses
    assert report.detail["jacobian_rank"] == 5
    assert report.detail["generators"] == ["h0", "F2[2]", "F2[4]", "F3[1]", "F3[3]"]
