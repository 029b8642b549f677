import pathlib

import pytest
from hypothesis import HealthCheck, settings

from qrec.io import load_system
from qrec.solve import substitute_t_power

settings.register_profile(
    "repo", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

SYSTEMS = pathlib.Path(__file__).resolve().parent.parent / "systems"


@pytest.fixture
def systems_dir():
    return SYSTEMS


@pytest.fixture
def ex_bound():
    return load_system(SYSTEMS / "ex_bound.json")


@pytest.fixture
def ex_deg(ex_bound):
    return substitute_t_power(ex_bound, 3)


@pytest.fixture(scope="session")
def planted():
    from qrec.corpus import CorpusConfig, corpus

    return corpus(40, CorpusConfig(seed=20))


_CRITERIA: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, label = mark.args
    ok = report.passed if report.when == "call" else not report.failed
    prev = _CRITERIA.get(n, (label, True))
    _CRITERIA[n] = (label, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        label, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {label}")
