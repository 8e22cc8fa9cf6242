import re

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_titles: dict[int, str] = {}
_outcomes: dict[int, bool] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m:
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _titles[int(m.group(1))] = doc


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.failed:
        _outcomes[k] = _outcomes.get(k, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(_titles):
        if k not in _outcomes:
            status = "NOT RUN"
        else:
            status = "PASS" if _outcomes[k] else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status} - {_titles[k]}")


@pytest.fixture(scope="session")
def mixed():
    from seqcm.examples import mixed_dimension_example

    return mixed_dimension_example()
