from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from trisect.config import load_config

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def case1():
    return load_config("case1.json")


@pytest.fixture(scope="session")
def case2():
    return load_config("case2.json")


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        if report.when == "call" or report.outcome != "passed":
            _CRITERIA[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.rsplit("_", 1)[1])):
        terminalreporter.write_line(f"criterion {name.rsplit('_', 1)[1]}: {_CRITERIA[name]}")
