import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from impactplot.synthetic import researcher_one, researcher_two  # noqa: E402

_acceptance = {}


@pytest.fixture(scope="session")
def r1():
    return researcher_one()


@pytest.fixture(scope="session")
def r2():
    return researcher_two()


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    if report.when == "call" or report.failed:
        previous = _acceptance.get(report.nodeid)
        if previous is None or previous[2] == "PASS":
            _acceptance[report.nodeid] = (*marker, "PASS" if report.passed else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_acceptance.values()):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
