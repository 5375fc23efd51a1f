import json
from pathlib import Path

import pytest

from knotorder import SeifertMatrix, kernels

DATA = Path(__file__).parent / "data"


@pytest.fixture
def trefoil():
    return SeifertMatrix.from_rows([[-1, 1], [0, -1]])


@pytest.fixture
def k5():
    """Twisted double with Delta = 5t^2 - 11t + 5."""
    return SeifertMatrix.from_rows([[-1, 1], [0, 5]])


@pytest.fixture(scope="session")
def knotinfo_sample():
    return json.loads((DATA / "knotinfo_sample.json").read_text())["knots"]


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        if report.when == "call" or report.failed:
            _acceptance.append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    import test_acceptance

    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance:
        name = nodeid.split("::")[-1]
        doc = (getattr(test_acceptance, name).__doc__ or name).strip().splitlines()[0]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
