import os

import pytest

_RESULTS: list = []


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run the order-6 enumeration (also enabled by CONJ_RUN_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow") or os.environ.get("CONJ_RUN_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="order-6 run needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label, passed, detail)."""

    def record(label: str, passed: bool, detail: str = ""):
        _RESULTS.append((label, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _RESULTS:
        terminalreporter.write_line(f"{label}: {'PASS' if passed else 'FAIL'}  {detail}")
