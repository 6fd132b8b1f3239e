from __future__ import annotations

import random

import pytest

from kfcrit.kernels import backends


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=sorted(backends()))
def kernel(request):
    return backends()[request.param]


_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    outcome = "SKIP" if report.skipped else "PASS" if report.passed else "FAIL"
    if report.when == "call" or outcome != "PASS":
        _criteria[number] = (outcome, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcome, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {outcome}  {title}")
