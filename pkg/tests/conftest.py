from __future__ import annotations

import pathlib
from collections import defaultdict

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"

CRITERIA = {
    1: "rewiring suite",
    2: "global-size guard",
    3: "structure normal form",
    4: "strip of embedded base terms",
    5: "functoriality of multiplexing",
    6: "transversality",
    7: "box laws",
    8: "matrix arrows",
    9: "bialgebra and Hopf laws",
    10: "semiring collapses",
    11: "ZW column quotient",
    12: "span = cospan over Q",
    13: "scaled ZX formula",
    14: "translation soundness",
    15: "CLI round trip, exit codes, golden dot",
}

_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"AC-{n:02d} {status:<7} {title} ({len(results or [])} tests)")


@pytest.fixture
def golden_dir() -> pathlib.Path:
    return GOLDEN
