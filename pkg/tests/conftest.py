"""Shared fixtures plus the acceptance-summary hook.

The acceptance tests in test_acceptance.py are named test_criterion_NN_*;
after the run, one PASS/FAIL line per criterion is printed in a dedicated
terminal section so the gate can be read off without scrolling the dots.
"""

import re

import pytest

_ACCEPTANCE: dict[int, dict] = {}


@pytest.fixture
def acceptance_detail(request):
    """Attach a human-readable detail string to this criterion's summary line."""

    def record(text: str) -> None:
        match = re.search(r"criterion_(\d+)", request.node.name)
        if match:
            _ACCEPTANCE.setdefault(int(match.group(1)), {})["detail"] = text

    return record


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if match and report.when == "call":
        entry = _ACCEPTANCE.setdefault(int(match.group(1)), {})
        entry["outcome"] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[number]
        status = "PASS" if entry.get("outcome") == "passed" else "FAIL"
        detail = entry.get("detail", "")
        terminalreporter.write_line(f"{status}  criterion {number:2d}  {detail}")
