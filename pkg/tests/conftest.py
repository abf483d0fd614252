"""Shared fixtures and the per-criterion acceptance summary."""
from __future__ import annotations

import time

import pytest

_SESSION_START = time.perf_counter()
_criteria: dict[int, dict] = {}


def session_elapsed() -> float:
    return time.perf_counter() - _SESSION_START


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test covers")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            entry = _criteria.setdefault(number, {"title": title, "nodeids": set(), "failed": [], "ran": 0})
            entry["nodeids"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for entry in _criteria.values():
        if report.nodeid in entry["nodeids"]:
            if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
                entry["ran"] += report.when == "call"
                if report.outcome == "failed":
                    entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        if entry["failed"]:
            status = "FAIL"
        elif entry["ran"] < len(entry["nodeids"]):
            status = "NOT RUN"
        else:
            status = "PASS"
        line = f"criterion {number}: {status}  {entry['title']}"
        if entry["failed"]:
            line += f"  (failing: {', '.join(sorted(entry['failed']))})"
        terminalreporter.write_line(line)
    terminalreporter.write_line(f"session wall-clock: {session_elapsed():.1f} s")


@pytest.fixture(scope="session")
def elapsed():
    return session_elapsed
