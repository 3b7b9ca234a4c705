import time

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def naive_positions(needle, haystack):
    """Slice-by-slice scan; deliberately avoids str.find."""
    n = len(needle)
    return [s + 1 for s in range(len(haystack) - n + 1) if haystack[s:s + n] == needle]


def naive_fixed_point(d, n):
    """Iterate the substitution letter by letter from 'a' until long enough."""
    w = "a"
    while len(w) < n:
        w = "".join(("a" * d + "b") if c == "a" else "a" for c in w)
    return w[:n]


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "setup":
        item.setup_seconds = report.duration  # includes shared fixtures built here
    elif report.when == "call":
        number, title = marker.args
        seconds = getattr(item, "setup_seconds", 0.0) + report.duration
        _acceptance.append((number, title, report.outcome, seconds))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_acceptance, key=lambda r: (r[0], r[1])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({duration:.2f}s)")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
