import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number = marker.args[0]
    state = _criteria.setdefault(number, [item.name, True, 0.0])
    if report.failed:
        state[1] = False
    if report.when == "call":
        state[2] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        name, passed, duration = _criteria[number]
        terminalreporter.write_line(
            f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {name} ({duration:.3f}s)")
