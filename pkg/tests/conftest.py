import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("acceptance")
    if crit is not None:
        _ACCEPTANCE.append((crit, report.outcome))


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        request.node.user_properties.append(("acceptance", marker.args))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    grouped = {}
    for crit, outcome in _ACCEPTANCE:
        grouped.setdefault(crit, []).append(outcome == "passed")
    for (num, text), oks in sorted(grouped.items()):
        status = "PASS" if all(oks) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {text} ({sum(oks)}/{len(oks)})")
