import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion checked by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = report.user_properties and dict(report.user_properties).get("criterion")
    if label:
        _outcomes.setdefault(label, []).append(report.passed)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_outcomes, key=lambda s: int(s.split()[0][2:])):
        ok = all(_outcomes[label])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
