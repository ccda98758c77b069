import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    label = report.nodeid.split("[", 1)[1].rstrip("]")
    _acceptance[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for label, _ in CRITERIA:
        outcome = _acceptance.get(label.split()[0])
        if outcome is not None:
            terminalreporter.write_line(f"{outcome}  {label}")
