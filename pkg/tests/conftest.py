import re

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        match = re.search(r"test_(ac\d+)_(\w+)", report.nodeid)
        if match:
            label = f"{match.group(1).upper()} {match.group(2).replace('_', ' ')}"
            _acceptance[label] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(re.match(r"AC(\d+)", s).group(1))):
        verdict = "PASS" if _acceptance[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {label}")
