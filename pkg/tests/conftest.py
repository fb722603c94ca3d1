_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_ACCEPTANCE.items(), key=lambda kv: _criterion_number(kv[0])):
        name = nodeid.split("::test_criterion_")[-1]
        num, _, label = name.partition("_")
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2} [{verdict}] {label.replace('_', ' ')}")


def _criterion_number(nodeid):
    return int(nodeid.split("::test_criterion_")[-1].split("_")[0])

