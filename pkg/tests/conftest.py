"""Collects the acceptance-criterion outcomes and prints one line per criterion."""

_criteria: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria.append((value, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria, key=lambda c: int(c[0].split(":")[0])):
        terminalreporter.write_line(f"criterion {label}: {outcome}")
