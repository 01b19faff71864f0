"""Shared pytest hooks for the acceptance suite.

Criterion results are echoed immediately and repeated in a terminal
summary section so the pass/fail lines survive output capture.
"""

CRITERION_LINES = []


def record_criterion(line: str) -> None:
    CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
