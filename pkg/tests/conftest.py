"""Shared pytest wiring for the test suite.

The acceptance tests record one human-readable result line per
criterion; this hook replays them at the end of the run so they appear
in the terminal output even though pytest captures stdout of passing
tests.
"""

import sys


def _acceptance_lines():
    for name, module in list(sys.modules.items()):
        if name.rpartition(".")[2] == "test_acceptance":
            lines = getattr(module, "RESULT_LINES", None)
            if lines:
                return lines
    return []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = _acceptance_lines()
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria", sep="-")
    for line in lines:
        terminalreporter.write_line(line)
