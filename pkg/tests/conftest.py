"""Shared pytest wiring.

The acceptance tests record one scoreboard line each; replaying them in the
terminal summary keeps the verdicts visible even though pytest captures
stdout from passing tests.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    board = getattr(mod, "SCOREBOARD", None) if mod else None
    if not board:
        return
    terminalreporter.section("acceptance criteria")
    for line in board:
        terminalreporter.write_line(line)
