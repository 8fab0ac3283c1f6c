"""Shared fixtures and the acceptance-criterion summary hook.

tests/test_acceptance.py records one entry per contract criterion; the
hook below prints them as a block at the end of the run so the verdict
for each criterion is visible on a single line.
"""

from __future__ import annotations

ACCEPTANCE: list[tuple[str, bool, float]] = []


def record_criterion(name: str, ok: bool, seconds: float) -> None:
    ACCEPTANCE.append((name, ok, seconds))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds in ACCEPTANCE:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name} ({seconds:.2f}s)")
