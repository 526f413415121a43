"""Shared pytest wiring: the acceptance-criteria summary section.

test_acceptance.py records one verdict per criterion; after the run the
verdicts are printed as their own section so a plain `pytest -v` log shows
every criterion on one line, pass or fail.
"""

_verdicts: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, passed: bool, text: str) -> None:
    _verdicts[number] = ("PASS" if passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        verdict, text = _verdicts[number]
        terminalreporter.write_line(f"ACCEPTANCE {verdict} criterion {number}: {text}")
