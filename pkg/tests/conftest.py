import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion; echoed in the terminal summary."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _RESULTS[number] = (bool(passed), title, detail)
        print(_line(number))

    return record


def _line(number: int) -> str:
    passed, title, detail = _RESULTS[number]
    tail = f" ({detail})" if detail else ""
    return f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}{tail}"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_RESULTS):
        terminalreporter.write_line(_line(number))
