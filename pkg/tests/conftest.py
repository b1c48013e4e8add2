import time
from contextlib import contextmanager

import pytest

_LINES: dict[int, str] = {}


class _Gate:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.notes: list[str] = []
        self.started = time.perf_counter()

    def note(self, text: str):
        self.notes.append(text)

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started


@contextmanager
def _gate(number: int, title: str):
    g = _Gate(number, title)
    try:
        yield g
    except BaseException as exc:
        reason = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
        _record(g, "FAIL", [reason] + g.notes)
        raise
    _record(g, "PASS", g.notes)


def _record(g: _Gate, status: str, notes: list[str]):
    detail = "; ".join(notes)
    line = f"criterion {g.number:>2} {status}  {g.title} ({g.elapsed:.1f}s)" + (f": {detail}" if detail else "")
    _LINES[g.number] = line
    print(line)


@pytest.fixture
def gate():
    return _gate


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
