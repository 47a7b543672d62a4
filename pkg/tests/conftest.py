import contextlib

import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """``with criterion(n, text):`` records a PASS/FAIL line for the summary."""

    @contextlib.contextmanager
    def record(number, text):
        try:
            yield
        except BaseException:
            _CRITERIA.append(f"criterion {number:>2}: FAIL  {text}")
            raise
        _CRITERIA.append(f"criterion {number:>2}: PASS  {text}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
