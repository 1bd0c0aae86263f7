from contextlib import contextmanager

import pytest

_criteria: list[tuple[int, str, str]] = []


@pytest.fixture
def criterion():
    """Context manager that records a PASS/FAIL/SKIP line for an acceptance criterion."""

    @contextmanager
    def check(number: int, title: str, detail=None):
        try:
            yield
        except pytest.skip.Exception as exc:
            _criteria.append((number, "SKIP", f"{title} ({exc.msg})"))
            raise
        except BaseException:
            _criteria.append((number, "FAIL", title))
            raise
        note = f" ({detail()})" if detail else ""
        _criteria.append((number, "PASS", title + note))

    return check


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title in sorted(_criteria):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
