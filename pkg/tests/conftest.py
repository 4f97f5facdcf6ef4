from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextmanager
    def criterion(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            results.append((number, "FAIL", title, time.perf_counter() - start,
                            f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"))
            raise
        results.append((number, "PASS", title, time.perf_counter() - start, ""))

    return criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, title, seconds, note in sorted(results):
        line = f"{verdict} criterion {number}: {title} ({seconds:.2f}s)"
        if note:
            line += f" -- {note}"
        terminalreporter.write_line(line)
