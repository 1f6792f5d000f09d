import time
from contextlib import contextmanager

import pytest

_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_KEY] = []


class Recorder:
    def __init__(self, sink):
        self.sink = sink

    @contextmanager
    def criterion(self, number: int, title: str, limit_s: float):
        """Time the body; record PASS only if it finished within the limit."""
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = elapsed < limit_s
            status = "PASS" if ok and within else "FAIL"
            extra = "" if within else f", over the {limit_s:g} s limit"
            line = f"criterion {number:2d}: {status}  {title} ({elapsed:.2f} s{extra})"
            self.sink.append((number, line))
            print(line)
        assert within, f"criterion {number} took {elapsed:.1f} s (limit {limit_s} s)"


@pytest.fixture
def acceptance(request):
    return Recorder(request.config.stash[_KEY])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
