import time
from contextlib import contextmanager

import numpy as np
import pytest

_CRITERIA = pytest.StashKey[list]()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def criterion(request):
    """Context manager timing one acceptance criterion against its runtime limit."""
    records = request.config.stash.setdefault(_CRITERIA, [])

    @contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        failure = None
        try:
            yield
        except BaseException as e:
            failure = (str(e).strip().splitlines() or [type(e).__name__])[0][:110]
            raise
        finally:
            elapsed = time.perf_counter() - t0
            if failure is None and elapsed >= limit:
                failure = f"runtime {elapsed:.1f} s over the {limit:g} s limit"
            records.append((number, title, failure, elapsed, limit))
        if elapsed >= limit:
            pytest.fail(f"criterion {number} took {elapsed:.1f} s (limit {limit:g} s)")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    records = config.stash.get(_CRITERIA, [])
    if not records:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, failure, elapsed, limit in sorted(records):
        status = "PASS" if failure is None else "FAIL"
        line = f"criterion {number} {status}  {title}  ({elapsed:.2f} s, limit {limit:g} s)"
        if failure:
            line += f"  -- {failure}"
        terminalreporter.write_line(line)
