import itertools

import numpy as np
import pytest

_CRITERIA = {}


def all_vectors(p, n):
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def brute_span(vectors, p, n):
    """Set of all F_p-combinations of ``vectors``, as tuples (independent of exactla)."""
    out = {tuple([0] * n)}
    for v in vectors:
        v = np.asarray(v, dtype=np.int64)
        out = {tuple((np.array(w) + c * v) % p) for w in out for c in range(p)}
    return out


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, budget): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title, budget = mark.args
    ok = rep.passed and rep.duration <= budget
    _CRITERIA[number] = (title, ok, rep.duration, budget, rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, dur, budget, outcome = _CRITERIA[number]
        status = "PASS" if ok else "FAIL"
        note = "" if outcome == "passed" else f" ({outcome})"
        tr.write_line(f"[{status}] criterion {number:2d}: {title} ({dur:.1f}s / {budget}s budget){note}")
