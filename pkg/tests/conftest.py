from __future__ import annotations

import pytest

CRITERIA = {
    1: "census to order 1000 reproduces the 18-row table",
    2: "census to order 192 gives only Y(4,48;13,44)",
    3: "Holt graph battery",
    4: "HAT Xo/Xe graphs are tight; Class I implies tight",
    5: "census graphs have vertex stabilizers of order 2",
    6: "Z_5 cover of Y(4,48;13,44)",
    7: "Z_7 cover of Z(20,5;9,2) and the base graph",
    8: "HAT property suites",
    9: "oracle equivalence",
}

_results: dict[int, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call":
        _results[n] = _results.get(n, True) and rep.passed
    elif rep.failed:
        _results[n] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n, text in CRITERIA.items():
        if n not in _results:
            status = "NOT RUN"
        else:
            status = "PASS" if _results[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
