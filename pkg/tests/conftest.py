import pytest

from relaxed_green import DimensionlessParams, from_dimensionless

_RESULTS = {}


@pytest.fixture(scope="session")
def fig4_params():
    return from_dimensionless(DimensionlessParams(1.2, 3.0, 5.0, 3.0))


@pytest.fixture(scope="session")
def fig6_params():
    return from_dimensionless(DimensionlessParams(3.0, 2.0, 5.0, 3.0))


@pytest.fixture
def criterion():
    """``criterion(n, ok, detail)`` records an acceptance outcome for the summary."""
    def record(number, ok, detail=""):
        ok = bool(ok)
        prev = _RESULTS.get(number)
        combined = ok and (prev is None or prev[0])
        text = detail if prev is None or not detail else f"{prev[1]}; {detail}"
        _RESULTS[number] = (combined, text)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        ok, detail = _RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
