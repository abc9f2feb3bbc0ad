import pytest

from coxbij.roots import PositiveRoot, RootSystemId

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def A(k):
    return RootSystemId("A", k)


def B(k):
    return RootSystemId("B", k)


def span(system, i, j):
    return PositiveRoot.span(system, i, j)


def dbl(system, d, j):
    return PositiveRoot.doubled(system, d, j)


@pytest.fixture
def a7_antichain():
    S = A(7)
    return (span(S, 1, 2), span(S, 2, 3), span(S, 3, 5), span(S, 4, 6), span(S, 5, 7))


@pytest.fixture
def b9_antichain():
    S = B(9)
    return (dbl(S, 4, 5), dbl(S, 2, 6), span(S, 1, 7), span(S, 3, 8), span(S, 4, 9))


@pytest.fixture
def b11_antichain():
    S = B(11)
    return (dbl(S, 5, 6), dbl(S, 4, 7), dbl(S, 3, 8), span(S, 2, 9), span(S, 5, 10), span(S, 7, 11))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
