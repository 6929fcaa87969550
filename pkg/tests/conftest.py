import sys

import pytest

from smallgobelin import GF, QQ, SyzygyPair, algebra


@pytest.fixture(scope="session")
def A4():
    """Q[x]/(x^4)."""
    return algebra(["x"], ["x^4"])


@pytest.fixture(scope="session")
def AXY():
    """Q[x,y]/(x^2, y^2)."""
    return algebra(["x", "y"], ["x^2", "y^2"])


@pytest.fixture(scope="session")
def S0(A4):
    return SyzygyPair(A4, "x^2", "x^3", 0, 0, 0, 0)


@pytest.fixture(scope="session")
def S1(A4):
    return SyzygyPair(A4, "x^2", "x^3", "x^2", 0, "x", -1)


@pytest.fixture(scope="session")
def CUSP():
    """F_32749[x,y]/(xy, x^2 + y^3), mu = 5."""
    return algebra(["x", "y"], ["x*y", "x^2+y^3"], GF(32749))


S1_TEXT = """\
# S1
field Q
ring x
relations x^4
f1 = x^2
f2 = x^3
c11 = x^2
c12 = 0
c21 = x
c22 = -1
"""

S0_TEXT = S1_TEXT.replace("c11 = x^2", "c11 = 0").replace("c21 = x", "c21 = 0").replace("c22 = -1", "c22 = 0")


@pytest.fixture
def s1_file(tmp_path):
    p = tmp_path / "s1.scn"
    p.write_text(S1_TEXT)
    return p


@pytest.fixture
def s0_file(tmp_path):
    p = tmp_path / "s0.scn"
    p.write_text(S0_TEXT)
    return p


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
