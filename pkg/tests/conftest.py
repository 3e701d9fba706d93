import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from freesplit.coefficients import GF, QQ  # noqa: E402
from freesplit.polyring import PolyRing  # noqa: E402


@pytest.fixture
def Rxy():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture
def Rx():
    return PolyRing(QQ, ["x"])


@pytest.fixture
def F7xy():
    return PolyRing(GF(7), ["x", "y"])


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
