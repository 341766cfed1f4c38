import pytest

from octobelt.algebra import Quaternion
from octobelt.loop16 import SignedBasis

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def sb():
    return SignedBasis.parse


@pytest.fixture
def o():
    """Octonion from a signed basis name, e.g. o('-Li')."""
    return lambda name: SignedBasis.parse(name).to_octonion()


Q1, QI, QJ, QK = (Quaternion.from_coeffs([int(t == n) for t in range(4)]) for n in range(4))
