from __future__ import annotations

import pytest

from aswram.fields import GF, FieldSpec, prime_field
from aswram.polys import PolyU

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def F2():
    return prime_field(2)


@pytest.fixture
def F3():
    return prime_field(3)


@pytest.fixture
def F4():
    return GF(FieldSpec(2, 2))


@pytest.fixture
def F9():
    return GF(FieldSpec(3, 2))


def poly(F, *coeffs):
    return PolyU.from_ints(F, list(coeffs))


def mono(F, k, c=1):
    return PolyU.monomial(F, c, k)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
