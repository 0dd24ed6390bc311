from __future__ import annotations

import pytest

from actlab.act import coproduct, regular_act, zero_act
from actlab.fixtures import chain2, cyclic_group2, left_zero3, m3, right_zero3, trivial


@pytest.fixture
def lz3():
    return left_zero3()


@pytest.fixture
def rz3():
    return right_zero3()


@pytest.fixture
def c2():
    return cyclic_group2()


@pytest.fixture
def n2():
    return chain2()


@pytest.fixture
def t1():
    return trivial()


@pytest.fixture
def mono3():
    return m3()


def theta2(S):
    """Θ ⊔ Θ over S."""
    return coproduct([zero_act(S), zero_act(S)])[0]


@pytest.fixture
def fixtures_all():
    return [trivial(), cyclic_group2(), chain2(), left_zero3(), right_zero3(), m3()]


def reg(S):
    return regular_act(S)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
