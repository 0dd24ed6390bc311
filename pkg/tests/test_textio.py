from __future__ import annotations

import itertools

import pytest

from actlab.act import acts_up_to, regular_act, zero_act
from actlab.errors import TextSyntaxError, UnknownMonoidReference, ValidationError
from actlab.fixtures import FIXTURES, fixture
from actlab.monoid import monoids_up_to
from actlab.textio import (Workspace, act_from_json, act_to_json, monoid_from_json, monoid_to_json, parse_act,
                           parse_monoid, print_act, print_monoid)

LZ3_TEXT = """\
# left zero monoid with identity
monoid LZ3
elements 1 a b   # identity first
table
1 a b
a a a
b b b
"""


def test_parse_lz3():
    S = parse_monoid(LZ3_TEXT)
    assert S.name == "LZ3" and S.elems == ("1", "a", "b")
    assert S.mul == fixture("LZ3").mul


def test_unknown_monoid_reference():
    with pytest.raises(UnknownMonoidReference):
        parse_act("act A over NOPE\nelements x\ntable\nx x\n", Workspace())


def test_wrong_arity_row():
    bad = LZ3_TEXT.replace("a a a", "a a")
    with pytest.raises(TextSyntaxError) as info:
        parse_monoid(bad)
    assert info.value.line == 6


def test_unknown_label_column():
    bad = LZ3_TEXT.replace("b b b", "b q b")
    with pytest.raises(TextSyntaxError) as info:
        parse_monoid(bad)
    assert (info.value.line, info.value.col) == (7, 3)


def test_missing_rows_and_header():
    with pytest.raises(TextSyntaxError):
        parse_monoid("monoid X\nelements 1 a\ntable\n1 a\n")
    with pytest.raises(TextSyntaxError):
        parse_monoid("group X\n")


def test_validation_errors_are_wrapped():
    with pytest.raises(ValidationError):
        parse_monoid("monoid X\nelements 1 x y\ntable\n1 x y\nx y x\ny y y\n")
    ws = Workspace()
    ws.add_monoid(fixture("C2"))
    with pytest.raises(ValidationError):
        parse_act("act A over C2\nelements p q\ntable\nq q\np p\n", ws)


@pytest.mark.parametrize("name", list(FIXTURES))
def test_fixture_round_trip(name):
    S = fixture(name)
    T = parse_monoid(print_monoid(S))
    assert T.elems == S.elems and T.mul == S.mul
    ws = Workspace()
    ws.add_monoid(S)
    for A in (regular_act(S), zero_act(S)):
        B = parse_act(print_act(A), ws)
        assert B.elems == A.elems and B.action == A.action


def test_theta_prints_one_row(lz3):
    text = print_act(zero_act(lz3))
    assert text.splitlines()[-1] == "θ θ θ"
    assert len(text.splitlines()) == 4


def test_hundred_enumerated_round_trips():
    structures = []
    for S in monoids_up_to(4):
        structures.append(S)
        structures.extend(acts_up_to(S, 3))
    picked = list(itertools.islice(structures, 0, None, max(1, len(structures) // 100)))[:100]
    assert len(picked) == 100
    for x in picked:
        if hasattr(x, "mul"):
            y = parse_monoid(print_monoid(x))
            assert (y.elems, y.mul) == (x.elems, x.mul)
            assert monoid_from_json(monoid_to_json(x)).mul == x.mul
        else:
            ws = Workspace()
            ws.add_monoid(x.monoid)
            y = parse_act(print_act(x), ws)
            assert (y.elems, y.action) == (x.elems, x.action)
            assert act_from_json(x.monoid, act_to_json(x)).action == x.action


def test_workspace_requires_monoid(lz3):
    ws = Workspace()
    with pytest.raises(UnknownMonoidReference):
        ws.add_act(regular_act(lz3))
