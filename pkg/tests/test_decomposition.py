from __future__ import annotations

import pytest

from actlab.act import Subact, acts_up_to, cofree_act, cyclic_act, regular_act, zeros
from actlab.decomposition import (chain_components, components, is_indecomposable, is_indecomposable_subact,
                                  one_step_joined, to_dot)
from actlab.fixtures import FIXTURES, fixture
from actlab.monoid import all_right_congruences, monoids_up_to
from conftest import theta2
from oracles import chain_linked_components


@pytest.mark.parametrize("name", list(FIXTURES))
def test_regular_act_is_one_component(name):
    assert is_indecomposable(regular_act(fixture(name)))


def test_theta2(lz3):
    T = theta2(lz3)
    assert components(T).component_count == 2
    assert not is_indecomposable(T)
    assert one_step_joined(T, 0, 1) is None


def test_cofree_components(lz3, n2, rz3):
    assert components(cofree_act(lz3, 2)).component_count == 1
    G = cofree_act(n2, 2)
    d = components(G)
    assert d.component_count == 2
    for part in d.parts():
        assert len(zeros(G) & set(part)) == 1
    assert not is_indecomposable(cofree_act(rz3, 2))


@pytest.mark.parametrize("name", list(FIXTURES))
def test_cyclic_acts_indecomposable(name):
    S = fixture(name)
    for rho in all_right_congruences(S):
        assert is_indecomposable(cyclic_act(S, rho))


def test_one_step_joined(rz3):
    R = regular_act(rz3)
    a, b = R.index("a"), R.index("b")
    s, t = one_step_joined(R, a, b)
    assert R.action[a][s] == R.action[b][t]
    for x in R:
        assert one_step_joined(R, x, x) == (0, 0)


def test_graph_components_match_definition():
    for S in monoids_up_to(3):
        for A in acts_up_to(S, 4):
            d = components(A)
            assert sorted(frozenset(p) for p in d.parts()) == sorted(chain_linked_components(A))
            assert d.component_of == chain_components(A)[0]


def test_components_are_closed_and_indecomposable():
    for S in monoids_up_to(3):
        for A in acts_up_to(S, 4):
            for sub in components(A).subacts():
                assert all(v in sub.elems for x in sub.elems for v in A.action[x])
                assert is_indecomposable_subact(sub)
                assert is_indecomposable(sub.as_act()[0])


def test_indecomposable_subact(lz3):
    R = regular_act(lz3)
    assert not is_indecomposable_subact(Subact(R, frozenset({1, 2})))
    assert is_indecomposable_subact(Subact(R, frozenset({1})))


def test_dot_output(lz3):
    text = to_dot(theta2(lz3))
    assert text.startswith("digraph") and text.count("cluster_") == 2
    assert "->" in text
