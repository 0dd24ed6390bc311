from __future__ import annotations

import pytest

from actlab.act import Subact, acts_up_to, coproduct, cyclic_act, regular_act, subacts, validate_act, zero_act, zeros
from actlab.errors import MixedMonoids, SizeGuardExceeded
from actlab.homs import (ExtensionProblem, are_isomorphic, extend_hom, homomorphisms, is_retract, monomorphisms,
                         restrictions, subact_homs)
from actlab.monoid import discrete_congruence, monoids_up_to
from conftest import theta2
from oracles import brute_homs


def test_counts_from_simple_rules(lz3, c2):
    for S in (lz3, c2):
        for B in acts_up_to(S, 3):
            assert len(list(homomorphisms(zero_act(S), B))) == len(zeros(B))
            assert len(list(homomorphisms(regular_act(S), B))) == B.size
    assert len(list(homomorphisms(theta2(lz3), zero_act(lz3)))) == 1


def test_monomorphisms(lz3, c2):
    assert len(list(monomorphisms(zero_act(lz3), theta2(lz3)))) == 2
    assert len(list(monomorphisms(theta2(lz3), zero_act(lz3)))) == 0
    assert len(list(monomorphisms(regular_act(c2), regular_act(c2)))) == 2


def test_hom_search_matches_brute_force():
    for S in monoids_up_to(3):
        pool = acts_up_to(S, 3)
        for A in pool:
            for B in pool:
                ours = sorted(h.map for h in homomorphisms(A, B))
                assert ours == sorted(brute_homs(A, B))
                monos = sorted(h.map for h in monomorphisms(A, B))
                assert monos == [f for f in sorted(brute_homs(A, B)) if len(set(f)) == len(f)]


def test_every_hom_is_equivariant(lz3):
    for A in acts_up_to(lz3, 3):
        for B in acts_up_to(lz3, 3):
            for h in homomorphisms(A, B):
                assert h.is_equivariant()


def test_extension_identity(lz3):
    R = regular_act(lz3)
    whole = Subact(R, frozenset(R))
    p = ExtensionProblem.make(whole, list(R), R)
    assert extend_hom(p).map == tuple(R)


def test_extension_absent_over_lz3(lz3):
    R = regular_act(lz3)
    T = theta2(lz3)
    sub = Subact(R, frozenset({1, 2}))
    p = ExtensionProblem.make(sub, {1: 0, 2: 1}, T)
    assert extend_hom(p) is None


def test_extension_to_zero_for_missing_components(lz3):
    T = theta2(lz3)
    B, _ = coproduct([regular_act(lz3), regular_act(lz3)])
    first = Subact(B, frozenset({0, 1, 2}))
    p = ExtensionProblem.make(first, {0: 0, 1: 0, 2: 0}, T)
    g = extend_hom(p)
    assert g is not None and g.is_equivariant()


def test_extension_matches_restrictions():
    for S in monoids_up_to(2):
        pool = acts_up_to(S, 3)
        for B in pool:
            for Q in pool:
                for C in subacts(B):
                    restr = restrictions(B, Q, C)
                    for vals in subact_homs(C, Q):
                        found = extend_hom(ExtensionProblem.make(C, vals, Q))
                        assert (found is not None) == (vals in restr)


def test_malformed_problem(lz3):
    R = regular_act(lz3)
    sub = Subact(R, frozenset({1, 2}))
    with pytest.raises(ValueError):
        extend_hom(ExtensionProblem.make(sub, {1: 0, 2: 1}, regular_act(lz3)))


def test_retracts(lz3):
    R = regular_act(lz3)
    assert is_retract(Subact(R, frozenset(R))).map == tuple(R)
    T = theta2(lz3)
    assert is_retract(Subact(T, frozenset({0}))) is not None
    # the retraction onto Q1 ∪ {θ} from a two-part act with a zero
    B, _ = coproduct([regular_act(lz3), zero_act(lz3)])
    g = is_retract(Subact(B, frozenset({0, 1, 2})))
    assert g is not None


def test_isomorphism(lz3):
    assert are_isomorphic(cyclic_act(lz3, discrete_congruence(lz3)), regular_act(lz3))
    assert not are_isomorphic(zero_act(lz3), theta2(lz3))
    R = regular_act(lz3)
    perm = [2, 0, 1]
    relabelled = validate_act(lz3, ["p", "q", "r"],
                              [[perm[R.action[x][s]] for s in lz3] for x in sorted(R, key=lambda x: perm[x])])
    assert are_isomorphic(R, relabelled)


def test_node_guard(lz3):
    with pytest.raises(SizeGuardExceeded):
        list(homomorphisms(regular_act(lz3), theta2(lz3), guard=1))


def test_mixed_monoids(lz3, c2):
    with pytest.raises(MixedMonoids):
        list(homomorphisms(regular_act(lz3), regular_act(c2)))
