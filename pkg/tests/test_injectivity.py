from __future__ import annotations

import pytest

from actlab import injectivity as inj
from actlab.act import Subact, acts_up_to, adjoin_zero, cofree_act, has_zero, regular_act, subacts, zero_act
from actlab.fixtures import FIXTURES, fixture
from actlab.injectivity import Truth
from actlab.monoid import monoids_up_to
from conftest import theta2
from oracles import definitional_injective_upto, essential_by_congruences


@pytest.mark.parametrize("name", list(FIXTURES))
def test_terminal_act_is_injective(name):
    S = fixture(name)
    Z = zero_act(S)
    for check in (inj.is_injective, inj.is_weakly_injective, inj.is_inc_injective, inj.is_ind_injective,
                  inj.is_quasi_injective, inj.is_cc_injective):
        assert check(Z).value is Truth.TRUE
    assert inj.ind_injective_upto(Z, 4)


def test_theta2_over_lz3(lz3):
    T = theta2(lz3)
    v = inj.is_injective(T)
    assert v.value is Truth.FALSE
    w = v.witness
    assert w.ambient.size == 3 and sorted(w.sub.elems) == [1, 2]
    assert inj.replay(w)
    assert not inj.is_weakly_injective(T)
    assert inj.replay(inj.is_weakly_injective(T).witness)
    assert inj.is_quasi_injective(T).value is Truth.TRUE
    assert inj.is_ind_injective(T).value is Truth.TRUE
    assert inj.is_pind_injective(T).value is Truth.TRUE
    assert inj.ind_injective_upto(T, 4).value is Truth.BOUNDED
    assert inj.injective_upto(T, 3).value is Truth.FALSE


def test_theta2_over_c2(c2):
    assert inj.is_injective(theta2(c2)).value is Truth.TRUE


def test_regular_c2_has_no_zero(c2):
    R = regular_act(c2)
    assert not inj.is_ind_injective(R)
    assert not inj.is_injective(R)
    assert inj.replay(inj.is_ind_injective(R).witness)


def test_injective_matches_definition_on_small_monoids():
    """Baer-style verdicts agree with brute force over every ambient of size <= 3."""
    for S in monoids_up_to(2):
        ambients = acts_up_to(S, 3)
        for Q in acts_up_to(S, 3):
            exact = bool(inj.is_injective(Q))
            assert definitional_injective_upto(Q, ambients) == exact, (S.name, Q.elems, Q.action)


def test_injective_witnesses_replay():
    for S in monoids_up_to(3):
        for Q in acts_up_to(S, 3):
            for v in (inj.is_injective(Q), inj.is_weakly_injective(Q), inj.is_inc_injective(Q),
                      inj.is_quasi_injective(Q), inj.is_ind_injective(Q)):
                if v.value is Truth.FALSE:
                    assert inj.replay(v.witness)


def test_injective_extension(lz3, c2):
    F, e = inj.injective_extension(zero_act(lz3))
    assert F.size == 1
    F, e = inj.injective_extension(theta2(lz3))
    assert F.size == 8 and inj.is_injective(F)
    assert {F.elems[x] for x in e.map} == {"[θ_1,θ_1,θ_1]", "[θ_2,θ_2,θ_2]"}
    F, e = inj.injective_extension(regular_act(c2))
    assert F.size == 9 and e.is_injective() and e.is_equivariant()


def _minimal_injective_essential(F, base):
    best = None
    for sub in subacts(F):
        if not base <= sub.elems:
            continue
        act, incl = sub.as_act()
        pos = {x: i for i, x in enumerate(incl)}
        if inj.is_injective(act) and essential_by_congruences(act, frozenset(pos[b] for b in base)):
            if best is None or sub.size < best:
                best = sub.size
    return best


def test_envelope_of_theta2_is_minimal(lz3):
    T = theta2(lz3)
    E, emb = inj.injective_envelope(T)
    assert inj.is_injective(E)
    assert essential_by_congruences(E, frozenset(emb.map))
    F, e = inj.injective_extension(T)
    assert E.size == _minimal_injective_essential(F, frozenset(e.map))


def test_envelopes_are_injective_and_essential():
    for S in monoids_up_to(3):
        for A in acts_up_to(S, 3):
            E, emb = inj.injective_envelope(A)
            assert emb.is_injective() and emb.is_equivariant()
            assert inj.is_injective(E)
            assert essential_by_congruences(E, frozenset(emb.map))
            if inj.is_injective(A):
                assert E.size == A.size


def test_envelope_sizes_against_exhaustive_search():
    for S in monoids_up_to(2):
        for A in acts_up_to(S, 3):
            E, _ = inj.injective_envelope(A)
            F, e = inj.injective_extension(A)
            assert E.size == _minimal_injective_essential(F, frozenset(e.map))


def test_ind_criterion_matches_bounded_falsifier():
    for S in monoids_up_to(3):
        for Q in acts_up_to(S, 3):
            assert bool(inj.is_ind_injective(Q)) == bool(inj.ind_injective_upto(Q, 4))
            assert bool(inj.is_pind_injective(Q)) == bool(inj.pind_injective_upto(Q, 4))


def test_ind_requires_zero():
    for S in monoids_up_to(3):
        for Q in acts_up_to(S, 3):
            if inj.is_ind_injective(Q):
                assert has_zero(Q)


def test_implications_small():
    for S in monoids_up_to(3):
        for Q in acts_up_to(S, 3):
            i = bool(inj.is_injective(Q))
            if i:
                assert inj.is_ind_injective(Q) and inj.is_inc_injective(Q) and inj.is_quasi_injective(Q)
            if inj.is_inc_injective(Q):
                assert inj.is_weakly_injective(Q) and inj.is_cc_injective(Q)


def test_bounded_checks_never_claim_truth(lz3):
    for fn in (inj.c_injective_upto, inj.pseudo_injective_upto, inj.ind_injective_upto):
        assert fn(zero_act(lz3), 3).value is Truth.BOUNDED


def test_check_dispatch(lz3):
    T = theta2(lz3)
    assert inj.check("quasi", T).value is Truth.TRUE
    assert inj.check("pseudo", T, 3).value is Truth.FALSE
    with pytest.raises(ValueError):
        inj.check("nope", T)


def test_absolute_injectivity(t1, lz3, c2):
    assert inj.absolutely_injective_upto(t1, 4)
    verdict = inj.absolutely_injective_upto(lz3, 3)
    assert not verdict and verdict.witness is not None
    assert not inj.absolutely_injective_upto(c2, 3)


def test_inc_equals_zero_adjunction_injectivity():
    for S in monoids_up_to(3):
        for Q in acts_up_to(S, 3):
            assert bool(inj.is_inc_injective(Q)) == bool(inj.is_injective(adjoin_zero(Q)))


def test_cofree_acts_are_injective(lz3, n2):
    assert inj.is_injective(cofree_act(lz3, 2))
    assert inj.is_injective(cofree_act(n2, 3))


def test_ind_disagreements_at_order_four_are_bound_limited():
    # Size-4 acts whose separating ambient needs more than 4 points: the
    # bounded falsifier misses them at 4 but agrees with the criterion at |Q|+2.
    leftover = []
    for S in monoids_up_to(4):
        if S.size < 4:
            continue
        for Q in acts_up_to(S, 4):
            exact = bool(inj.is_ind_injective(Q))
            if exact != bool(inj.ind_injective_upto(Q, 4)):
                assert not exact
                if inj.ind_injective_upto(Q, Q.size + 2):
                    leftover.append(Q.name)
    assert leftover == []
