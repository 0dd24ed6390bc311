from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from actlab import injectivity as inj
from actlab.act import acts_up_to, canonical_form, coproduct, validate_act
from actlab.decomposition import chain_components, components
from actlab.homs import homomorphisms
from actlab.monoid import are_isomorphic_monoids, canonical_table, enumerate_monoids, monoids_up_to, validate_monoid
from actlab.textio import Workspace, parse_act, print_act

MONOIDS = monoids_up_to(4)
SMALL = monoids_up_to(3)


def relabel_monoid(S, perm):
    p = (0,) + tuple(perm)
    inv = [0] * S.size
    for i, v in enumerate(p):
        inv[v] = i
    table = [[p[S.mul[inv[a]][inv[b]]] for b in S] for a in S]
    return validate_monoid([S.elems[inv[a]] for a in S], table, 0, S.name)


@st.composite
def relabelled_monoid(draw):
    S = draw(st.sampled_from(MONOIDS))
    perm = draw(st.permutations(list(range(1, S.size))))
    return S, relabel_monoid(S, perm)


@given(relabelled_monoid())
def test_relabelled_monoid_matches_exactly_one_class(pair):
    S, T = pair
    matches = [U for U in enumerate_monoids(S.size) if are_isomorphic_monoids(U, T)]
    assert matches == [S]
    assert canonical_table(T.mul) == canonical_table(S.mul)


@st.composite
def act_and_perm(draw, monoids=SMALL, size=4):
    S = draw(st.sampled_from(monoids))
    A = draw(st.sampled_from(acts_up_to(S, size)))
    perm = draw(st.permutations(list(range(A.size))))
    return A, perm


def relabel_act(A, perm):
    inv = [0] * A.size
    for i, v in enumerate(perm):
        inv[v] = i
    table = [[perm[A.action[inv[x]][s]] for s in A.monoid] for x in A]
    return validate_act(A.monoid, [A.elems[inv[x]] for x in A], table, A.name)


@given(act_and_perm())
def test_relabelled_act_has_same_canonical_form(pair):
    A, perm = pair
    assert canonical_form(relabel_act(A, perm)) == canonical_form(A)


@settings(max_examples=60)
@given(act_and_perm())
def test_verdicts_are_isomorphism_invariant(pair):
    A, perm = pair
    B = relabel_act(A, perm)
    for notion in ("injective", "weak", "inc", "ind", "cc", "quasi"):
        assert inj.check(notion, A).value == inj.check(notion, B).value


@given(act_and_perm())
def test_components_partition_and_match_chains(pair):
    A, _ = pair
    d = components(A)
    parts = d.parts()
    assert sorted(x for p in parts for x in p) == list(A)
    assert d.component_of == chain_components(A)[0]


@given(act_and_perm(), act_and_perm())
def test_coproduct_components_add_up(p1, p2):
    A, B = p1[0], p2[0]
    if A.monoid != B.monoid:
        return
    U, _ = coproduct([A, B])
    assert components(U).component_count == components(A).component_count + components(B).component_count


@settings(max_examples=40)
@given(act_and_perm(size=3), act_and_perm(size=3), act_and_perm(size=3))
def test_hom_composition_is_a_hom(p1, p2, p3):
    A, B, C = p1[0], p2[0], p3[0]
    if not (A.monoid == B.monoid == C.monoid):
        return
    gs = list(homomorphisms(B, C))
    for f in homomorphisms(A, B):
        for g in gs:
            comp = tuple(g.map[f.map[x]] for x in A)
            assert all(comp[A.action[x][s]] == C.action[comp[x]][s] for x in A for s in A.monoid)


@given(act_and_perm())
def test_print_parse_round_trip(pair):
    A, perm = pair
    B = relabel_act(A, perm)
    ws = Workspace()
    ws.add_monoid(B.monoid)
    C = parse_act(print_act(B), ws)
    assert (C.elems, C.action) == (B.elems, B.action)


@settings(max_examples=60)
@given(act_and_perm())
def test_injective_implies_weaker_notions(pair):
    A, _ = pair
    if inj.is_injective(A):
        assert inj.is_ind_injective(A) and inj.is_inc_injective(A) and inj.is_quasi_injective(A)
        assert inj.is_weakly_injective(A) and inj.is_cc_injective(A)
