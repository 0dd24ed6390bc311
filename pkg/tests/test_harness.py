from __future__ import annotations

import time

import pytest

from actlab import decomposition, harness, homs, monoid
from actlab.act import ActHom
from actlab.errors import UnknownClaim
from actlab.harness import COUNTEREXAMPLE, PARTIAL, VERIFIED, Bounds, Report


@pytest.fixture(autouse=True)
def fresh_caches():
    harness.clear_caches()
    yield
    harness.clear_caches()


def test_registry():
    claims = harness.claim_registry()
    assert len(claims) == 25
    assert len({c.id for c in claims}) == 25
    assert harness.lookup("P8").checker is harness.check_p8
    assert harness.lookup("p8").id == "P8"
    with pytest.raises(UnknownClaim):
        harness.lookup("ZZ")


def test_verify_examples():
    r = harness.verify("P8", max_monoid=3, alphabet=2)
    assert r.status == VERIFIED and r.instances == 10
    r = harness.verify("T1", max_monoid=3, max_act=3)
    assert r.status == VERIFIED and r.witness is None


def test_order_one_is_trivially_verified():
    reports = harness.verify_all(max_monoid=1, max_act=1)
    assert [r.claim for r in reports] == [c.id for c in harness.CLAIMS]
    assert {r.status for r in reports} <= {VERIFIED, PARTIAL}


def test_small_bounds_are_quick():
    start = time.perf_counter()
    reports = harness.verify_all(max_monoid=2, max_act=2)
    assert time.perf_counter() - start < 30
    assert len(reports) == 25


def test_report_json_round_trip():
    r = harness.verify("C4", max_monoid=2, max_act=2)
    again = Report.from_json(r.to_json())
    assert again == r


def test_partial_claims():
    assert harness.verify("T2", max_monoid=2, max_act=2).status == PARTIAL
    assert harness.verify("TC", max_monoid=2, max_act=2).status == PARTIAL


def test_coproduct_with_envelope_counterexample_replays():
    r = harness.verify("QI", max_monoid=2, max_act=2)
    assert r.status == COUNTEREXAMPLE
    assert r.witness["monoid"]["name"] == "S2_0"
    assert harness.replay(r)


def test_bound_artefact_is_escalated():
    """A non-injective indecomposable act over S4_6 first appears at size 7."""
    r = harness.verify("RM", max_monoid=4, max_act=4)
    assert r.status == VERIFIED
    assert r.details["escalated"] == {"S4_6": 7}


def _inverted_left_reversible(orig):
    return lambda S: not orig(S)


def _inverted_one_step(orig):
    def f(A, x, y):
        return None if orig(A, x, y) is not None else (0, 0)
    return f


def _inverted_extension(orig):
    def f(problem, guard=homs.DEFAULT_NODE_GUARD):
        if orig(problem, guard) is not None:
            return None
        return ActHom(problem.ambient, problem.target, (0,) * problem.ambient.size)
    return f


@pytest.mark.parametrize("module, attr, mutate, expected", [
    (monoid, "is_left_reversible", _inverted_left_reversible, "P6"),
    (decomposition, "one_step_joined", _inverted_one_step, "P6"),
    (homs, "extend_hom", _inverted_extension, "L2"),
])
def test_mutations_are_detected(monkeypatch, module, attr, mutate, expected):
    monkeypatch.setattr(module, attr, mutate(getattr(module, attr)))
    r = harness.verify(expected, max_monoid=3, max_act=3)
    assert r.status == COUNTEREXAMPLE
    assert harness.replay(r)


def test_replay_needs_a_witness():
    r = harness.verify("C4", max_monoid=2, max_act=2)
    assert not harness.replay(r)


def test_bounds_override():
    b = Bounds().override(max_monoid=2, max_act=None)
    assert b.max_monoid == 2 and b.max_act == Bounds().max_act
