"""Bounded, exhaustive checking of the structural theorems about acts.

Each claim has a per-monoid checker.  ``verify`` runs the checker over every
monoid up to the order bound (one per isomorphism class) and stops at the
first disagreement, which becomes a replayable witness.  A verified report
only ever means "no counterexample within these bounds".
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Iterable, Optional

from . import decomposition as dec
from . import homs
from . import injectivity as inj
from . import monoid as mon
from .act import (ActHom, FiniteAct, Subact, acts_up_to, adjoin_zero, cofree_act, coproduct, enumerate_acts, has_zero, product,
                  regular_act, right_ideal_act, subacts, zero_act, zeros)
from .errors import ActlabError, SizeGuardExceeded, UnknownClaim
from .homs import ExtensionProblem
from .monoid import FiniteMonoid
from .textio import act_to_json, monoid_from_json, monoid_to_json

VERIFIED = "verified-within-bounds"
COUNTEREXAMPLE = "counterexample"
PARTIAL = "partial"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Bounds:
    max_monoid: int = 4
    max_act: int = 4
    codomain: int = 4
    alphabet: int = 2
    escalate: int = 7
    recheck: int = 4

    def override(self, **kw) -> "Bounds":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


@dataclass
class Outcome:
    instances: int = 0
    skipped: int = 0
    failure: Optional[dict] = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    bounds: Bounds
    checker: Callable[[FiniteMonoid, Bounds], Outcome]
    partial: bool = False


@dataclass
class Report:
    claim: str
    bounds: dict
    status: str
    witness: Optional[dict]
    instances: int
    skipped: int
    elapsed_ms: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


# ---------------------------------------------------------------------------
# witness helpers


def problem_to_json(p: ExtensionProblem) -> dict:
    return {
        "ambient": act_to_json(p.ambient),
        "sub": [p.ambient.elems[x] for x in p.sub.members()],
        "map": {p.ambient.elems[x]: p.target.elems[y] for x, y in p.partial_map().items()},
        "target": act_to_json(p.target),
    }


def _failure(note: str, clauses: Optional[dict] = None, acts: Iterable[FiniteAct] = (),
             problem: Optional[ExtensionProblem] = None) -> dict:
    out: dict = {"note": note}
    if clauses is not None:
        out["clauses"] = {k: bool(v) for k, v in clauses.items()}
    acts = list(acts)
    if acts:
        out["acts"] = [act_to_json(a) for a in acts]
    if problem is not None:
        out["problem"] = problem_to_json(problem)
    return out


def _disagree(clauses: dict) -> bool:
    return len({bool(v) for v in clauses.values()}) > 1


def _first(items: Iterable, pred: Callable) -> Optional[object]:
    for x in items:
        if pred(x):
            return x
    return None


def _pool(S: FiniteMonoid, b: Bounds) -> list[FiniteAct]:
    return acts_up_to(S, b.max_act)


def _pair_pool(S: FiniteMonoid, b: Bounds, cap: int) -> list[FiniteAct]:
    return acts_up_to(S, min(b.max_act, cap))


def _as_act(Q: FiniteAct, elems: Iterable[int]) -> FiniteAct:
    return Subact(Q, frozenset(elems)).as_act()[0]


def _component_acts(Q: FiniteAct) -> list[FiniteAct]:
    return [_as_act(Q, p) for p in dec.components(Q).parts()]


def _left_reversible(S: FiniteMonoid) -> bool:
    return mon.is_left_reversible(S)


# ---------------------------------------------------------------------------
# decomposition and left reversibility


def check_r1(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for A in _pool(S, b):
        out.instances += 1
        d = dec.components(A)
        chain, _ = dec.chain_components(A)
        if d.component_of != chain:
            return replace(out, failure=_failure("union-find and chain closure disagree", acts=[A]))
        for sub in d.subacts():
            if not (all(v in sub.elems for x in sub.elems for v in A.action[x]) and dec.is_indecomposable_subact(sub)):
                return replace(out, failure=_failure("a component is not a closed indecomposable subact", acts=[A]))
    small = acts_up_to(S, min(b.max_act, 3))
    for A in small:
        if not dec.is_indecomposable(A):
            continue
        for B in small:
            for h in homs.homomorphisms(A, B):
                out.instances += 1
                if not dec.is_indecomposable_subact(h.image()):
                    return replace(out, failure=_failure("decomposable image of an indecomposable act", acts=[A, B]))
    return out


def _joined(A: FiniteAct, x: int, y: int) -> bool:
    return dec.one_step_joined(A, x, y) is not None


def check_p6(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    lr = _left_reversible(S)
    ideals = [I.elems for I in mon.all_right_ideals(S)]
    R = regular_act(S)
    clauses = {
        "left_reversible": lr,
        "right_ideals_pairwise_meet": all(I & J for I, J in itertools.combinations(ideals, 2)),
        "regular_act_one_step_connected": all(_joined(R, x, y) for x in R for y in R),
    }
    out.instances += 1
    if _disagree(clauses):
        return replace(out, failure=_failure("left reversibility characterisations disagree", clauses))
    for A in _pool(S, b) + [R]:
        out.instances += 1
        comp = dec.components(A).component_of
        pairs = [(x, y) for x in A for y in A if comp[x] == comp[y]]
        unjoined = _first(pairs, lambda p: not _joined(A, *p))
        if unjoined is not None and lr:
            c = {"left_reversible": lr, "same_component_pairs_one_step_joined": False}
            return replace(out, failure=_failure("same-component pair needs a longer chain", c, [A]))
        if lr:
            all_joined = all(_joined(A, x, y) for x in A for y in A)
            c = {"indecomposable": dec.is_indecomposable(A), "all_pairs_one_step_joined": all_joined}
            if _disagree(c):
                return replace(out, failure=_failure("indecomposability and one-step joins disagree", c, [A]))
    return out


def _subacts_of_indecomposables_indecomposable(acts: Iterable[FiniteAct]) -> tuple[bool, Optional[FiniteAct]]:
    for A in acts:
        if not dec.is_indecomposable(A):
            continue
        for C in subacts(A):
            if not dec.is_indecomposable_subact(C):
                return False, A
    return True, None


def check_p7(S: FiniteMonoid, b: Bounds) -> Outcome:
    pool = _pool(S, b) + [regular_act(S)]
    ok, bad = _subacts_of_indecomposables_indecomposable(pool)
    clauses = {"subacts_of_indecomposables_indecomposable": ok, "left_reversible": _left_reversible(S)}
    out = Outcome(instances=len(pool))
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses, [bad] if bad else [])
    return out


def check_p8(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    decomposable = []
    for k in range(2, b.alphabet + 1):
        try:
            F = cofree_act(S, k)
        except SizeGuardExceeded:
            out.skipped += 1
            continue
        out.instances += 1
        decomposable.append(not dec.is_indecomposable(F))
    if not decomposable:
        return out
    clauses = {
        "all_nonzero_cofree_decomposable": all(decomposable),
        "some_nonzero_cofree_decomposable": any(decomposable),
        "left_reversible": _left_reversible(S),
    }
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses)
    return out


# ---------------------------------------------------------------------------
# InC-injectivity


def _splits(Q: FiniteAct) -> Iterable[tuple[frozenset[int], frozenset[int]]]:
    parts = dec.components(Q).parts()
    k = len(parts)
    for mask in range(1, (1 << k) - 1):
        left = frozenset(x for i in range(k) if mask >> i & 1 for x in parts[i])
        yield left, frozenset(Q) - left


def check_l2(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        if not has_zero(Q):
            continue
        zq = zeros(Q)
        for Q1, _ in _splits(Q):
            out.instances += 1
            z1 = zq & Q1
            theta = min(z1) if z1 else min(zq)
            target = Q1 | {theta}
            f = tuple(x if x in target else theta for x in Q)
            sub = Subact(Q, frozenset(target))
            ok = ActHom(Q, Q, f).is_equivariant() and all(f[x] == x for x in target)
            if not ok or homs.is_retract(sub) is None:
                note = "retraction onto Q1^θ fails"
                return replace(out, failure=_failure(note, {"construction_ok": ok, "retract_found": False}, [Q]))
    return out


def check_l3(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        if dec.components(Q).component_count < 2 or not inj.is_injective(Q):
            continue
        for Q1, Q2 in _splits(Q):
            out.instances += 1
            A1 = _as_act(Q, Q1)
            if not inj.is_injective(adjoin_zero(A1)):
                return replace(out, failure=_failure("Q1^θ not injective", {"Q_injective": True, "Q1_theta_injective": False}, [Q, A1]))
            if not (inj.is_injective(A1) or inj.is_injective(_as_act(Q, Q2))):
                return replace(out, failure=_failure("neither summand injective", {"Q_injective": True, "one_summand_injective": False}, [Q]))
    return out


def check_t1(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        out.instances += 1
        c = {"InC": inj.is_inc_injective(Q), "zero_adjoined_injective": inj.is_injective(adjoin_zero(Q))}
        if _disagree(c):
            return replace(out, failure=_failure("clauses disagree", c, [Q]))
    return out


def check_c4(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        out.instances += 1
        if inj.is_inc_injective(Q) and not inj.is_weakly_injective(Q):
            v = inj.is_weakly_injective(Q)
            return replace(out, failure=_failure("InC but not weakly injective", {"InC": True, "weakly": False}, [Q], v.witness))
    return out


def check_c5(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        out.instances += 1
        cyclic = inj.is_inc_injective(Q)
        definitional = inj.inc_injective_upto(Q, b.codomain)
        c = {"cyclic_ambients": cyclic, "indecomposable_ambients_within_bound": definitional}
        if cyclic and not definitional:
            return replace(out, failure=_failure("bounded counterexample to the cyclic criterion", c, [Q], definitional.witness))
        if not cyclic and definitional and b.codomain >= S.size:
            return replace(out, failure=_failure("cyclic witness missed by the bounded scan", c, [Q], cyclic.witness))
    return out


def _retract_subacts(Q: FiniteAct) -> Iterable[Subact]:
    for R in subacts(Q):
        if R.size < Q.size and homs.is_retract(R) is not None:
            yield R


def check_pc1(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        if not inj.is_inc_injective(Q):
            continue
        for R in _retract_subacts(Q):
            out.instances += 1
            if not inj.is_inc_injective(R.as_act()[0]):
                return replace(out, failure=_failure("retract of InC act is not InC", {"retract_InC": False}, [Q]))
    small = [Q for Q in _pair_pool(S, b, 3) if inj.is_inc_injective(Q)]
    all_closed = True
    bad = None
    for A, B in itertools.combinations_with_replacement(small, 2):
        out.instances += 1
        U, _ = coproduct([A, B])
        if not inj.is_inc_injective(U):
            all_closed, bad = False, U
            break
    c = {"coproducts_of_InC_are_InC": all_closed, "left_reversible": _left_reversible(S)}
    if _disagree(c):
        out.failure = _failure("clauses disagree", c, [bad] if bad else [])
    return out


def _cofree_pool(S: FiniteMonoid, b: Bounds, out: Outcome) -> list[FiniteAct]:
    found = []
    for k in range(2, b.alphabet + 1):
        try:
            found.append(cofree_act(S, k))
        except SizeGuardExceeded:
            out.skipped += 1
    return found


def check_p4(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    pool = _pool(S, b)
    out.instances += len(pool)
    injective = [Q for Q in pool if inj.is_injective(Q)]
    small = [Q for Q in injective if Q.size <= min(b.max_act, 3)]
    pairs = [coproduct([A, B])[0] for A, B in itertools.combinations_with_replacement(small, 2)]
    out.instances += len(pairs)
    extra = _cofree_pool(S, b, out)
    out.instances += len(extra)
    indecomposable_injective = [Q for Q in injective + [F for F in extra if inj.is_injective(F)] if dec.is_indecomposable(Q)]
    sub_ok, _ = _subacts_of_indecomposables_indecomposable(pool + [regular_act(S)])
    sub_inj_ok, _ = _subacts_of_indecomposables_indecomposable(indecomposable_injective)
    decomposable = [Q for Q in pool if not dec.is_indecomposable(Q)]
    clauses = {
        "i_coproducts_of_injectives_injective": all(inj.is_injective(U) for U in pairs),
        "ii_some_injective_coproduct_injective": any(inj.is_injective(U) for U in pairs),
        "ii_some_injective_coproduct_weakly_injective": any(inj.is_weakly_injective(U) for U in pairs),
        "iii_decomposable_injective_exists": any(inj.is_injective(Q) for Q in decomposable),
        "iii_decomposable_weakly_injective_exists": any(inj.is_weakly_injective(Q) for Q in decomposable),
        "iv_left_reversible": _left_reversible(S),
        "v_subacts_of_indecomposables_indecomposable": sub_ok,
        "vi_subacts_of_indecomposable_injectives_indecomposable": sub_inj_ok,
        "vii_indecomposable_injectives_have_one_zero": all(len(zeros(Q)) == 1 for Q in indecomposable_injective),
    }
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses)
    return out


def _envelope(Q: FiniteAct, out: Outcome) -> Optional[tuple[FiniteAct, ActHom]]:
    try:
        return inj.injective_envelope(Q)
    except SizeGuardExceeded:
        out.skipped += 1
        return None


def check_p5(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    pool = _pool(S, b)
    out.instances += len(pool)
    inc = [Q for Q in pool if inj.is_inc_injective(Q)]
    injective = [Q for Q in pool if inj.is_injective(Q)]
    envelopes_ok = True
    bad_env = None
    for Q in pool:
        if not dec.is_indecomposable(Q):
            continue
        env = _envelope(Q, out)
        if env is not None and not dec.is_indecomposable(env[0]):
            envelopes_ok, bad_env = False, Q
            break
    parts = [C for Q in injective for C in _component_acts(Q)]
    lr = _left_reversible(S)
    clauses = {
        "i_InC_are_InD": all(inj.is_ind_injective(Q) for Q in inc),
        "ii_InC_are_injective": all(inj.is_injective(Q) for Q in inc),
        "iii_envelopes_of_indecomposables_indecomposable": envelopes_ok,
        "iv_injective_indecomposable_iff_one_zero_or_all_indecomposable": (
            all(dec.is_indecomposable(Q) == (len(zeros(Q)) == 1) for Q in injective)
            or all(dec.is_indecomposable(Q) for Q in injective)),
        "v_not_left_reversible_or_left_zero": (not lr) or bool(mon.left_zeros(S)),
        "vi_components_of_injectives_injective": all(inj.is_injective(C) for C in parts),
        "vii_components_of_injectives_InD": all(inj.is_ind_injective(C) for C in parts),
    }
    out.details = {"envelopes_skipped": out.skipped}
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses, [bad_env] if bad_env else [])
    return out


def check_a1(S: FiniteMonoid, b: Bounds) -> Outcome:
    pool = _pool(S, b)
    indecomposable = [Q for Q in pool if dec.is_indecomposable(Q)]
    left = all(inj.is_inc_injective(Q) for Q in indecomposable)
    right = all(inj.is_inc_injective(Q) for Q in pool) or all(inj.is_injective(Q) for Q in indecomposable)
    c = {"indecomposables_InC": left, "all_InC_or_indecomposables_injective": right}
    out = Outcome(instances=len(pool))
    if _disagree(c):
        out.failure = _failure("clauses disagree", c)
    return out


def check_t2(S: FiniteMonoid, b: Bounds) -> Outcome:
    pool = _pool(S, b)
    all_inc = all(inj.is_inc_injective(Q) for Q in pool)
    regular = mon.is_regular(S)
    pri = mon.is_principal_right_ideal_monoid(S)
    out = Outcome(instances=len(pool))
    out.details = {"computable_clauses_checked": ["all acts InC => regular", "all acts InC => principal right ideal monoid"],
                   "all_acts_InC_within_bounds": [S.name] if all_inc else []}
    if all_inc and not (regular and pri):
        c = {"all_acts_InC_within_bounds": all_inc, "regular": regular, "principal_right_ideal_monoid": pri}
        out.failure = _failure("necessary conditions fail", c)
    return out


# ---------------------------------------------------------------------------
# InD-injectivity


def _fixing_hom(E: FiniteAct, emb: ActHom, Q: FiniteAct) -> bool:
    """Each component of Q is fixed by some hom E -> Q along ``emb``."""
    for part in dec.components(Q).parts():
        sub = Subact(E, frozenset(emb.map[x] for x in part))
        problem = ExtensionProblem.make(sub, {emb.map[x]: x for x in part}, Q)
        if homs.extend_hom(problem) is None:
            return False
    return True


def _ambients_retract(Q: FiniteAct, n: int) -> bool:
    """Every ambient B ⊇ Q with |B| <= n maps back onto Q fixing each component of Q."""
    parts = dec.components(Q).parts()
    for B in acts_up_to(Q.monoid, n):
        if B.size < Q.size:
            continue
        monos = list(homs.monomorphisms(Q, B))
        if not monos:
            continue
        back = [g.map for g in homs.homomorphisms(B, Q)]
        for e in monos:
            for part in parts:
                if not any(all(g[e.map[x]] == x for x in part) for g in back):
                    return False
    return True


def check_lc(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in acts_up_to(S, min(b.max_act, 3)):
        out.instances += 1
        crit = bool(inj.is_ind_injective(Q))
        env = _envelope(Q, out)
        c = {"i_InD": crit}
        if env is not None:
            c["iii_envelope_retracts_onto_components"] = _fixing_hom(env[0], env[1], Q)
        bounded = _ambients_retract(Q, b.codomain)
        if _disagree(c) or (crit and not bounded):
            c["ii_every_ambient_within_bound_retracts"] = bounded
            return replace(out, failure=_failure("clauses disagree", c, [Q]))
    return out


def check_ip(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        if not dec.is_indecomposable(Q):
            continue
        out.instances += 1
        pind = bool(inj.is_pind_injective(Q))
        ind = bool(inj.is_ind_injective(Q))
        injective = bool(inj.is_injective(Q))
        if (pind or ind) and not injective:
            return replace(out, failure=_failure("indecomposable InD act is not injective",
                                                 {"PInD": pind, "InD": ind, "injective": injective}, [Q]))
        if pind:
            env = _envelope(Q, out)
            if env is not None and not _fixing_hom(env[0], env[1], Q):
                return replace(out, failure=_failure("no retraction of the envelope onto Q",
                                                     {"PInD": pind, "retraction": False}, [Q]))
    return out


def check_bi(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    n = b.codomain
    for Q in _pool(S, b):
        out.instances += 1
        for mono in (False, True):
            crit = inj.is_pind_injective(Q) if mono else inj.is_ind_injective(Q)
            local = inj.ind_indecomposable_upto(Q, n, mono=mono)
            rhs = has_zero(Q) and bool(local)
            c = {"criterion": bool(crit), "zero_and_indecomposable_ambients": rhs}
            if crit and not rhs:
                return replace(out, failure=_failure("criterion true, bounded counterexample", c, [Q], local.witness))
            if has_zero(Q):
                general = inj.pind_injective_upto(Q, n) if mono else inj.ind_injective_upto(Q, n)
                c2 = {"all_ambients": bool(general), "indecomposable_ambients": bool(local)}
                if _disagree(c2):
                    return replace(out, failure=_failure("ambient restriction changes the verdict", c2, [Q]))
    return out


def check_pc2(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    for Q in _pool(S, b):
        if not inj.is_ind_injective(Q):
            continue
        for R in _retract_subacts(Q):
            out.instances += 1
            if not inj.is_ind_injective(R.as_act()[0]):
                return replace(out, failure=_failure("retract of InD act is not InD", {"retract_InD": False}, [Q]))
    small = _pair_pool(S, b, 2)
    for A, B in itertools.combinations_with_replacement(small, 2):
        out.instances += 1
        both = bool(inj.is_ind_injective(A)) and bool(inj.is_ind_injective(B))
        try:
            P, _ = product([A, B])
            prod_ind = bool(inj.is_ind_injective(P))
        except SizeGuardExceeded:
            out.skipped += 1
            continue
        U, _ = coproduct([A, B])
        c = {"factors_InD": both, "product_InD": prod_ind}
        if _disagree(c):
            return replace(out, failure=_failure("product clause fails", c, [A, B]))
        if both and not inj.is_ind_injective(U):
            return replace(out, failure=_failure("coproduct of InD acts not InD", {"factors_InD": True, "coproduct_InD": False}, [A, B]))
    return out


def check_ct(S: FiniteMonoid, b: Bounds) -> Outcome:
    pool = _pool(S, b)
    transfer = True
    bad = None
    for Q in pool:
        if dec.is_indecomposable(Q) or not inj.is_ind_injective(Q):
            continue
        if not all(inj.is_ind_injective(C) for C in _component_acts(Q)):
            transfer, bad = False, Q
            break
    lr = _left_reversible(S)
    c = {"components_inherit_InD": transfer, "not_left_reversible_or_left_zero": (not lr) or bool(mon.left_zeros(S))}
    out = Outcome(instances=len(pool))
    if _disagree(c):
        out.failure = _failure("clauses disagree", c, [bad] if bad else [])
    return out


def _coproduct_with_envelope(Q: FiniteAct, E: FiniteAct, emb: ActHom) -> ExtensionProblem:
    """Q ↪ E ↪ Q ⊔ E against the first injection Q -> Q ⊔ E."""
    U, (j1, j2) = coproduct([Q, E])
    sub = Subact(U, frozenset(j2[emb.map[a]] for a in Q))
    return ExtensionProblem.make(sub, {j2[emb.map[a]]: j1[a] for a in Q}, U)


def check_qi(S: FiniteMonoid, b: Bounds) -> Outcome:
    """Replay the retraction argument on Q ⊔ E(Q) for every non-injective Q.

    If some f: Q ⊔ E -> Q ⊔ E sends E's copy of Q onto the first summand and
    Q has a zero θ, then collapsing E to θ after f retracts E onto Q, which is
    impossible for non-injective Q.  When Q has no zero that step is not
    available, so the hypothesis itself is tested: Q ⊔ E(Q) must not be
    quasi injective.
    """
    out = Outcome()
    for Q in acts_up_to(S, min(b.max_act, 3)):
        if inj.is_injective(Q):
            continue
        env = _envelope(Q, out)
        if env is None:
            continue
        out.instances += 1
        problem = _coproduct_with_envelope(Q, *env)
        f = homs.extend_hom(problem)
        if f is None:
            continue
        U = problem.ambient
        if has_zero(Q):
            theta = min(zeros(Q))
            first = set(range(Q.size))
            retraction = tuple(f.map[Q.size + e] if f.map[Q.size + e] in first else theta for e in range(env[0].size))
            ok = ActHom(env[0], Q, retraction).is_equivariant() and all(retraction[env[1].map[a]] == a for a in Q)
            c = {"injective": False, "retraction_of_envelope": ok}
            return replace(out, failure=_failure("construction yields a retraction onto a non-injective act", c, [Q, U]))
        quasi = inj.is_quasi_injective(U)
        if quasi:
            c = {"coproduct_with_envelope_quasi_injective": True, "injective": False}
            out.details = {"zero_free_counterexample": True}
            return replace(out, failure=_failure("Q has no zero, Q ⊔ E(Q) is quasi injective, Q is not injective", c, [Q, env[0], U]))
    return out


def check_tq(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    pool = _pool(S, b)
    out.instances += len(pool)
    ind = [Q for Q in pool if inj.is_ind_injective(Q)]
    clauses = {
        "i_InD_are_injective": all(inj.is_injective(Q) for Q in ind),
        "iii_left_reversible": _left_reversible(S),
    }
    T, _ = coproduct([zero_act(S), zero_act(S)])
    env = _envelope(T, out)
    if env is not None:
        W, _ = coproduct([T, env[0]])
        try:
            extra = [W] if inj.is_ind_injective(W) else []
            out.instances += 1
            clauses["ii_InD_are_quasi_injective"] = all(inj.is_quasi_injective(Q) for Q in ind + extra)
        except SizeGuardExceeded:
            out.skipped += 1
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses)
    return out


def check_ti(S: FiniteMonoid, b: Bounds) -> Outcome:
    ideals = mon.all_right_ideals(S)
    acts = [right_ideal_act(I) for I in ideals]
    indec = [(I, A) for I, A in zip(ideals, acts) if dec.is_indecomposable(A)]
    principal = {frozenset(S.mul[a]) for a in S}
    clauses = {
        "i_right_ideals_InD": all(inj.is_ind_injective(A) for A in acts),
        "ii_indecomposable_right_ideals_InD": all(inj.is_ind_injective(A) for _, A in indec),
        "iii_right_ideals_PInD": all(inj.is_pind_injective(A) for A in acts),
        "iv_indecomposable_right_ideals_PInD": all(inj.is_pind_injective(A) for _, A in indec),
        "v_indecomposable_right_ideals_injective": all(inj.is_injective(A) for _, A in indec),
        "vi_regular_self_injective_indecomposables_principal": (
            mon.is_regular(S) and bool(inj.is_injective(regular_act(S)))
            and all(I.elems in principal for I, _ in indec)),
    }
    out = Outcome(instances=len(ideals))
    if _disagree(clauses):
        out.failure = _failure("clauses disagree", clauses)
    return out


def _idempotent_generated_ideals(S: FiniteMonoid) -> bool:
    E = mon.idempotents(S)
    return all(any(e in I.elems and frozenset(S.mul[e]) == I.elems for e in E) for I in mon.all_right_ideals(S))


def _larger_counterexample(S: FiniteMonoid, start: int, stop: int) -> Optional[FiniteAct]:
    """Smallest indecomposable non-injective act with start <= size <= stop."""
    for m in range(start, stop + 1):
        for A in enumerate_acts(S, m):
            if dec.is_indecomposable(A) and not inj.is_injective(A):
                return A
    return None


def _escalate(S: FiniteMonoid, b: Bounds, out: Outcome) -> Optional[FiniteAct]:
    """Look past the act bound when the bounded indecomposable clauses all hold
    but S is not absolutely injective; a non-injective indecomposable act can
    be larger than every decomposable non-injective one."""
    X = _larger_counterexample(S, b.max_act + 1, max(b.escalate, b.max_act))
    if X is not None:
        out.details = {"escalated": {S.name: X.size}}
    return X


def check_tc(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    pool = _pool(S, b)
    out.instances += len(pool)
    indec = [Q for Q in pool if dec.is_indecomposable(Q)]
    absolute = inj.absolutely_injective_upto(S, b.max_act)
    clauses = {
        "i_all_InD": all(inj.is_ind_injective(Q) for Q in pool),
        "ii_indecomposables_InD": all(inj.is_ind_injective(Q) for Q in indec),
        "iii_all_PInD": all(inj.is_pind_injective(Q) for Q in pool),
        "iv_indecomposables_PInD": all(inj.is_pind_injective(Q) for Q in indec),
        "v_indecomposables_injective": all(inj.is_injective(Q) for Q in indec),
        "vi_absolutely_injective": absolute.holds,
    }
    if _disagree(clauses) and not absolute.holds and clauses["v_indecomposables_injective"]:
        X = _escalate(S, b, out)
        if X is not None:
            out.instances += 1
            clauses["v_indecomposables_injective"] = False
            for key in ("i_all_InD", "ii_indecomposables_InD"):
                clauses[key] = clauses[key] and bool(inj.is_ind_injective(X))
            for key in ("iii_all_PInD", "iv_indecomposables_PInD"):
                clauses[key] = clauses[key] and bool(inj.is_pind_injective(X))
    computable_vii = bool(mon.right_zeros(S)) and _idempotent_generated_ideals(S)
    if absolute.holds:
        out.details = {"absolutely_injective_within_bounds": [S.name]}
    if _disagree(clauses):
        acts = [absolute.act] if absolute.act is not None else []
        out.failure = _failure("clauses disagree", clauses, acts, absolute.witness)
    elif absolute.holds and not computable_vii:
        clauses["vii_right_zero_and_idempotent_generated_ideals"] = computable_vii
        out.failure = _failure("absolutely injective but computable parts of (vii) fail", clauses)
    return out


def check_rm(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    pool = _pool(S, b)
    out.instances += len(pool)
    indec = [Q for Q in pool if dec.is_indecomposable(Q)]
    c = {
        "indecomposables_PInD": all(inj.is_pind_injective(Q) for Q in indec),
        "absolutely_injective": inj.absolutely_injective_upto(S, b.max_act).holds,
    }
    if c["indecomposables_PInD"] and not c["absolutely_injective"]:
        X = _escalate(S, b, out)
        if X is not None:
            out.instances += 1
            c["indecomposables_PInD"] = bool(inj.is_pind_injective(X))
    if _disagree(c):
        out.failure = _failure("clauses disagree", c)
    return out


def _monogenic_shape(S: FiniteMonoid) -> Optional[tuple[int, int]]:
    """(index, period) when S is generated by a single element."""
    for g in S:
        powers = [S.identity]
        while True:
            nxt = S.mul[powers[-1]][g]
            if nxt in powers:
                start = powers.index(nxt)
                break
            powers.append(nxt)
        if len(powers) == S.size:
            if start == 0:
                return 0, S.size
            return start, S.size - start
    return None


def check_ex3(S: FiniteMonoid, b: Bounds) -> Outcome:
    out = Outcome()
    shape = _monogenic_shape(S)
    if shape is None:
        return out
    F = cofree_act(S, 2)
    zero_free = []
    for part in dec.components(F).parts():
        out.instances += 1
        A = _as_act(F, part)
        if has_zero(A):
            continue
        zero_free.append(len(part))
        c = {"InC": bool(inj.is_inc_injective(A)), "injective": bool(inj.is_injective(A))}
        if not c["InC"] or c["injective"]:
            return replace(out, failure=_failure("zero-free component is not InC-but-not-injective", c, [A]))
    out.details = {S.name: {"index": shape[0], "period": shape[1],
                            "components": dec.components(F).component_count,
                            "zero_free_component_sizes": zero_free}}
    return out


# ---------------------------------------------------------------------------
# registry


_DEFAULT = Bounds()

CLAIMS: tuple[Claim, ...] = (
    Claim("R1", "Components of an act are the classes of the chain relation; homomorphic images of indecomposable acts are indecomposable.", _DEFAULT, check_r1),
    Claim("P6", "Over a left reversible monoid an act is indecomposable iff any two elements have a common right multiple as = a's'.", _DEFAULT, check_p6),
    Claim("P7", "Subacts of indecomposable acts are indecomposable iff S is left reversible.", _DEFAULT, check_p7),
    Claim("P8", "Some / every non-zero cofree act is decomposable iff S is left reversible.", _DEFAULT, check_p8),
    Claim("L2", "If Q1 ⊔ Q2 has a zero then Q1^θ is a retract of it.", _DEFAULT, check_l2),
    Claim("L3", "If Q1 ⊔ Q2 is injective then Q1^θ is injective.", _DEFAULT, check_l3),
    Claim("T1", "Q is InC-injective iff Q^θ is injective.", _DEFAULT, check_t1),
    Claim("C4", "InC-injective acts are weakly injective.", _DEFAULT, check_c4),
    Claim("C5", "InC-injectivity equals injectivity relative to inclusions into cyclic acts.", _DEFAULT, check_c5),
    Claim("PC1", "Retracts of InC-injective acts are InC-injective; coproducts of InC-injective acts are InC-injective iff S is left reversible.", _DEFAULT, check_pc1),
    Claim("P4", "Seven equivalent conditions for coproducts of injective acts to be injective (left reversibility).", _DEFAULT, check_p4),
    Claim("P5", "Seven equivalent conditions for InC-injective acts to be injective (S not left reversible or with a left zero).", _DEFAULT, check_p5),
    Claim("A1", "All indecomposable acts are InC-injective iff all acts are InC-injective or all indecomposable acts are injective.", _DEFAULT, check_a1),
    Claim("T2", "All acts are InC-injective iff S is a regular principal right ideal monoid with special idempotents (computable part only).", _DEFAULT, check_t2, partial=True),
    Claim("LC", "InD-injectivity equals the envelope retraction criterion on generating sets of indecomposable subacts.", _DEFAULT, check_lc),
    Claim("IP", "Indecomposable PInD- (InD-) injective acts are injective.", _DEFAULT, check_ip),
    Claim("BI", "C is InD-injective iff it has a zero and extends along indecomposable subacts of indecomposable acts.", _DEFAULT, check_bi),
    Claim("PC2", "InD-injectivity passes to retracts, is equivalent for products and their factors, and is preserved by coproducts.", _DEFAULT, check_pc2),
    Claim("CT", "InD-injectivity passes from coproducts to summands iff S is not left reversible or has a left zero.", _DEFAULT, check_ct),
    Claim("QI", "If A ⊔ E(A) is pseudo (quasi) injective then A is injective.", _DEFAULT, check_qi),
    Claim("TQ", "All InD-injective acts are injective iff all are quasi injective iff S is left reversible.", _DEFAULT, check_tq),
    Claim("TI", "Six equivalent conditions on right ideals being InD-/PInD-injective or injective.", _DEFAULT, check_ti),
    Claim("TC", "All (indecomposable) acts InD-/PInD-injective iff all indecomposable acts injective iff S absolutely injective (clause vii computable part only).", _DEFAULT, check_tc, partial=True),
    Claim("RM", "S is absolutely injective iff all indecomposable acts are PInD-injective.", _DEFAULT, check_rm),
    Claim("EX3", "Finite probe: zero-free components of the 2-cofree act over monogenic monoids are InC-injective and not injective.", _DEFAULT, check_ex3),
)

_BY_ID = {c.id: c for c in CLAIMS}


def claim_registry() -> list[Claim]:
    return list(CLAIMS)


def lookup(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id.upper()]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(_BY_ID)}") from None


def clear_caches() -> None:
    inj.clear_caches()
    dec.components.cache_clear()


def _dissolves(claim: Claim, S: FiniteMonoid, b: Bounds) -> bool:
    """True when a disagreement at ``b.max_act`` disappears for some act bound up to ``b.recheck``.

    Clauses quantify over different families, so a separating act for one
    clause can be larger than every act separating the other; such a
    disagreement is an artefact of the bound, not a counterexample.
    """
    for m in range(b.max_act + 1, b.recheck + 1):
        if claim.checker(S, replace(b, max_act=m)).failure is None:
            return True
    return False


def verify(claim_id: str, bounds: Optional[Bounds] = None, **overrides) -> Report:
    claim = lookup(claim_id)
    b = (bounds or claim.bounds).override(**overrides)
    start = time.perf_counter()
    instances = skipped = 0
    witness = None
    details: dict = {}
    status = VERIFIED
    try:
        for S in mon.monoids_up_to(b.max_monoid):
            out = claim.checker(S, b)
            instances += out.instances
            skipped += out.skipped
            for k, v in out.details.items():
                if isinstance(v, list):
                    details.setdefault(k, [])
                    details[k] += [x for x in v if x not in details[k]]
                elif isinstance(v, dict):
                    details.setdefault(k, {}).update(v)
                elif isinstance(v, int) and not isinstance(v, bool):
                    details[k] = details.get(k, 0) + v
                else:
                    details.setdefault(k, v)
            if out.failure is not None and _dissolves(claim, S, b):
                details.setdefault("rechecked", {})[S.name] = "disagreement vanishes at a larger act bound"
                continue
            if out.failure is not None:
                witness = {"monoid": monoid_to_json(S), **out.failure}
                status = COUNTEREXAMPLE
                break
    except ActlabError as exc:
        # a guard or an internal inconsistency; the rest of a verify_all run continues
        status = SKIPPED
        details["error"] = f"{type(exc).__name__}: {exc}"
    if status == VERIFIED and claim.partial:
        status = PARTIAL
        details.setdefault("reason", "'special idempotent' is not defined here; only computable clauses were checked")
    elapsed = int((time.perf_counter() - start) * 1000)
    return Report(claim.id, asdict(b), status, witness, instances, skipped, elapsed, details)


def _verify_one(args: tuple[str, Optional[dict]]) -> Report:
    claim_id, overrides = args
    return verify(claim_id, **(overrides or {}))


def verify_all(jobs: int = 1, **overrides) -> list[Report]:
    """Run every claim; results come back in registry order regardless of ``jobs``."""
    ids = [c.id for c in CLAIMS]
    if jobs <= 1:
        return [_verify_one((i, overrides)) for i in ids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_one, [(i, overrides) for i in ids]))


def replay(report: Report) -> bool:
    """Re-run the claim on the witness monoid and confirm the same disagreement."""
    if report.witness is None:
        return False
    claim = lookup(report.claim)
    S = monoid_from_json(report.witness["monoid"])
    out = claim.checker(S, Bounds(**report.bounds))
    if out.failure is None:
        return False
    return out.failure.get("clauses") == report.witness.get("clauses")
