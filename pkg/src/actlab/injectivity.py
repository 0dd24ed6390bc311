"""Decision procedures for the injectivity notions on finite acts.

Exact procedures exist for injective, weakly, InC, CC, quasi and InD/PInD
injectivity.  C- and pseudo injectivity (and the definitional forms of the
others) are offered as bounded falsifiers that scan every ambient act up to a
size bound; they never report plain ``true``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Optional

from . import homs
from .act import (DEFAULT_SIZE_GUARD, DEFAULT_SUBACT_GUARD, ActHom, FiniteAct, Subact, adjoin_zero, cofree_act,
                  cyclic_act, enumerate_acts, has_zero, regular_act, subact_masks, subacts, _unmask)
from .decomposition import UnionFind, components, is_indecomposable, is_indecomposable_subact
from .errors import EnvelopeNotFound, SizeGuardExceeded
from .homs import ExtensionProblem
from .monoid import FiniteMonoid, all_right_congruences, all_right_ideals

DEFAULT_BOUND = 4


class Truth(str, Enum):
    TRUE = "true"
    FALSE = "false"
    BOUNDED = "true-within-bounds"


@dataclass(frozen=True)
class InjectivityVerdict:
    notion: str
    value: Truth
    witness: Optional[ExtensionProblem] = None
    bound: Optional[int] = None

    def __bool__(self) -> bool:
        return self.value is not Truth.FALSE

    @property
    def holds(self) -> bool:
        return self.value is not Truth.FALSE


def _true(notion: str) -> InjectivityVerdict:
    return InjectivityVerdict(notion, Truth.TRUE)


def _false(notion: str, witness: ExtensionProblem, bound: Optional[int] = None) -> InjectivityVerdict:
    return InjectivityVerdict(notion, Truth.FALSE, witness, bound)


# ---------------------------------------------------------------------------
# test diagrams that only depend on the monoid


@lru_cache(maxsize=None)
def cyclic_diagrams(S: FiniteMonoid) -> tuple[Subact, ...]:
    """Every subact C of every cyclic act S/rho."""
    out = []
    for rho in all_right_congruences(S):
        out.extend(subacts(cyclic_act(S, rho)))
    return tuple(out)


@lru_cache(maxsize=None)
def cyclic_in_cyclic_diagrams(S: FiniteMonoid) -> tuple[Subact, ...]:
    out = []
    for rho in all_right_congruences(S):
        B = cyclic_act(S, rho)
        seen = set()
        for x in B:
            orbit = B.orbit(x)
            if orbit not in seen:
                seen.add(orbit)
                out.append(Subact(B, orbit))
    return tuple(out)


@lru_cache(maxsize=None)
def ideal_diagrams(S: FiniteMonoid) -> tuple[Subact, ...]:
    R = regular_act(S)
    return tuple(Subact(R, I.elems) for I in all_right_ideals(S))


def _first_failure(Q: FiniteAct, diagrams) -> Optional[ExtensionProblem]:
    for C in diagrams:
        for f in homs.subact_homs(C, Q):
            problem = ExtensionProblem(C.owner, C, f, Q)
            if homs.extend_hom(problem) is None:
                return problem
    return None


def zero_witness(Q: FiniteAct, D: Optional[Subact] = None) -> ExtensionProblem:
    """D ⊆ D^θ with the inclusion D -> Q; unextendable whenever Q has no zero."""
    if D is None:
        D = Subact(Q, frozenset(Q))
    act, incl = D.as_act()
    amb = adjoin_zero(act)
    return ExtensionProblem(amb, Subact(amb, frozenset(range(act.size))), incl, Q)


# ---------------------------------------------------------------------------
# exact notions


@lru_cache(maxsize=None)
def is_injective(Q: FiniteAct) -> InjectivityVerdict:
    """A zero plus extension along every inclusion into a cyclic act."""
    if not has_zero(Q):
        return _false("injective", zero_witness(Q))
    bad = _first_failure(Q, cyclic_diagrams(Q.monoid))
    return _true("injective") if bad is None else _false("injective", bad)


@lru_cache(maxsize=None)
def is_inc_injective(Q: FiniteAct) -> InjectivityVerdict:
    bad = _first_failure(Q, cyclic_diagrams(Q.monoid))
    return _true("InC") if bad is None else _false("InC", bad)


@lru_cache(maxsize=None)
def is_weakly_injective(Q: FiniteAct) -> InjectivityVerdict:
    bad = _first_failure(Q, ideal_diagrams(Q.monoid))
    return _true("weakly") if bad is None else _false("weakly", bad)


@lru_cache(maxsize=None)
def is_cc_injective(Q: FiniteAct) -> InjectivityVerdict:
    bad = _first_failure(Q, cyclic_in_cyclic_diagrams(Q.monoid))
    return _true("CC") if bad is None else _false("CC", bad)


@lru_cache(maxsize=None)
def is_quasi_injective(Q: FiniteAct) -> InjectivityVerdict:
    bad = _first_failure(Q, [C for C in subacts(Q)])
    return _true("quasi") if bad is None else _false("quasi", bad)


# ---------------------------------------------------------------------------
# injective extensions and envelopes


def injective_extension(A: FiniteAct, guard: int = DEFAULT_SIZE_GUARD) -> tuple[FiniteAct, ActHom]:
    """Embed A into the cofree act over the labels of A^θ via a ↦ (s ↦ a·s)."""
    labels = adjoin_zero(A).elems
    F = cofree_act(A.monoid, labels, guard)
    k = len(labels)
    n = A.monoid.size

    def index(values) -> int:
        i = 0
        for v in values:
            i = i * k + v
        return i

    emb = tuple(index(A.action[a]) for a in A)
    assert len(set(emb)) == A.size and all(F.action[emb[a]][s] == emb[A.action[a][s]] for a in A for s in range(n))
    return F, ActHom(A, F, emb)


def is_essential_over(E: FiniteAct, base: frozenset[int]) -> bool:
    """Every nontrivial congruence of E identifies two elements of ``base``.

    It suffices to look at principal congruences; the one generated by (x, y)
    is the equivalence closure of {(x·s, y·s)}.
    """
    members = list(E)
    n = E.monoid.size
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if x in base and y in base:
                continue
            uf = UnionFind(E.size)
            rx, ry = E.action[x], E.action[y]
            for s in range(n):
                uf.union(rx[s], ry[s])
            if len({uf.find(b) for b in base}) == len(base):
                return False
    return True


def _maximal_essential(F: FiniteAct, base: frozenset[int], guard: int) -> frozenset[int]:
    """Grow ``base`` greedily to a subact of F that is maximal among essential extensions.

    Any subact between base and an essential extension is again essential,
    so adding one principal subact at a time until nothing fits reaches a
    maximal one.  Candidates are tried in element order.
    """
    current = set(base)
    for v in base:
        current.update(F.action[v])
    checks = 0
    changed = True
    while changed:
        changed = False
        for x in F:
            if x in current:
                continue
            trial = current | set(F.action[x])
            checks += 1
            if checks > guard:
                raise SizeGuardExceeded(f"more than {guard} essentiality checks")
            act, incl = Subact(F, frozenset(trial)).as_act()
            pos = {y: i for i, y in enumerate(incl)}
            if is_essential_over(act, frozenset(pos[b] for b in base)):
                current = trial
                changed = True
    return frozenset(current)


def _envelope_inside(F: FiniteAct, emb: tuple[int, ...], A: FiniteAct, guard: int) -> Optional[tuple[FiniteAct, ActHom]]:
    """A maximal essential extension of emb(A) inside the injective act F (hence injective)."""
    elems = _maximal_essential(F, frozenset(emb), guard)
    E, incl = Subact(F, elems).as_act()
    if not is_injective(E):
        return None
    pos = {x: i for i, x in enumerate(incl)}
    return E, ActHom(A, E, tuple(pos[emb[a]] for a in A))


def injective_envelope(A: FiniteAct, guard: int = DEFAULT_SIZE_GUARD,
                       subact_guard: int = DEFAULT_SUBACT_GUARD) -> tuple[FiniteAct, ActHom]:
    """An injective envelope of A: an injective essential extension.

    Envelopes are unique up to isomorphism over A, so the search may run
    inside any injective act containing A; it tries A itself, then A^θ, then
    the cofree extension.
    """
    if is_injective(A):
        return A, ActHom(A, A, tuple(A))
    if not has_zero(A):
        Az = adjoin_zero(A)
        if is_injective(Az):
            found = _envelope_inside(Az, tuple(A), A, subact_guard)
            if found is not None:
                return found
    F, emb = injective_extension(A, guard)
    found = _envelope_inside(F, emb.map, A, subact_guard)
    if found is None:
        raise EnvelopeNotFound(f"no injective essential extension of {A.name} inside {F.name}")
    return found


# ---------------------------------------------------------------------------
# InD / PInD


def _ind_criterion(Q: FiniteAct, notion: str, guard: int) -> InjectivityVerdict:
    """Every component of Q is fixed pointwise by some hom F -> Q, F injective over Q.

    Indecomposable subacts lie inside components, so components suffice.
    """
    if is_injective(Q):
        return _true(notion)
    if not has_zero(Q):
        first = components(Q).subacts()[0]
        return _false(notion, zero_witness(Q, first))
    F, emb = injective_extension(Q, guard)
    for part in components(Q).parts():
        sub = Subact(F, frozenset(emb.map[x] for x in part))
        values = {emb.map[x]: x for x in part}
        problem = ExtensionProblem.make(sub, values, Q)
        if homs.extend_hom(problem) is None:
            return _false(notion, problem)
    return _true(notion)


@lru_cache(maxsize=None)
def _is_ind_injective(Q: FiniteAct, guard: int) -> InjectivityVerdict:
    return _ind_criterion(Q, "InD", guard)


def is_ind_injective(Q: FiniteAct, guard: int = DEFAULT_SIZE_GUARD) -> InjectivityVerdict:
    return _is_ind_injective(Q, guard)


def is_pind_injective(Q: FiniteAct, guard: int = DEFAULT_SIZE_GUARD) -> InjectivityVerdict:
    v = _is_ind_injective(Q, guard)
    return InjectivityVerdict("PInD", v.value, v.witness, v.bound)


# ---------------------------------------------------------------------------
# bounded falsifiers


def _is_cyclic_subact(C: Subact) -> bool:
    A = C.owner
    return any(A.orbit(x) == C.elems for x in C.elems)


def _any(_: Subact) -> bool:
    return True


@lru_cache(maxsize=None)
def _scan_diagrams(S: FiniteMonoid, n: int, sub_kind: str, indecomposable_ambient: bool) -> tuple[tuple[FiniteAct, tuple[Subact, ...]], ...]:
    sub_ok: Callable[[Subact], bool] = {
        "any": _any,
        "indecomposable": is_indecomposable_subact,
        "cyclic": _is_cyclic_subact,
    }[sub_kind]
    out = []
    for m in range(1, n + 1):
        for B in enumerate_acts(S, m):
            if indecomposable_ambient and not is_indecomposable(B):
                continue
            subs = tuple(C for C in subacts(B) if sub_ok(C))
            if subs:
                out.append((B, subs))
    return tuple(out)


def bounded_scan(Q: FiniteAct, n: int, notion: str, sub_kind: str = "any", mono: bool = False,
                 indecomposable_ambient: bool = False) -> InjectivityVerdict:
    """Search every ambient act B with |B| <= n for a non-extendable diagram.

    Extendability of f: C -> Q is decided by membership in the set of
    restrictions of all homomorphisms B -> Q, independent of ``extend_hom``.
    """
    for B, subs in _scan_diagrams(Q.monoid, n, sub_kind, indecomposable_ambient):
        full = None
        for C in subs:
            maps = list(homs.subact_homs(C, Q, injective=mono))
            if not maps:
                continue
            if full is None:
                full = [tuple(f) for f in homs._solve(B, Q, list(B), {}, False, homs._Guard(homs.DEFAULT_NODE_GUARD))]
            members = C.members()
            restr = {tuple(g[x] for x in members) for g in full}
            for f in maps:
                if f not in restr:
                    return _false(notion, ExtensionProblem(B, C, f, Q), n)
    return InjectivityVerdict(notion, Truth.BOUNDED, None, n)


def ind_injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    return bounded_scan(Q, n, "InD", "indecomposable")


def pind_injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    return bounded_scan(Q, n, "PInD", "indecomposable", mono=True)


def c_injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    return bounded_scan(Q, n, "C", "cyclic")


def pseudo_injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    return bounded_scan(Q, n, "pseudo", "any", mono=True)


def injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    return bounded_scan(Q, n, "injective", "any")


def inc_injective_upto(Q: FiniteAct, n: int = DEFAULT_BOUND) -> InjectivityVerdict:
    """Embeddings into indecomposable ambients of size <= n (the InC definition)."""
    return bounded_scan(Q, n, "InC", "any", indecomposable_ambient=True)


def ind_indecomposable_upto(Q: FiniteAct, n: int = DEFAULT_BOUND, mono: bool = False) -> InjectivityVerdict:
    """Indecomposable subacts of indecomposable ambients only."""
    return bounded_scan(Q, n, "PInD" if mono else "InD", "indecomposable", mono=mono, indecomposable_ambient=True)


@dataclass(frozen=True)
class AbsoluteVerdict:
    monoid: FiniteMonoid
    holds: bool
    bound: int
    act: Optional[FiniteAct] = None
    witness: Optional[ExtensionProblem] = None

    def __bool__(self) -> bool:
        return self.holds


def absolutely_injective_upto(S: FiniteMonoid, n: int = DEFAULT_BOUND) -> AbsoluteVerdict:
    """Every act of size <= n over S is injective."""
    for m in range(1, n + 1):
        for A in enumerate_acts(S, m):
            v = is_injective(A)
            if not v:
                return AbsoluteVerdict(S, False, n, A, v.witness)
    return AbsoluteVerdict(S, True, n)


NOTIONS = ("injective", "weak", "inc", "ind", "pind", "c", "cc", "quasi", "pseudo")


def check(notion: str, Q: FiniteAct, bound: int = DEFAULT_BOUND) -> InjectivityVerdict:
    table = {
        "injective": is_injective,
        "weak": is_weakly_injective,
        "inc": is_inc_injective,
        "ind": is_ind_injective,
        "pind": is_pind_injective,
        "cc": is_cc_injective,
        "quasi": is_quasi_injective,
    }
    if notion in table:
        return table[notion](Q)
    if notion == "c":
        return c_injective_upto(Q, bound)
    if notion == "pseudo":
        return pseudo_injective_upto(Q, bound)
    raise ValueError(f"unknown notion {notion!r}; expected one of {', '.join(NOTIONS)}")


def clear_caches() -> None:
    for fn in (is_injective, is_inc_injective, is_weakly_injective, is_cc_injective, is_quasi_injective,
               _is_ind_injective):
        fn.cache_clear()


def replay(problem: ExtensionProblem) -> bool:
    """True when the witness problem is well formed and still has no extension."""
    return problem.is_well_formed() and homs.extend_hom(problem) is None


def all_subacts_containing(F: FiniteAct, base: frozenset[int], guard: int = DEFAULT_SUBACT_GUARD) -> Iterator[Subact]:
    for m in subact_masks(F, base, guard):
        yield Subact(F, _unmask(m))
