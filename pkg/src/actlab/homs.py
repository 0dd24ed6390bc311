"""Homomorphism search between finite acts and extension problems.

All searches are backtracking over the elements of the source.  Choosing the
image of x forces the image of every x·s, so a decision fixes a whole cyclic
subact at once; the next element to decide is the one with the fewest
remaining candidate images (ties broken by index), which keeps the order
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .act import ActHom, FiniteAct, Subact, canonical_form, has_zero, is_equivariant, zeros
from .decomposition import components
from .errors import MixedMonoids, SizeGuardExceeded

DEFAULT_NODE_GUARD = 10_000_000
_EXHAUSTED = (-1, [])


class _Guard:
    __slots__ = ("limit", "count")

    def __init__(self, limit: int):
        self.limit = limit
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise SizeGuardExceeded(f"search visited more than {self.limit} nodes")


def _kernel_compatible(A: FiniteAct, B: FiniteAct, x: int) -> list[int]:
    """Targets y with x·s = x·t  =>  y·s = y·t (necessary for f(x) = y)."""
    row = A.action[x]
    first: dict[int, int] = {}
    rep = [first.setdefault(v, s) for s, v in enumerate(row)]
    pairs = [(s, r) for s, r in enumerate(rep) if r != s]
    return [y for y in B if all(B.action[y][s] == B.action[y][r] for s, r in pairs)]


def _solve(A: FiniteAct, B: FiniteAct, domain: Sequence[int], fixed: Mapping[int, int],
           injective: bool, guard: _Guard) -> Iterator[list[int]]:
    """Yield every equivariant map on the closed set ``domain`` extending ``fixed``.

    Maps are lists indexed by A's elements with -1 outside the domain.
    """
    if A.monoid != B.monoid:
        raise MixedMonoids("homomorphisms need acts over the same monoid")
    f = [-1] * A.size
    used: dict[int, int] = {}
    trail: list[int] = []
    actA = A.action
    actB = B.action
    nS = A.monoid.size

    def assign(x: int, y: int) -> bool:
        stack = [(x, y)]
        while stack:
            u, v = stack.pop()
            cur = f[u]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            if injective:
                if v in used:
                    return False
                used[v] = u
            f[u] = v
            trail.append(u)
            ru = actA[u]
            rv = actB[v]
            for s in range(nS):
                stack.append((ru[s], rv[s]))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            u = trail.pop()
            if injective:
                del used[f[u]]
            f[u] = -1

    for x in sorted(fixed):
        if not assign(x, fixed[x]):
            undo(0)
            return
    cand = {x: _kernel_compatible(A, B, x) for x in domain if f[x] < 0}

    def viable(x: int) -> list[int]:
        row = actA[x]
        known = [(s, f[row[s]]) for s in range(nS) if f[row[s]] >= 0]
        out = []
        for y in cand[x]:
            if injective and y in used:
                continue
            ry = actB[y]
            if all(ry[s] == v for s, v in known):
                out.append(y)
        return out

    def select() -> Optional[tuple[int, list[int]]]:
        """The undecided element with fewest viable images; None once every element is decided."""
        guard.tick()
        best: Optional[list[int]] = None
        best_x = -1
        for x in domain:
            if f[x] >= 0:
                continue
            opts = viable(x)
            if not opts:
                return x, []
            if best is None or len(opts) < len(best):
                best, best_x = opts, x
                if len(opts) == 1:
                    break
        return None if best is None else (best_x, best)

    # depth-first search with an explicit stack of (element, remaining images, trail mark)
    stack: list = []
    step = select()
    while True:
        if step is None:
            yield f
        elif step[1]:
            stack.append((step[0], iter(step[1]), len(trail)))
        step = _EXHAUSTED
        while stack:
            x, images, mark = stack[-1]
            undo(mark)
            moved = False
            for y in images:
                if assign(x, y):
                    moved = True
                    break
                undo(mark)
            if moved:
                step = select()
                break
            stack.pop()
        if step is _EXHAUSTED:
            break
    undo(0)


def homomorphisms(A: FiniteAct, B: FiniteAct, guard: int = DEFAULT_NODE_GUARD) -> Iterator[ActHom]:
    """Every homomorphism A -> B, in search order."""
    g = _Guard(guard)
    for f in _solve(A, B, list(A), {}, False, g):
        yield ActHom(A, B, tuple(f))


def monomorphisms(A: FiniteAct, B: FiniteAct, guard: int = DEFAULT_NODE_GUARD) -> Iterator[ActHom]:
    if A.size > B.size:
        return iter(())
    g = _Guard(guard)
    return (ActHom(A, B, tuple(f)) for f in _solve(A, B, list(A), {}, True, g))


def subact_homs(sub: Subact, B: FiniteAct, injective: bool = False,
                guard: int = DEFAULT_NODE_GUARD) -> Iterator[tuple[int, ...]]:
    """Homomorphisms from a subact into B, as value tuples aligned with ``sub.members()``."""
    members = sub.members()
    g = _Guard(guard)
    for f in _solve(sub.owner, B, members, {}, injective, g):
        yield tuple(f[x] for x in members)


@dataclass(frozen=True)
class ExtensionProblem:
    """Extend ``partial`` (defined on ``sub`` of ``ambient``) to all of ``ambient``."""

    ambient: FiniteAct
    sub: Subact
    partial: tuple[int, ...]
    target: FiniteAct

    @classmethod
    def make(cls, sub: Subact, values: Mapping[int, int] | Sequence[int], target: FiniteAct) -> "ExtensionProblem":
        members = sub.members()
        if isinstance(values, Mapping):
            vals = tuple(values[x] for x in members)
        else:
            vals = tuple(values)
        return cls(sub.owner, sub, vals, target)

    def partial_map(self) -> dict[int, int]:
        return dict(zip(self.sub.members(), self.partial))

    def is_well_formed(self) -> bool:
        f = [-1] * self.ambient.size
        for x, y in self.partial_map().items():
            f[x] = y
        return is_equivariant(self.ambient, self.target, f, self.sub.elems)

    def describe(self) -> dict:
        B, Q = self.ambient, self.target
        return {
            "ambient": B.name,
            "sub": [B.elems[x] for x in self.sub.members()],
            "map": {B.elems[x]: Q.elems[y] for x, y in self.partial_map().items()},
            "target": Q.name,
        }


def extend_hom(problem: ExtensionProblem, guard: int = DEFAULT_NODE_GUARD) -> Optional[ActHom]:
    """Some homomorphism ambient -> target restricting to the partial map, or None.

    Components of the ambient act are solved independently; a component that
    misses the subact is sent to the least zero of the target when one exists.
    """
    B, Q = problem.ambient, problem.target
    fixed = problem.partial_map()
    if not problem.is_well_formed():
        raise ValueError("partial map is not equivariant on the subact")
    result = [-1] * B.size
    for x, y in fixed.items():
        result[x] = y
    z = min(zeros(Q)) if has_zero(Q) else None
    g = _Guard(guard)
    for part in components(B).parts():
        if all(x in fixed for x in part):
            continue
        local = {x: fixed[x] for x in part if x in fixed}
        if not local and z is not None:
            for x in part:
                result[x] = z
            continue
        sol = next(_solve(B, Q, part, local, False, g), None)
        if sol is None:
            return None
        for x in part:
            result[x] = sol[x]
    return ActHom(B, Q, tuple(result))


def is_retract(sub: Subact, guard: int = DEFAULT_NODE_GUARD) -> Optional[ActHom]:
    """A homomorphism owner -> sub (as an act) fixing sub pointwise, or None."""
    act, incl = sub.as_act()
    problem = ExtensionProblem.make(sub, range(act.size), act)
    return extend_hom(problem, guard)


def restrictions(B: FiniteAct, Q: FiniteAct, sub: Subact, guard: int = DEFAULT_NODE_GUARD) -> set[tuple[int, ...]]:
    """Restrictions to ``sub`` of all homomorphisms B -> Q."""
    members = sub.members()
    g = _Guard(guard)
    return {tuple(f[x] for x in members) for f in _solve(B, Q, list(B), {}, False, g)}


def are_isomorphic(A: FiniteAct, B: FiniteAct) -> bool:
    if A.monoid != B.monoid or A.size != B.size:
        return False
    return canonical_form(A) == canonical_form(B)
