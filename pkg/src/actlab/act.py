"""Finite right acts over a finite monoid and the constructions built from them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (EmptyFamily, IndexOutOfRange, MixedMonoids, NotCompatible, NotUnitary,
                     SizeGuardExceeded, ValidationError)
from .monoid import FiniteMonoid, RightCongruence, RightIdeal, rees_congruence

ZERO_LABEL = "θ"
DEFAULT_SIZE_GUARD = 4096
DEFAULT_SUBACT_GUARD = 1 << 16
MAX_ENUM_ACT = 8

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteAct:
    """A right act; ``action[x][s]`` is the index of x·s."""

    monoid: FiniteMonoid
    elems: tuple[str, ...]
    action: Table
    name: str = "A"

    @property
    def size(self) -> int:
        return len(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.elems)))

    def index(self, label: str) -> int:
        try:
            return self.elems.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of {self.name}") from None

    def orbit(self, x: int) -> frozenset[int]:
        """The cyclic subact xS."""
        return frozenset(self.action[x])

    def __repr__(self) -> str:
        return f"FiniteAct({self.name!r}, size={self.size}, over={self.monoid.name!r})"


@dataclass(frozen=True)
class Subact:
    owner: FiniteAct
    elems: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.elems)

    def members(self) -> list[int]:
        return sorted(self.elems)

    def labels(self) -> list[str]:
        return [self.owner.elems[i] for i in self.members()]

    def as_act(self) -> tuple[FiniteAct, tuple[int, ...]]:
        """The subact as a standalone act plus the inclusion into the owner."""
        return _subact_as_act(self)

    def __repr__(self) -> str:
        return f"Subact({{{', '.join(self.labels())}}} of {self.owner.name})"


@dataclass(frozen=True)
class ActHom:
    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def image(self) -> Subact:
        return Subact(self.target, frozenset(self.map))

    def is_equivariant(self) -> bool:
        return is_equivariant(self.source, self.target, self.map)

    def describe(self) -> dict[str, str]:
        return {self.source.elems[x]: self.target.elems[y] for x, y in enumerate(self.map)}


def is_equivariant(A: FiniteAct, B: FiniteAct, f: Sequence[int], domain: Iterable[int] | None = None) -> bool:
    dom = range(A.size) if domain is None else domain
    return all(f[A.action[x][s]] == B.action[f[x]][s] for x in dom for s in A.monoid)


# ---------------------------------------------------------------------------
# validation and basic constructions


def validate_act(S: FiniteMonoid, labels: Sequence[str], table: Sequence[Sequence[int]], name: str = "A") -> FiniteAct:
    m = len(labels)
    n = S.size
    if m < 1:
        raise ValidationError("an act needs at least one element")
    if len(set(labels)) != m:
        raise ValidationError("act labels must be distinct")
    if len(table) != m or any(len(row) != n for row in table):
        raise ValidationError(f"action table must be {m}x{n}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < m:
                raise IndexOutOfRange(f"action entry {v!r} is not an index below {m}")
    for x in range(m):
        if table[x][S.identity] != x:
            raise NotUnitary(labels[x])
    for x in range(m):
        for s in range(n):
            for t in range(n):
                if table[x][S.mul[s][t]] != table[table[x][s]][t]:
                    raise NotCompatible(labels[x], S.elems[s], S.elems[t])
    return FiniteAct(S, tuple(labels), tuple(tuple(r) for r in table), name)


def act_from_labels(S: FiniteMonoid, name: str, labels: Sequence[str], rows: Sequence[Sequence[str]]) -> FiniteAct:
    idx = {lab: i for i, lab in enumerate(labels)}
    try:
        table = [[idx[v] for v in row] for row in rows]
    except KeyError as exc:
        raise IndexOutOfRange(f"unknown element {exc.args[0]!r} in action table") from None
    return validate_act(S, labels, table, name)


def regular_act(S: FiniteMonoid) -> FiniteAct:
    return FiniteAct(S, S.elems, S.mul, f"{S.name}_S")


def zero_act(S: FiniteMonoid) -> FiniteAct:
    return FiniteAct(S, (ZERO_LABEL,), ((0,) * S.size,), "Θ")


def cyclic_act(S: FiniteMonoid, rho: RightCongruence) -> FiniteAct:
    """S/rho; the element for block b is labelled by the block's first member."""
    classes = rho.classes()
    labels = tuple("[" + S.elems[c[0]] + "]" for c in classes)
    table = tuple(tuple(rho.blocks[S.mul[c[0]][s]] for s in S) for c in classes)
    return FiniteAct(S, labels, table, f"{S.name}/rho")


def rees_factor_act(S: FiniteMonoid, ideal: RightIdeal) -> FiniteAct:
    return cyclic_act(S, rees_congruence(S, ideal))


def zeros(A: FiniteAct) -> frozenset[int]:
    return frozenset(z for z in A if all(v == z for v in A.action[z]))


def has_zero(A: FiniteAct) -> bool:
    return any(all(v == z for v in A.action[z]) for z in A)


def _fresh_label(used: Iterable[str], base: str = ZERO_LABEL) -> str:
    used = set(used)
    label = base
    while label in used:
        label += "'"
    return label


def adjoin_zero(A: FiniteAct) -> FiniteAct:
    """A itself when it has a zero, otherwise A with a fresh zero placed last."""
    if has_zero(A):
        return A
    m = A.size
    table = A.action + ((m,) * A.monoid.size,)
    return FiniteAct(A.monoid, A.elems + (_fresh_label(A.elems),), table, f"{A.name}^θ")


def _same_monoid(acts: Sequence[FiniteAct]) -> FiniteMonoid:
    if not acts:
        raise EmptyFamily("empty family of acts")
    S = acts[0].monoid
    if any(a.monoid != S for a in acts):
        raise MixedMonoids("acts are over different monoids")
    return S


def coproduct(acts: Sequence[FiniteAct]) -> tuple[FiniteAct, list[tuple[int, ...]]]:
    """Disjoint union; returns the act and one injection (index map) per summand."""
    S = _same_monoid(acts)
    all_labels = [lab for a in acts for lab in a.elems]
    clash = len(set(all_labels)) != len(all_labels)
    labels: list[str] = []
    rows: list[tuple[int, ...]] = []
    injections = []
    offset = 0
    for i, a in enumerate(acts, 1):
        labels.extend(f"{lab}_{i}" if clash else lab for lab in a.elems)
        rows.extend(tuple(v + offset for v in row) for row in a.action)
        injections.append(tuple(range(offset, offset + a.size)))
        offset += a.size
    name = " ⊔ ".join(a.name for a in acts)
    return FiniteAct(S, tuple(labels), tuple(rows), name), injections


def product(acts: Sequence[FiniteAct], guard: int = DEFAULT_SIZE_GUARD) -> tuple[FiniteAct, list[tuple[int, ...]]]:
    """Cartesian product with componentwise action; returns the act and its projections."""
    S = _same_monoid(acts)
    size = 1
    for a in acts:
        size *= a.size
    if size > guard:
        raise SizeGuardExceeded(f"product of size {size} exceeds guard {guard}")
    tuples = list(itertools.product(*(range(a.size) for a in acts)))
    pos = {t: i for i, t in enumerate(tuples)}
    table = tuple(tuple(pos[tuple(a.action[c][s] for a, c in zip(acts, t))] for s in S) for t in tuples)
    labels = tuple("(" + ",".join(a.elems[c] for a, c in zip(acts, t)) + ")" for t in tuples)
    projections = [tuple(t[k] for t in tuples) for k in range(len(acts))]
    name = " × ".join(a.name for a in acts)
    return FiniteAct(S, labels, table, name), projections


def cofree_act(S: FiniteMonoid, alphabet: int | Sequence[str], guard: int = DEFAULT_SIZE_GUARD) -> FiniteAct:
    """All maps f: S -> I with (f·s)(t) = f(st); f is stored as (f(s) for s in S)."""
    labels = [str(i) for i in range(alphabet)] if isinstance(alphabet, int) else list(alphabet)
    k = len(labels)
    if k < 1:
        raise EmptyFamily("cofree act needs a nonempty alphabet")
    size = k ** S.size
    if size > guard:
        raise SizeGuardExceeded(f"cofree act of size {size} exceeds guard {guard}")
    funcs = list(itertools.product(range(k), repeat=S.size))
    pos = {f: i for i, f in enumerate(funcs)}
    table = tuple(tuple(pos[tuple(f[S.mul[s][t]] for t in S)] for s in S) for f in funcs)
    elems = tuple("[" + ",".join(labels[v] for v in f) + "]" for f in funcs)
    return FiniteAct(S, elems, table, f"{k}^{S.name}")


def cofree_function(A: FiniteAct, x: int) -> tuple[int, ...]:
    """Inverse of the cofree labelling: the value sequence of element x."""
    return tuple(int(v) for v in A.elems[x][1:-1].split(","))


# ---------------------------------------------------------------------------
# subacts


def generated_subact(A: FiniteAct, xs: Iterable[int]) -> Subact:
    xs = list(xs)
    if not xs:
        raise ValueError("generating set must be nonempty")
    return Subact(A, frozenset(v for x in xs for v in A.action[x]))


def is_closed(A: FiniteAct, elems: Iterable[int]) -> bool:
    elems = set(elems)
    return bool(elems) and all(v in elems for x in elems for v in A.action[x])


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for x in elems:
        m |= 1 << x
    return m


def _unmask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def subact_masks(A: FiniteAct, containing: Iterable[int] = (), guard: int = DEFAULT_SUBACT_GUARD) -> list[int]:
    """Bitmasks of all subacts (containing the given elements), smallest first."""
    principal = sorted({_mask(A.action[x]) for x in A})
    base = _mask(v for x in containing for v in A.action[x])
    found: set[int] = set()
    frontier = [base] if base else principal[:]
    found.update(frontier)
    while frontier:
        nxt = []
        for m in frontier:
            for p in principal:
                u = m | p
                if u != m and u not in found:
                    found.add(u)
                    nxt.append(u)
                    if len(found) > guard:
                        raise SizeGuardExceeded(f"more than {guard} subacts in {A.name}")
        frontier = nxt
    return sorted(found, key=lambda m: (bin(m).count("1"), sorted(_unmask(m))))


@lru_cache(maxsize=4096)
def _subacts(A: FiniteAct, guard: int) -> tuple[Subact, ...]:
    return tuple(Subact(A, _unmask(m)) for m in subact_masks(A, guard=guard))


def subacts(A: FiniteAct, guard: int = DEFAULT_SUBACT_GUARD) -> Iterator[Subact]:
    """All subacts of A, ordered by size then members."""
    return iter(_subacts(A, guard))


@lru_cache(maxsize=8192)
def _subact_as_act(sub: Subact) -> tuple[FiniteAct, tuple[int, ...]]:
    members = sub.members()
    if not is_closed(sub.owner, members):
        raise ValidationError(f"{sorted(members)} is not closed in {sub.owner.name}")
    pos = {x: i for i, x in enumerate(members)}
    A = sub.owner
    table = tuple(tuple(pos[v] for v in A.action[x]) for x in members)
    act = FiniteAct(A.monoid, tuple(A.elems[x] for x in members), table, f"{A.name}|{len(members)}")
    return act, tuple(members)


def right_ideal_act(ideal: RightIdeal) -> FiniteAct:
    act, _ = Subact(regular_act(ideal.owner), ideal.elems).as_act()
    return act


# ---------------------------------------------------------------------------
# isomorphism classes and enumeration


def _colors(table: Table, n: int) -> list[int]:
    m = len(table)
    indeg = [[0] * n for _ in range(m)]
    for x in range(m):
        for s in range(n):
            indeg[table[x][s]][s] += 1
    sig = [(len(set(table[x])), tuple(table[x][s] == x for s in range(n)), tuple(indeg[x])) for x in range(m)]
    colors = _rank(sig)
    while True:
        sig = [(colors[x], tuple(colors[table[x][s]] for s in range(n))) for x in range(m)]
        new = _rank(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank(sig: list) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(sig)))}
    return [order[v] for v in sig]


def canonical_act_table(table: Table, n: int) -> Table:
    """Least relabelling among those that sort elements by an invariant colouring."""
    m = len(table)
    colors = _colors(table, n)
    classes = [[x for x in range(m) if colors[x] == c] for c in range(max(colors) + 1)]
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [x for part in choice for x in part]
        pos = [0] * m
        for new, old in enumerate(order):
            pos[old] = new
        t = tuple(tuple(pos[table[old][s]] for s in range(n)) for old in order)
        if best is None or t < best:
            best = t
    return best


def canonical_form(A: FiniteAct) -> Table:
    return canonical_act_table(A.action, A.monoid.size)


def _act_search(S: FiniteMonoid, m: int) -> Iterator[list[list[int]]]:
    """All labelled action tables on 0..m-1 (unitary and compatible)."""
    n = S.size
    mul = S.mul
    nonid = [s for s in range(n) if s != S.identity]
    factorizations: dict[int, list[tuple[int, int]]] = {u: [] for u in range(n)}
    for s in nonid:
        for t in nonid:
            factorizations[mul[s][t]].append((s, t))
    V = [[-1] * n for _ in range(m)]
    for x in range(m):
        V[x][S.identity] = x
    cells = [(x, s) for x in range(m) for s in nonid]
    trail: list[tuple[int, int]] = []

    def assign(x: int, s: int, v: int, queue: list) -> None:
        V[x][s] = v
        trail.append((x, s))
        queue.append((x, s))

    def check(x: int, s: int, t: int, queue: list) -> bool:
        y = V[x][s]
        if y < 0:
            return True
        st = mul[s][t]
        left = V[x][st]
        right = V[y][t]
        if left >= 0 and right >= 0:
            return left == right
        if left >= 0:
            assign(y, t, left, queue)
        elif right >= 0:
            assign(x, st, right, queue)
        return True

    def propagate(queue: list) -> bool:
        while queue:
            p, q = queue.pop()
            for t in nonid:
                if not check(p, q, t, queue):
                    return False
            for s, t in factorizations[q]:
                if not check(p, s, t, queue):
                    return False
            for x in range(m):
                row = V[x]
                for s in nonid:
                    if row[s] == p and not check(x, s, q, queue):
                        return False
        return True

    def rec(k: int) -> Iterator[list[list[int]]]:
        while k < len(cells) and V[cells[k][0]][cells[k][1]] >= 0:
            k += 1
        if k == len(cells):
            yield V
            return
        x, s = cells[k]
        for v in range(m):
            mark = len(trail)
            queue: list = []
            assign(x, s, v, queue)
            if propagate(queue):
                yield from rec(k + 1)
            while len(trail) > mark:
                a, b = trail.pop()
                V[a][b] = -1

    yield from rec(0)


@lru_cache(maxsize=None)
def _enumerate_acts(S: FiniteMonoid, m: int) -> tuple[FiniteAct, ...]:
    seen = set()
    for V in _act_search(S, m):
        seen.add(canonical_act_table(tuple(tuple(r) for r in V), S.size))
    labels = tuple(str(i) for i in range(m))
    return tuple(FiniteAct(S, labels, t, f"{S.name}:A{m}_{k}") for k, t in enumerate(sorted(seen)))


def enumerate_acts(S: FiniteMonoid, m: int) -> Iterator[FiniteAct]:
    """All acts over S with exactly m elements, one per isomorphism class."""
    if m < 1:
        raise ValueError("act size must be positive")
    if m > MAX_ENUM_ACT:
        raise SizeGuardExceeded(f"act enumeration is limited to size {MAX_ENUM_ACT}")
    return iter(_enumerate_acts(S, m))


def acts_up_to(S: FiniteMonoid, m: int) -> list[FiniteAct]:
    return [A for k in range(1, m + 1) for A in enumerate_acts(S, k)]
