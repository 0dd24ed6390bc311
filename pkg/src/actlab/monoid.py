"""Finite monoids given by Cayley tables.

Element 0 is always the identity. Right ideals, right congruences and the
isomorphism-class enumeration of small monoids live here as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BadIdentity, IndexOutOfRange, NonAssociative, SizeGuardExceeded, ValidationError

MAX_ENUM_ORDER = 5
MAX_CONGRUENCE_ORDER = 10

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteMonoid:
    name: str
    elems: tuple[str, ...]
    mul: Table
    identity: int = 0

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

    def label(self, i: int) -> str:
        return self.elems[i]

    def __repr__(self) -> str:
        return f"FiniteMonoid({self.name!r}, order={self.size})"


@dataclass(frozen=True)
class RightIdeal:
    owner: FiniteMonoid
    elems: frozenset[int]

    def labels(self) -> list[str]:
        return [self.owner.elems[i] for i in sorted(self.elems)]

    def __repr__(self) -> str:
        return f"RightIdeal({{{', '.join(self.labels())}}})"


@dataclass(frozen=True)
class RightCongruence:
    """A right-compatible partition; ``blocks[x]`` is the block id of x.

    Block ids are in restricted-growth form (first occurrence order), so two
    equal partitions always compare equal.
    """

    owner: FiniteMonoid
    blocks: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.blocks) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for x, b in enumerate(self.blocks):
            out[b].append(x)
        return out

    def __repr__(self) -> str:
        parts = ["{" + ",".join(self.owner.elems[x] for x in c) + "}" for c in self.classes()]
        return f"RightCongruence({' '.join(parts)})"


def _normalize_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(b, len(seen)) for b in blocks)


def validate_monoid(labels: Sequence[str], table: Sequence[Sequence[int]], identity: int = 0,
                    name: str = "S") -> FiniteMonoid:
    """Check a Cayley table and return the monoid it describes.

    If ``identity`` is not 0 the elements are reordered so that it comes first.
    """
    n = len(labels)
    if n < 1:
        raise ValidationError("a monoid needs at least one element")
    if len(set(labels)) != n:
        raise ValidationError("element labels must be distinct")
    if len(table) != n or any(len(row) != n for row in table):
        raise ValidationError(f"table must be {n}x{n}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"table entry {v!r} is not an index below {n}")
    if not 0 <= identity < n:
        raise IndexOutOfRange(f"identity {identity} is not an index below {n}")
    for x in range(n):
        if table[identity][x] != x or table[x][identity] != x:
            raise BadIdentity(labels[x])
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise NonAssociative(labels[x], labels[y], labels[z])
    order = [identity] + [x for x in range(n) if x != identity]
    pos = {old: new for new, old in enumerate(order)}
    mul = tuple(tuple(pos[table[order[i]][order[j]]] for j in range(n)) for i in range(n))
    return FiniteMonoid(name, tuple(labels[i] for i in order), mul, 0)


def monoid_from_labels(name: str, labels: Sequence[str], rows: Sequence[Sequence[str]]) -> FiniteMonoid:
    """Build a monoid from a label table; the first label must be the identity."""
    idx = {lab: i for i, lab in enumerate(labels)}
    try:
        table = [[idx[v] for v in row] for row in rows]
    except KeyError as exc:
        raise IndexOutOfRange(f"unknown element {exc.args[0]!r} in table") from None
    return validate_monoid(labels, table, 0, name)


# ---------------------------------------------------------------------------
# ideals, zeros, regularity


def principal_right_ideal(S: FiniteMonoid, a: int) -> RightIdeal:
    return RightIdeal(S, frozenset(S.mul[a]))


def _is_right_closed(S: FiniteMonoid, elems: frozenset[int]) -> bool:
    return all(S.mul[i][s] in elems for i in elems for s in S)


def all_right_ideals(S: FiniteMonoid) -> list[RightIdeal]:
    """Every nonempty right-closed subset, smallest first."""
    n = S.size
    if n > 16:
        raise SizeGuardExceeded(f"right ideal enumeration over order {n}")
    principal = [frozenset(S.mul[a]) for a in S]
    found: set[frozenset[int]] = set(principal)
    frontier = list(principal)
    while frontier:
        nxt = []
        for ideal in frontier:
            for p in principal:
                u = ideal | p
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return [RightIdeal(S, e) for e in sorted(found, key=lambda e: (len(e), sorted(e)))]


def is_left_reversible(S: FiniteMonoid) -> bool:
    principal = [set(S.mul[a]) for a in S]
    return all(principal[a] & principal[b] for a in S for b in S if a < b)


def left_zeros(S: FiniteMonoid) -> frozenset[int]:
    return frozenset(z for z in S if all(S.mul[z][s] == z for s in S))


def right_zeros(S: FiniteMonoid) -> frozenset[int]:
    return frozenset(z for z in S if all(S.mul[s][z] == z for s in S))


def idempotents(S: FiniteMonoid) -> frozenset[int]:
    return frozenset(e for e in S if S.mul[e][e] == e)


def is_regular(S: FiniteMonoid) -> bool:
    m = S.mul
    return all(any(m[m[a][x]][a] == a for x in S) for a in S)


def is_principal_right_ideal_monoid(S: FiniteMonoid) -> bool:
    principal = {frozenset(S.mul[a]) for a in S}
    return all(I.elems in principal for I in all_right_ideals(S))


# ---------------------------------------------------------------------------
# right congruences


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


def is_right_compatible(S: FiniteMonoid, blocks: Sequence[int]) -> bool:
    m = S.mul
    for a in S:
        for b in range(a + 1, S.size):
            if blocks[a] == blocks[b]:
                if any(blocks[m[a][s]] != blocks[m[b][s]] for s in S):
                    return False
    return True


@lru_cache(maxsize=None)
def _right_congruences(S: FiniteMonoid) -> tuple[RightCongruence, ...]:
    return tuple(RightCongruence(S, p) for p in set_partitions(S.size) if is_right_compatible(S, p))


def all_right_congruences(S: FiniteMonoid) -> list[RightCongruence]:
    """Every right congruence, discrete partition first and total partition last."""
    if S.size > MAX_CONGRUENCE_ORDER:
        raise SizeGuardExceeded(f"Bell({S.size}) partitions exceed the congruence guard")
    found = list(_right_congruences(S))
    found.sort(key=lambda r: (-r.count, r.blocks))
    return found


def rees_congruence(S: FiniteMonoid, ideal: RightIdeal) -> RightCongruence:
    rep = min(ideal.elems)
    return RightCongruence(S, _normalize_blocks([rep if x in ideal.elems else S.size + x for x in S]))


def discrete_congruence(S: FiniteMonoid) -> RightCongruence:
    return RightCongruence(S, tuple(range(S.size)))


# ---------------------------------------------------------------------------
# isomorphism classes


def relabel_table(mul: Table, perm: Sequence[int]) -> Table:
    """Table of the monoid obtained by renaming element x to perm[x]."""
    n = len(mul)
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(tuple(perm[mul[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def canonical_table(mul: Table) -> Table:
    """Lexicographically least relabelling that keeps the identity at 0."""
    n = len(mul)
    best = None
    for rest in itertools.permutations(range(1, n)):
        t = relabel_table(mul, (0,) + rest)
        if best is None or t < best:
            best = t
    return best


def are_isomorphic_monoids(S: FiniteMonoid, T: FiniteMonoid) -> bool:
    return S.size == T.size and canonical_table(S.mul) == canonical_table(T.mul)


def _assoc_search(n: int) -> Iterator[list[list[int]]]:
    """All associative tables on 0..n-1 with identity 0 (labelled)."""
    T = [[-1] * n for _ in range(n)]
    for x in range(n):
        T[0][x] = x
        T[x][0] = x
    nonid = range(1, n)
    cells = [(x, y) for x in nonid for y in nonid]
    trail: list[tuple[int, int]] = []

    def assign(p: int, q: int, v: int, queue: list) -> None:
        T[p][q] = v
        trail.append((p, q))
        queue.append((p, q))

    def triple(a: int, b: int, c: int, queue: list) -> bool:
        ab = T[a][b]
        bc = T[b][c]
        if ab < 0 or bc < 0:
            return True
        left = T[ab][c]
        right = T[a][bc]
        if left >= 0 and right >= 0:
            return left == right
        if left >= 0:
            assign(a, bc, left, queue)
        elif right >= 0:
            assign(ab, c, right, queue)
        return True

    def propagate(queue: list) -> bool:
        while queue:
            p, q = queue.pop()
            for c in nonid:
                if not triple(p, q, c, queue):
                    return False
            for a in nonid:
                if not triple(a, p, q, queue):
                    return False
            for a in nonid:
                for b in nonid:
                    if T[a][b] == p and not triple(a, b, q, queue):
                        return False
                    if T[a][b] == q and not triple(p, a, b, queue):
                        return False
        return True

    def rec(k: int) -> Iterator[list[list[int]]]:
        while k < len(cells) and T[cells[k][0]][cells[k][1]] >= 0:
            k += 1
        if k == len(cells):
            yield T
            return
        p, q = cells[k]
        for v in range(n):
            mark = len(trail)
            queue: list = []
            assign(p, q, v, queue)
            if propagate(queue):
                yield from rec(k + 1)
            while len(trail) > mark:
                x, y = trail.pop()
                T[x][y] = -1

    yield from rec(0)


ENUM_LABELS = ("1", "a", "b", "c", "d", "e", "f", "g")


@lru_cache(maxsize=None)
def _enumerate_monoids(n: int) -> tuple[FiniteMonoid, ...]:
    seen = set()
    for T in _assoc_search(n):
        seen.add(canonical_table(tuple(tuple(r) for r in T)))
    labels = ENUM_LABELS[:n]
    return tuple(FiniteMonoid(f"S{n}_{k}", labels, t, 0) for k, t in enumerate(sorted(seen)))


def enumerate_monoids(n: int) -> Iterator[FiniteMonoid]:
    """All monoids of order n, one per isomorphism class, in canonical-table order."""
    if n < 1:
        raise ValueError("monoid order must be positive")
    if n > MAX_ENUM_ORDER:
        raise SizeGuardExceeded(f"monoid enumeration is limited to order {MAX_ENUM_ORDER}")
    return iter(_enumerate_monoids(n))


def monoids_up_to(order: int) -> list[FiniteMonoid]:
    return [S for n in range(1, order + 1) for S in enumerate_monoids(n)]
