"""Decomposition of an act into its indecomposable components.

Two elements lie in the same component exactly when they are linked by a
chain a = a1 s1, a1 t1 = a2 s2, ..., an tn = b.  Every step of such a chain
stays inside one cyclic subact a_i S, and conversely x and x·s both lie in xS,
so the components are the connected components of the graph with an edge
{x, x·s} for every x and s.  That graph is what :func:`components` walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .act import FiniteAct, Subact


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class Decomposition:
    owner: FiniteAct
    component_of: tuple[int, ...]
    component_count: int

    def members(self, k: int) -> list[int]:
        return [x for x, c in enumerate(self.component_of) if c == k]

    def parts(self) -> list[list[int]]:
        return [self.members(k) for k in range(self.component_count)]

    def subacts(self) -> list[Subact]:
        return [Subact(self.owner, frozenset(p)) for p in self.parts()]


def _relabel(roots: list[int]) -> tuple[tuple[int, ...], int]:
    ids: dict[int, int] = {}
    comp = tuple(ids.setdefault(r, len(ids)) for r in roots)
    return comp, len(ids)


@lru_cache(maxsize=8192)
def components(A: FiniteAct) -> Decomposition:
    """Components numbered in order of their least element."""
    uf = UnionFind(A.size)
    for x in A:
        for y in A.action[x]:
            uf.union(x, y)
    comp, count = _relabel([uf.find(x) for x in A])
    return Decomposition(A, comp, count)


def is_indecomposable(A: FiniteAct) -> bool:
    return components(A).component_count == 1


def is_indecomposable_subact(sub: Subact) -> bool:
    """Decide indecomposability of a subact without materialising it."""
    members = sorted(sub.elems)
    pos = {x: i for i, x in enumerate(members)}
    uf = UnionFind(len(members))
    A = sub.owner
    for x in members:
        for y in A.action[x]:
            uf.union(pos[x], pos[y])
    return len({uf.find(i) for i in range(len(members))}) == 1


def one_step_joined(A: FiniteAct, x: int, y: int) -> Optional[tuple[int, int]]:
    """The lexicographically first (s, s') with x·s = y·s', if any."""
    row_y = A.action[y]
    for s, v in enumerate(A.action[x]):
        for t, w in enumerate(row_y):
            if v == w:
                return s, t
    return None


def chain_components(A: FiniteAct) -> tuple[tuple[int, ...], int]:
    """Components computed directly from chains of equalities.

    Independent of :func:`components`: builds the one-step relation
    {(c·s, c·t)} explicitly and closes it by breadth-first search.
    """
    adj: list[set[int]] = [set() for _ in A]
    for c in A:
        row = A.action[c]
        for u in row:
            adj[u].update(row)
    comp = [-1] * A.size
    count = 0
    for start in A:
        if comp[start] >= 0:
            continue
        comp[start] = count
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if comp[v] < 0:
                    comp[v] = count
                    queue.append(v)
        count += 1
    return tuple(comp), count


def to_dot(A: FiniteAct) -> str:
    """Graphviz description: nodes are act elements, edges are x -s-> x·s."""
    lines = [f'digraph "{A.name}" {{']
    comp = components(A)
    for k, part in enumerate(comp.parts()):
        lines.append(f"  subgraph cluster_{k} {{")
        for x in part:
            lines.append(f'    n{x} [label="{A.elems[x]}"];')
        lines.append("  }")
    S = A.monoid
    for x in A:
        for s in S:
            if s == S.identity:
                continue
            lines.append(f'  n{x} -> n{A.action[x][s]} [label="{S.elems[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
