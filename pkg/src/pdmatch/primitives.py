"""Exact cardinality matching engines.

``max_b_matching`` handles bipartite graphs where left vertices have degree
cap 1 and right vertices carry arbitrary caps.  ``max_general_matching`` is
Edmonds' blossom algorithm for arbitrary simple graphs; the odd cycles it
contracts do occur in the gadget graphs built by the {1,2}-tolerance solver,
so a bipartite engine cannot replace it.

Both engines scan vertices and adjacency lists in ascending index order, so
identical inputs give identical outputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CapacitatedBipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset[tuple[int, int]]
    right_caps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "right_caps", tuple(int(c) for c in self.right_caps))
        if len(self.right_caps) != self.right_count:
            raise ValueError("right_caps must have one entry per right vertex")
        if any(c < 0 for c in self.right_caps):
            raise ValueError("caps must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < self.left_count and 0 <= v < self.right_count):
                raise ValueError(f"edge {(u, v)} out of range")


@dataclass(frozen=True)
class GeneralGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))


def max_b_matching(g: CapacitatedBipartiteGraph) -> set[tuple[int, int]]:
    adj: list[list[int]] = [[] for _ in range(g.left_count)]
    for u, v in sorted(g.edges):
        if g.right_caps[v] > 0:
            adj[u].append(v)
    mate = b_matching_assign(adj, g.right_caps)
    return {(u, v) for u, v in enumerate(mate) if v >= 0}


def b_matching_assign(adj: Sequence[Sequence[int]], caps: Sequence[int]) -> list[int]:
    """Maximum b-matching on adjacency lists; returns the right vertex of each
    left vertex or -1.

    Augmenting paths are found by BFS.  Right vertices explored by a failed
    search stay marked until the next successful augmentation: nothing reachable
    from them can reach spare capacity while the matching is unchanged.
    """
    n_left = len(adj)
    n_right = len(caps)
    mate = [-1] * n_left
    load = [0] * n_right
    hosted: list[list[int]] = [[] for _ in range(n_right)]
    dead = [False] * n_right

    for root in range(n_left):
        if not adj[root]:
            continue
        came_from_right: dict[int, int] = {root: -1}
        came_from_left: dict[int, int] = {}
        queue = deque([root])
        touched: list[int] = []
        found = -1
        while queue and found < 0:
            u = queue.popleft()
            for v in adj[u]:
                if dead[v] or v in came_from_left:
                    continue
                came_from_left[v] = u
                touched.append(v)
                if load[v] < caps[v]:
                    found = v
                    break
                for w in hosted[v]:
                    if w not in came_from_right:
                        came_from_right[w] = v
                        queue.append(w)
        if found < 0:
            for v in touched:
                dead[v] = True
            continue
        # shift every job on the path one step towards spare capacity
        v = found
        load[v] += 1
        while v >= 0:
            u = came_from_left[v]
            prev = came_from_right[u]
            if prev >= 0:
                hosted[prev].remove(u)
            hosted[v].append(u)
            mate[u] = v
            v = prev
        for i in range(n_right):
            dead[i] = False
    return mate


def max_general_matching(g: GeneralGraph) -> set[tuple[int, int]]:
    mate = general_matching_mates(g.vertex_count, g.edges)
    return {(u, v) for u, v in enumerate(mate) if u < v}


def general_matching_mates(vertex_count: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Edmonds' blossom algorithm; returns the mate of every vertex or -1."""
    nv = vertex_count
    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v in sorted({(min(a, b), max(a, b)) for a, b in edges}):
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    mate = [-1] * nv

    # greedy start; augmenting from the remaining roots finishes the job
    for u in range(nv):
        if mate[u] < 0:
            for v in adj[u]:
                if mate[v] < 0:
                    mate[u], mate[v] = v, u
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        parent = [-1] * nv
        base = list(range(nv))
        in_tree = [False] * nv
        in_tree[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * nv
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    # odd cycle: contract the blossom onto its base
                    cur = lca(v, to)
                    blossom = [False] * nv
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for x in range(nv):
                        if blossom[base[x]]:
                            base[x] = cur
                            if not in_tree[x]:
                                in_tree[x] = True
                                queue.append(x)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        return to, parent
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(nv):
        if mate[root] >= 0 or not adj[root]:
            continue
        v, parent = find_augmenting(root)
        # flip the alternating path ending at the free vertex v
        while v >= 0:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate
