"""Isomorph-free generation of graphs by canonical vertex augmentation.

A graph of order ``k`` is grown from its parent of order ``k - 1`` by adding
a vertex ``v`` with neighbourhood ``S``. The child is kept only when

* ``v`` lies in the automorphism orbit of the child's canonical deletion
  vertex: among vertices of minimum degree, those with the least sorted
  neighbour-degree tuple, the one with the smallest canonical position; and
* ``S`` is the least set in its orbit under the parent's automorphism group.

The first rule makes the parent class of each child unique, the second rules
out duplicates from one parent. Because ``v`` always has minimum degree, the
edge count of every ancestor is confined to a window that can be computed up
front from the requested final edge range.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_labelling
from .graph import Graph, bits


@dataclass(frozen=True)
class Bounds:
    """Restrictions on the graphs produced at the final order ``n``."""

    n: int
    min_edges: int = 0
    max_edges: int | None = None
    min_degree: int = 0

    def edge_windows(self) -> list[set[int]]:
        """``windows[k]`` = edge counts an order-``k`` ancestor may have."""
        n = self.n
        hi = n * (n - 1) // 2 if self.max_edges is None else min(self.max_edges, n * (n - 1) // 2)
        windows: list[set[int]] = [set() for _ in range(n + 1)]
        windows[n] = set(range(max(self.min_edges, 0), hi + 1))
        for k in range(n, 1, -1):
            dmin = self.min_degree if k == n else 0
            cap = (k - 1) * (k - 2) // 2
            prev = set()
            for e in windows[k]:
                for d in range(dmin, min(2 * e // k, k - 1) + 1):
                    if 0 <= e - d <= cap:
                        prev.add(e - d)
            windows[k - 1] = prev
        return windows


@dataclass
class _Node:
    rows: list[int]
    edges: int
    gens: tuple[tuple[int, ...], ...] | None = field(default=None)

    def generators(self) -> tuple[tuple[int, ...], ...]:
        if self.gens is None:
            self.gens = canonical_labelling(self.rows).generators
        return self.gens


def _is_orbit_minimal(s: int, gens: Sequence[Sequence[int]]) -> bool:
    """True iff ``s`` is the least vertex set in its orbit under ``gens``."""
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for g in gens:
            y = 0
            for b in bits(x):
                y |= 1 << g[b]
            if y < s:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _accept(rows: list[int], k: int, d: int) -> tuple[bool, tuple | None]:
    """Canonical deletion test for the new vertex ``k - 1`` of degree ``d``.

    Returns (accepted, automorphism generators if they were computed).
    """
    v = k - 1
    degs = [r.bit_count() for r in rows]
    cands = [x for x in range(k) if degs[x] == d]
    if len(cands) == 1:
        return True, None
    keys = {}
    for x in cands:
        keys[x] = tuple(sorted(degs[y] for y in bits(rows[x])))
    best = min(keys.values())
    if keys[v] != best:
        return False, None
    cands = [x for x in cands if keys[x] == best]
    if len(cands) == 1:
        return True, None
    lab = canonical_labelling(rows)
    pos = lab.position
    m = min(cands, key=pos.__getitem__)
    return lab.orbits[m] == lab.orbits[v], lab.generators


def _children(node: _Node, k: int, windows: list[set[int]], bounds: Bounds) -> Iterator[_Node]:
    """Accepted children of order ``k`` of a parent of order ``k - 1``."""
    rows = node.rows
    p = k - 1
    degs = [r.bit_count() for r in rows]
    dmin = bounds.min_degree if k == bounds.n else 0
    window = windows[k]
    gens = None
    for d in range(dmin, k):
        if node.edges + d not in window:
            continue
        forced = 0
        nforced = 0
        free = []
        ok = True
        for x in range(p):
            if degs[x] < d - 1:
                ok = False
                break
            if degs[x] == d - 1:
                forced |= 1 << x
                nforced += 1
            else:
                free.append(x)
        if not ok or nforced > d:
            continue
        for combo in combinations(free, d - nforced):
            s = forced
            for x in combo:
                s |= 1 << x
            if gens is None:
                gens = node.generators()
            if gens and not _is_orbit_minimal(s, gens):
                continue
            child = [r | (s >> i & 1) << p for i, r in enumerate(rows)]
            child.append(s)
            ok, child_gens = _accept(child, k, d)
            if ok:
                yield _Node(child, node.edges + d, child_gens)


def _descend(node: _Node, k: int, windows: list[set[int]], bounds: Bounds) -> Iterator[_Node]:
    """All accepted descendants of order ``bounds.n`` of ``node`` (order ``k``)."""
    if k == bounds.n:
        yield node
        return
    for child in _children(node, k + 1, windows, bounds):
        yield from _descend(child, k + 1, windows, bounds)


def _root(bounds: Bounds) -> tuple[_Node, list[set[int]]]:
    windows = bounds.edge_windows()
    return _Node([0], 0, ()), windows


def prefix_nodes(bounds: Bounds, depth: int) -> list[tuple[_Node, int]]:
    """Nodes after ``depth`` augmentation steps, in deterministic order."""
    root, windows = _root(bounds)
    level = min(1 + depth, bounds.n)
    cut = bounds if level == bounds.n else Bounds(level)
    return [(nd, level) for nd in _descend(root, 1, windows, cut)]


def generate_rows(bounds: Bounds, depth: int = 0, shard: int = 0, shards: int = 1) -> Iterator[list[int]]:
    """Adjacency rows of one representative per class, restricted to a shard.

    The search tree is cut after ``depth`` augmentation steps; shard ``i`` of
    ``shards`` expands the prefix nodes whose index is ``i`` modulo ``shards``.
    """
    if not 0 <= shard < shards:
        raise ValueError(f"shard index {shard} outside 0..{shards - 1}")
    if bounds.n < 1:
        raise ValueError("order must be positive")
    root, windows = _root(bounds)
    if depth == 0:
        prefixes = [(root, 1)]
    else:
        prefixes = prefix_nodes(bounds, depth)
    for index, (node, level) in enumerate(prefixes):
        if index % shards != shard:
            continue
        if level == 1 and 0 not in windows[1]:
            continue
        for leaf in _descend(node, level, windows, bounds):
            yield leaf.rows


def generate(n: int, *, min_edges: int = 0, max_edges: int | None = None, min_degree: int = 0) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n`` within the given limits."""
    bounds = Bounds(n, min_edges, max_edges, min_degree)
    for rows in generate_rows(bounds):
        yield Graph(n, tuple(rows))


def count_classes(n: int, **limits) -> int:
    return sum(1 for _ in generate_rows(Bounds(n, **limits)))
