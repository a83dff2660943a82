"""Canonical labelling and automorphism groups of small graphs.

Colour refinement to an equitable ordered partition, then a depth-first
individualisation search. Leaves are compared by their relabelled adjacency
rows; the least one is canonical. Two leaves with equal rows differ by an
automorphism, and automorphisms found so far prune sibling subtrees that lie
in one orbit of the pointwise stabiliser of the current prefix. Under that
pruning the recorded automorphisms generate the full group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, to_graph6


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]            # order[p] = vertex placed at canonical position p
    rows: tuple[int, ...]             # adjacency of the canonically relabelled graph
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]           # least vertex of each vertex's Aut-orbit

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for p, v in enumerate(self.order):
            pos[v] = p
        return pos


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (1-dim WL)."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                r = adj[v]
                key = tuple([(r & m).bit_count() for m in masks])
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(c)
            else:
                for key in sorted(groups):
                    new.append(groups[key])
        if len(new) == len(cells):
            return cells
        cells = new


def _orbit_roots(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


def _twin_generators(adj: Sequence[int], colour: Sequence[int]) -> list[tuple[int, ...]]:
    """Transpositions of open or closed twins of equal colour."""
    n = len(adj)
    gens = []
    seen_open: dict[tuple[int, int], int] = {}
    seen_closed: dict[tuple[int, int], int] = {}
    for x in range(n):
        for table, key in ((seen_open, (adj[x], colour[x])),
                           (seen_closed, (adj[x] | 1 << x, colour[x]))):
            first = table.setdefault(key, x)
            if first != x:
                perm = list(range(n))
                perm[first], perm[x] = x, first
                gens.append(tuple(perm))
    return gens


def _relabelled_rows(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for p, v in enumerate(order):
        pos[v] = p
    out = []
    for v in order:
        r = 0
        for w in bits(adj[v]):
            r |= 1 << pos[w]
        out.append(r)
    return tuple(out)


def canonical_labelling(adj: Sequence[int], colour: Sequence[int] | None = None) -> Labelling:
    """Canonical labelling of the graph with rows ``adj``.

    ``colour`` optionally assigns each vertex a sortable colour; labellings
    then respect colour classes, ordered by colour value.
    """
    n = len(adj)
    if colour is None:
        colour = [0] * n
        cells = [list(range(n))]
    else:
        by_colour: dict = {}
        for v in range(n):
            by_colour.setdefault(colour[v], []).append(v)
        cells = [by_colour[c] for c in sorted(by_colour)]
    gens: list[tuple[int, ...]] = _twin_generators(adj, colour)
    best_rows: list = [None]
    best_order: list = [None]

    def search(cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        cells = refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            rows = _relabelled_rows(adj, order)
            if best_rows[0] is None or rows < best_rows[0]:
                best_rows[0] = rows
                best_order[0] = order
            elif rows == best_rows[0]:
                gamma = [0] * n
                for a, b in zip(best_order[0], order):
                    gamma[a] = b
                gens.append(tuple(gamma))
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        tried: list[int] = []
        for w in target:
            if tried:
                stab = [g for g in gens if all(g[x] == x for x in fixed)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if roots[w] in {roots[x] for x in tried}:
                        continue
            tried.append(w)
            rest = [x for x in target if x != w]
            search(cells[:t] + [[w], rest] + cells[t + 1:], fixed + (w,))

    search(cells, ())
    return Labelling(
        order=tuple(best_order[0]),
        rows=best_rows[0],
        generators=tuple(gens),
        orbits=tuple(_orbit_roots(n, gens)),
    )


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_labelling(g.adj).rows)


def canonical_form(g: Graph) -> bytes:
    """Certificate of the isomorphism class: graph6 of the canonical relabelling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_labelling(g.adj).generators


def vertex_orbits(g: Graph) -> list[list[int]]:
    roots = canonical_labelling(g.adj).orbits
    out: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        out.setdefault(r, []).append(v)
    return sorted(out.values())
