"""Edge criticality, the D2C test, dominating edges and the partition around one."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, complement, diameter, two_ball

Pair = tuple[int, int]


class InconsistencyError(RuntimeError):
    """A structural statement that must hold for D2C graphs failed on an input."""


class NotDominatingError(ValueError):
    pass


def pair(a: int, b: int) -> Pair:
    if a == b:
        raise ValueError(f"degenerate pair ({a}, {b})")
    return (a, b) if a < b else (b, a)


def _balls(adj: Sequence[int], n: int) -> list[int]:
    return [two_ball(adj, x) for x in range(n)]


def critical_pairs(g: Graph, e: Pair) -> set[Pair]:
    """Pairs at distance at most 2 in ``g`` that are pushed beyond 2 by deleting ``e``.

    Distances are recomputed from scratch on ``g - e``.
    """
    a, b = e
    if not g.has_edge(a, b):
        raise ValueError(f"{e} is not an edge")
    before = _balls(g.adj, g.n)
    h = g.without_edge(a, b)
    after = _balls(h.adj, h.n)
    out = set()
    for x in range(g.n):
        lost = before[x] & ~after[x]
        for y in bits(lost >> (x + 1) << (x + 1)):
            out.add((x, y))
    return out


def observation_shape_ok(g: Graph, e: Pair, p: Pair) -> bool:
    """Does ``p`` have the shape {x, z}, z in N[y] - x (or symmetric) for e = xy?"""
    x, y = e
    for a, b in (p, p[::-1]):
        if a == x and b != x and g.closed(y) >> b & 1:
            return True
        if a == y and b != y and g.closed(x) >> b & 1:
            return True
    return False


def edge_is_critical(adj: Sequence[int], n: int, a: int, b: int) -> bool:
    """Whether deleting edge ``ab`` leaves some vertex beyond distance 2 of ``a`` or ``b``.

    Only pairs containing an endpoint can lose a path of length at most 2
    through ``ab``, so checking the two endpoint balls is exhaustive.
    """
    full = (1 << n) - 1
    for x, y in ((a, b), (b, a)):
        nx = adj[x] & ~(1 << y)
        ball = nx | 1 << x
        for z in bits(nx):
            ball |= adj[z]
        if ball != full:
            return True
    return False


def is_d2c_rows(adj: Sequence[int], n: int) -> bool:
    if n < 2:
        return False
    full = (1 << n) - 1
    for x in range(n):
        ball = adj[x] | 1 << x
        for y in bits(adj[x]):
            ball |= adj[y]
        if ball != full:
            return False
    if all(adj[x] | 1 << x == full for x in range(n)):
        return False  # complete graph, diameter 1
    for a in range(n):
        for b in bits(adj[a] >> (a + 1) << (a + 1)):
            if not edge_is_critical(adj, n, a, b):
                return False
    return True


def is_d2c(g: Graph) -> bool:
    """Diameter exactly 2 and every edge critical for some pair."""
    return is_d2c_rows(g.adj, g.n)


def is_d2c_by_definition(g: Graph) -> bool:
    if diameter(g) != 2:
        return False
    return all(critical_pairs(g, e) for e in g.edges())


def dominating_edges(g: Graph) -> list[Pair]:
    """Edges ``uv`` with ``N[u] | N[v] = V``, in lexicographic order."""
    full = g.full
    return [(a, b) for a, b in g.edges() if g.closed(a) | g.closed(b) == full]


@dataclass(frozen=True)
class PartitionUV:
    u: int
    v: int
    p_uv: frozenset[int]
    s_uv: frozenset[int]
    s_u: frozenset[int]
    s_v: frozenset[int]
    swapped: bool = False

    def sizes(self) -> dict[str, int]:
        return {"p_uv": len(self.p_uv), "s_uv": len(self.s_uv),
                "s_u": len(self.s_u), "s_v": len(self.s_v)}


def partition_uv(g: Graph, u: int, v: int, *, check_d2c: bool = True) -> PartitionUV:
    """Split ``V - {u, v}`` around the dominating edge ``uv``.

    The result is normalised so that ``p_uv`` misses ``N(v)``; ``u`` and ``v``
    are exchanged when needed (``swapped`` records it).
    """
    if not g.has_edge(u, v) or g.closed(u) | g.closed(v) != g.full:
        raise NotDominatingError(f"({u}, {v}) is not a dominating edge")
    if check_d2c and not is_d2c(g):
        raise ValueError("graph is not diameter-2-critical")
    crit = critical_pairs(g, pair(u, v))
    p = set()
    for x in range(g.n):
        if x in (u, v):
            continue
        if pair(x, u) in crit or pair(x, v) in crit:
            p.add(x)
    nu = set(g.neighbors(u)) - {v}
    nv = set(g.neighbors(v)) - {u}
    meets_u = bool(p & nu)
    meets_v = bool(p & nv)
    if meets_u and meets_v:
        raise InconsistencyError(f"P_uv meets both N({u}) and N({v})")
    swapped = meets_v
    if swapped:
        u, v = v, u
        nu, nv = nv, nu
    s_uv = nu & nv
    return PartitionUV(
        u=u, v=v,
        p_uv=frozenset(p),
        s_uv=frozenset(s_uv),
        s_u=frozenset(nu - p - s_uv),
        s_v=frozenset(nv - p - s_uv),
        swapped=swapped,
    )


@dataclass(frozen=True)
class StructureReport:
    """Checks (a)-(d) on a partition; any False is a counterexample."""

    no_puv_to_nv: bool
    empty_puv_forces_empty_suv: bool
    cross_neighbour: bool
    cross_non_neighbour: bool

    @property
    def ok(self) -> bool:
        return all((self.no_puv_to_nv, self.empty_puv_forces_empty_suv,
                    self.cross_neighbour, self.cross_non_neighbour))

    def as_dict(self) -> dict[str, bool]:
        return {"a": self.no_puv_to_nv, "b": self.empty_puv_forces_empty_suv,
                "c": self.cross_neighbour, "d": self.cross_non_neighbour}


def verify_structure(g: Graph, part: PartitionUV) -> StructureReport:
    adj = g.adj
    nv_minus_u = g.adj[part.v] & ~(1 << part.u)
    a = all(not adj[p] & nv_minus_u for p in part.p_uv)
    b = bool(part.p_uv) or not part.s_uv

    su = sum(1 << x for x in part.s_u)
    sv = sum(1 << x for x in part.s_v)
    c = True
    if not part.s_uv:
        c = all(adj[x] & sv for x in part.s_u) and all(adj[y] & su for y in part.s_v)
    d = True
    if not part.p_uv:
        for side, other in ((part.s_u, sv), (part.s_v, su)):
            own = sum(1 << x for x in side)
            for x in side:
                if adj[x] & own and (adj[x] & other) == other:
                    d = False
    return StructureReport(a, b, c, d)


def complement_diameter(g: Graph) -> int | float:
    return diameter(complement(g))
