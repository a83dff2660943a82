"""Edge-count certificates around a dominating edge.

Every edge inside ``X = {v} + S_u + P_uv + S_uv`` or inside ``Y = {u} + S_v``
is assigned a cross non-edge ``bc`` for which it is critical (``b`` an
endpoint of the edge). The assignment is injective, so
``m = |X||Y| - free`` where ``free`` counts cross non-edges nobody maps to.
Structure in the orientation induced on ``S_u`` and ``S_v`` then certifies
lower bounds on ``free``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .analysis import (
    InconsistencyError, Pair, PartitionUV, critical_pairs, dominating_edges,
    pair, partition_uv,
)
from .families import is_balanced_complete_bipartite, is_h5, strengthened_bound
from .graph import Graph, bits, is_bipartite


@dataclass(frozen=True)
class XYSplit:
    x_side: frozenset[int]
    y_side: frozenset[int]

    def side_of(self, x: int) -> str:
        return "x" if x in self.x_side else "y"


def build_xy(part: PartitionUV) -> XYSplit:
    x = {part.v} | part.s_u | part.p_uv | part.s_uv
    y = {part.u} | part.s_v
    return XYSplit(frozenset(x), frozenset(y))


@dataclass(frozen=True)
class Assignment:
    """``mapping[edge] = (b, c)``: the edge is critical for ``{b, c}``, ``b`` on the edge."""

    mapping: dict[Pair, tuple[int, int]]
    free: frozenset[Pair]
    cross_non_edges: frozenset[Pair]

    def image(self, edge: Pair) -> Pair:
        b, c = self.mapping[edge]
        return pair(b, c)

    def is_injective(self) -> bool:
        images = [pair(b, c) for b, c in self.mapping.values()]
        return len(images) == len(set(images))

    def preimage(self) -> dict[Pair, Pair]:
        return {pair(b, c): e for e, (b, c) in self.mapping.items()}

    def free_incident(self, vertices) -> int:
        vs = set(vertices)
        return sum(1 for a, b in self.free if a in vs or b in vs)


def _inside_edges(g: Graph, side: frozenset[int]) -> list[Pair]:
    return [(a, b) for a, b in combinations(sorted(side), 2) if g.has_edge(a, b)]


def build_assignment(g: Graph, split: XYSplit) -> Assignment:
    """Assign each within-side edge the lexicographically least eligible ``(b, c)``."""
    mapping: dict[Pair, tuple[int, int]] = {}
    for side, other in ((split.x_side, split.y_side), (split.y_side, split.x_side)):
        for e in _inside_edges(g, side):
            crit = critical_pairs(g, e)
            options = []
            for b in e:
                for c in other:
                    if pair(b, c) in crit and not g.has_edge(b, c):
                        options.append((b, c))
            if not options:
                raise InconsistencyError(f"edge {e} is critical for no pair across the split")
            mapping[e] = min(options)
    cross = frozenset(
        pair(x, y) for x in split.x_side for y in split.y_side if not g.has_edge(x, y)
    )
    images = [pair(b, c) for b, c in mapping.values()]
    if len(images) != len(set(images)):
        raise InconsistencyError("edge assignment is not injective")
    return Assignment(mapping, cross - set(images), cross)


@dataclass(frozen=True)
class EdgeIdentity:
    m: int
    x_size: int
    y_size: int
    free: int
    product_form: int
    floor_form: int

    @property
    def holds(self) -> bool:
        return self.m == self.product_form == self.floor_form


def verify_edge_identity(g: Graph, split: XYSplit, asg: Assignment) -> EdgeIdentity:
    nx, ny = len(split.x_side), len(split.y_side)
    free = len(asg.free)
    delta = abs(nx - ny)
    return EdgeIdentity(
        m=g.m, x_size=nx, y_size=ny, free=free,
        product_form=nx * ny - free,
        floor_form=(g.n ** 2 - delta ** 2) // 4 - free,
    )


# ------------------------------------------------------------- orientation

@dataclass(frozen=True)
class FOrientation:
    """Arcs ``a -> b`` on the edges inside ``S_u`` and inside ``S_v``."""

    arcs: frozenset[tuple[int, int]]
    s_u: frozenset[int]
    s_v: frozenset[int]

    def out_nbrs(self, x: int) -> set[int]:
        return {b for a, b in self.arcs if a == x}

    def in_nbrs(self, x: int) -> set[int]:
        return {a for a, b in self.arcs if b == x}


def build_f_orientation(g: Graph, part: PartitionUV, asg: Assignment) -> FOrientation:
    arcs = set()
    for side in (part.s_u, part.s_v):
        for e in _inside_edges(g, side):
            b, _c = asg.mapping[e]
            a = e[0] if e[1] == b else e[1]
            arcs.add((a, b))
    return FOrientation(frozenset(arcs), part.s_u, part.s_v)


@dataclass
class Component:
    vertices: frozenset[int]
    arcs: int
    diameter: float          # underlying undirected graph
    directed_diameter: float  # max finite-or-not directed distance

    @property
    def nontrivial(self) -> bool:
        return self.arcs > 0


@dataclass
class OrientationFeatures:
    sources: set[int]
    sinks: set[int]
    cycles: list[tuple[int, ...]]
    transitive_triangles: list[tuple[int, int, int]]   # (source, middle, sink)
    components: list[Component]


def _directed_cycles(arcs: frozenset[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Simple directed cycles, each listed once starting from its least vertex."""
    out_map: dict[int, list[int]] = {}
    for a, b in arcs:
        out_map.setdefault(a, []).append(b)
    for v in out_map.values():
        v.sort()
    found = []

    def walk(start: int, cur: int, path: list[int], on: set[int]) -> None:
        for nxt in out_map.get(cur, ()):
            if nxt == start and len(path) >= 3:
                found.append(tuple(path))
            elif nxt > start and nxt not in on:
                path.append(nxt)
                on.add(nxt)
                walk(start, nxt, path, on)
                on.discard(nxt)
                path.pop()

    for s in sorted(out_map):
        walk(s, s, [s], {s})
    return found


def _distances(vertices: frozenset[int], succ) -> float:
    worst = 0.0
    for s in vertices:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in succ(x):
                    if y in vertices and y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if len(dist) < len(vertices):
            return float("inf")
        worst = max(worst, max(dist.values()))
    return worst


def orientation_features(o: FOrientation) -> OrientationFeatures:
    verts = set()
    for a, b in o.arcs:
        verts.update((a, b))
    outs = {x: o.out_nbrs(x) for x in verts}
    ins = {x: o.in_nbrs(x) for x in verts}
    sources = {x for x in verts if outs[x] and not ins[x]}
    sinks = {x for x in verts if ins[x] and not outs[x]}
    triangles = []
    for x in sorted(verts):
        for y in sorted(outs[x]):
            for z in sorted(outs[x] & outs[y]):
                triangles.append((x, y, z))
    und = {x: outs[x] | ins[x] for x in verts}
    comps = []
    seen: set[int] = set()
    for side in (o.s_u, o.s_v):
        for s in sorted(side):
            if s in seen:
                continue
            stack, comp = [s], {s}
            while stack:
                x = stack.pop()
                for y in und.get(x, ()):
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            fc = frozenset(comp)
            narcs = sum(1 for a, b in o.arcs if a in comp)
            comps.append(Component(
                vertices=fc, arcs=narcs,
                diameter=_distances(fc, lambda x: und.get(x, ())),
                directed_diameter=_distances(fc, lambda x: outs.get(x, ())),
            ))
    return OrientationFeatures(sources, sinks, _directed_cycles(o.arcs), triangles, comps)


# ------------------------------------------------------------------ bounds

@dataclass
class SideBound:
    side: str
    cycles: list[tuple[int, ...]]
    structures: list[frozenset[int]]
    c1: int
    c2: int

    @property
    def packing_bound(self) -> int:
        return sum(len(c) for c in self.cycles) + len(self.structures)

    @property
    def component_bound(self) -> int:
        return self.c1 + 2 * self.c2


@dataclass
class CertificateBound:
    u: int
    v: int
    sides: list[SideBound]
    free: int
    floor_bound: int  # floor(n^2/4)
    m: int
    diameter_disagreements: list[tuple[frozenset[int], float, float]] = field(default_factory=list)

    @property
    def implied_bound(self) -> int:
        return max([0] + [max(s.packing_bound, s.component_bound) for s in self.sides])

    @property
    def cycles(self):
        return [c for s in self.sides for c in s.cycles]

    @property
    def structures(self):
        return [c for s in self.sides for c in s.structures]

    @property
    def c1(self) -> int:
        return max([0] + [s.c1 for s in self.sides])

    @property
    def c2(self) -> int:
        return max([0] + [s.c2 for s in self.sides])

    @property
    def sound(self) -> bool:
        return self.m <= self.floor_bound - self.implied_bound and self.implied_bound <= self.free


def _side_bound(name: str, side: frozenset[int], o: FOrientation, feats: OrientationFeatures) -> SideBound:
    used: set[int] = set()
    cycles = []
    for cyc in sorted((c for c in feats.cycles if c[0] in side), key=lambda c: (-len(c), c)):
        if used.isdisjoint(cyc):
            cycles.append(cyc)
            used.update(cyc)
    structures: list[frozenset[int]] = []
    for tri in (t for t in feats.transitive_triangles if t[0] in side):
        if used.isdisjoint(tri):
            structures.append(frozenset(tri))
            used.update(tri)
    for x in sorted(feats.sinks & side):
        star = {x} | o.in_nbrs(x)
        if used.isdisjoint(star):
            structures.append(frozenset(star))
            used |= star
    for x in sorted(feats.sources & side):
        star = {x} | o.out_nbrs(x)
        if used.isdisjoint(star):
            structures.append(frozenset(star))
            used |= star
    c1 = c2 = 0
    for comp in feats.components:
        if comp.nontrivial and comp.vertices <= side:
            if comp.diameter >= 3:
                c2 += 1
            else:
                c1 += 1
    return SideBound(name, cycles, structures, c1, c2)


def certificate_bound(g: Graph, u: int, v: int) -> CertificateBound:
    part = partition_uv(g, u, v)
    if part.p_uv:
        raise ValueError("P_uv is nonempty; use verify_puv_matching for this edge")
    split = build_xy(part)
    asg = build_assignment(g, split)
    o = build_f_orientation(g, part, asg)
    feats = orientation_features(o)
    sides = [_side_bound("s_u", part.s_u, o, feats), _side_bound("s_v", part.s_v, o, feats)]
    disagreements = [(c.vertices, c.diameter, c.directed_diameter)
                     for c in feats.components if c.nontrivial and c.diameter != c.directed_diameter]
    return CertificateBound(part.u, part.v, sides, len(asg.free), g.n ** 2 // 4, g.m, disagreements)


# ----------------------------------------------------------- lemma checks

@dataclass
class LemmaReport:
    applicable: bool
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def tick(self, name: str) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1


def verify_orientation_lemmas(g: Graph, part: PartitionUV, asg: Assignment,
                              o: FOrientation) -> LemmaReport:
    """Check arc neighbourhoods, cycles, triangles, sinks and sources against free non-edges."""
    rep = LemmaReport(applicable=not part.p_uv)
    if part.p_uv:
        return rep
    feats = orientation_features(o)
    touched = {x for e in asg.free for x in e}
    for a, b in sorted(o.arcs):
        if a in touched or b in touched:
            continue
        rep.tick("arc")
        other = part.s_v if a in part.s_u else part.s_u
        na = {x for x in other if g.has_edge(a, x)}
        nb = {x for x in other if g.has_edge(b, x)}
        if not any(na == nb | {t} for t in other):
            rep.violations.append(f"arc {a}->{b}: neighbourhoods across are {sorted(na)} vs {sorted(nb)}")
    for cyc in feats.cycles:
        rep.tick("cycle")
        k = asg.free_incident(cyc)
        if k < len(cyc):
            rep.violations.append(f"directed cycle {cyc}: only {k} incident free non-edges")
    for x, y, z in feats.transitive_triangles:
        rep.tick("triangle")
        if not asg.free_incident([x]):
            rep.violations.append(f"transitive triangle {(x, y, z)}: no free non-edge at {x}")
    for x in sorted(feats.sinks):
        rep.tick("sink")
        if not asg.free_incident({x} | o.in_nbrs(x)):
            rep.violations.append(f"sink {x}: no free non-edge at its closed in-neighbourhood")
    for x in sorted(feats.sources):
        rep.tick("source")
        if not asg.free_incident({x} | o.out_nbrs(x)):
            rep.violations.append(f"source {x}: no free non-edge at its closed out-neighbourhood")
    return rep


def verify_puv_matching(g: Graph, part: PartitionUV, asg: Assignment) -> LemmaReport:
    """Matching between ``S_v(p)`` and ``S_u(p)`` for every ``p`` in ``P_uv``."""
    rep = LemmaReport(applicable=bool(part.p_uv))
    if not part.p_uv:
        return rep
    free = asg.free
    for p in sorted(part.p_uv):
        sv_p = sorted(x for x in part.s_v if pair(p, x) not in free)
        match: dict[int, int] = {}
        for x in sv_p:
            rep.tick("match")
            hits = [y for y in sorted(part.s_u) if g.has_edge(p, y)
                    and asg.mapping.get(pair(p, y)) == (p, x)]
            if not hits:
                rep.violations.append(f"p={p}: no m({x}) in S_u with f(p m) = p{x}")
                continue
            match[x] = hits[0]
        su_p = set(match.values())
        rep.tick("a")
        if len(su_p) != len(sv_p):
            rep.violations.append(f"p={p}: |S_u(p)|={len(su_p)} but |S_v(p)|={len(sv_p)}")
        rep.tick("b")
        for y in su_p:
            for x in sv_p:
                if g.has_edge(x, y) and match.get(x) != y:
                    rep.violations.append(f"p={p}: extra edge {x}-{y} between S_v(p) and S_u(p)")
        for x, y in combinations([x for x in sv_p if x in match], 2):
            rep.tick("c")
            mx, my = match[x], match[y]
            e1, e2 = g.has_edge(x, y), g.has_edge(mx, my)
            f1, f2 = pair(x, my) in free, pair(y, mx) in free
            if (e1 or e2) and not (f1 or f2):
                rep.violations.append(f"p={p}: edge among {x},{y} or their matches without a free non-edge")
            if e1 and e2 and not (f1 and f2):
                rep.violations.append(f"p={p}: both edges at {x},{y} but not both cross non-edges free")
    rep.tick("d")
    if len(part.s_u) < len(part.s_v) - len(free):
        rep.violations.append(f"|S_u|={len(part.s_u)} < |S_v| - free = {len(part.s_v) - len(free)}")
    return rep


# --------------------------------------------------------------- verdicts

@dataclass(frozen=True)
class BoundVerdicts:
    n: int
    m: int
    bipartite: bool
    dominating_edge: bool
    murty_simon_ok: bool
    murty_simon_equality: bool
    equality_case_ok: bool          # equality only on balanced complete bipartite graphs
    strengthened_attained: bool
    strengthened_exceeded: bool
    theorem4_applies: bool
    theorem4_ok: bool

    @property
    def ok(self) -> bool:
        return self.murty_simon_ok and self.equality_case_ok and self.theorem4_ok


def bound_verdicts(g: Graph) -> BoundVerdicts:
    n, m = g.n, g.m
    ms = n * n // 4
    bip = is_bipartite(g)
    dom = bool(dominating_edges(g))
    t4 = (not bip) and dom and not is_h5(g)
    return BoundVerdicts(
        n=n, m=m, bipartite=bip, dominating_edge=dom,
        murty_simon_ok=m <= ms,
        murty_simon_equality=m == ms,
        equality_case_ok=m != ms or is_balanced_complete_bipartite(g),
        strengthened_attained=m == strengthened_bound(n),
        strengthened_exceeded=m > strengthened_bound(n),
        theorem4_applies=t4,
        theorem4_ok=(not t4) or m <= ms - 2,
    )


# ------------------------------------------------------------ full bundle

@dataclass
class EdgeCertificate:
    """Everything built around one dominating edge."""

    part: PartitionUV
    split: XYSplit
    assignment: Assignment
    identity: EdgeIdentity
    orientation: FOrientation
    orientation_report: LemmaReport
    matching_report: LemmaReport
    bound: CertificateBound | None

    @property
    def ok(self) -> bool:
        return (self.identity.holds and self.assignment.is_injective()
                and self.orientation_report.ok and self.matching_report.ok
                and (self.bound is None or self.bound.sound))


def certify(g: Graph, u: int, v: int) -> EdgeCertificate:
    part = partition_uv(g, u, v)
    split = build_xy(part)
    asg = build_assignment(g, split)
    o = build_f_orientation(g, part, asg)
    return EdgeCertificate(
        part=part, split=split, assignment=asg,
        identity=verify_edge_identity(g, split, asg),
        orientation=o,
        orientation_report=verify_orientation_lemmas(g, part, asg, o),
        matching_report=verify_puv_matching(g, part, asg),
        bound=None if part.p_uv else certificate_bound(g, part.u, part.v),
    )
