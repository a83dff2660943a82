"""Constructors and recognisers for the named D2C graphs and families.

Vertex layouts
--------------
``t_family(n)``: ``u = 0``, ``v = 1``, ``a_i = 2..k+1``, ``b_i = k+2..2k+1``
and, for odd ``n``, ``w = 2k+2``.

``c5_expansion(s1, s2, s3)``: the three twin classes ``X1, X2, X3`` in that
order, then the plain vertex next to ``X3`` and finally the one next to ``X1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .analysis import dominating_edges, is_d2c
from .canon import canonical_form
from .graph import Graph, bits, is_bipartite, twin_quotient


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts need at least one vertex")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def is_balanced_complete_bipartite(g: Graph) -> bool:
    for a in (g.n // 2, (g.n + 1) // 2):
        if a == 0 or a == g.n:
            continue
        if g.m == a * (g.n - a) and is_bipartite(g):
            return True
    return False


# ------------------------------------------------------------------ C5+

def strengthened_bound(n: int) -> int:
    return (n - 1) ** 2 // 4 + 1


@dataclass(frozen=True)
class C5PlusSpec:
    s1: int
    s2: int
    s3: int

    @property
    def n(self) -> int:
        return self.s1 + self.s2 + self.s3 + 2

    def middle_size_ok(self) -> bool:
        return self.s2 in ((self.n - 3) // 2, (self.n - 2) // 2)


def c5_expansion(s1: int | C5PlusSpec, s2: int | None = None, s3: int | None = None, *,
                 relaxed: bool = False) -> Graph:
    """Blow three consecutive 5-cycle vertices up into independent twin classes.

    Unless ``relaxed``, the middle class size must be within one half of
    ``n - 3`` so that the result is a member of the extremal family.
    """
    spec = s1 if isinstance(s1, C5PlusSpec) else C5PlusSpec(s1, s2, s3)
    if min(spec.s1, spec.s2, spec.s3) < 1:
        raise ValueError("class sizes must be positive")
    if not relaxed and not spec.middle_size_ok():
        raise ValueError(f"middle class size {spec.s2} is not (n-3)/2 rounded for n={spec.n}")
    x1 = range(spec.s1)
    x2 = range(spec.s1, spec.s1 + spec.s2)
    x3 = range(spec.s1 + spec.s2, spec.s1 + spec.s2 + spec.s3)
    p, q = spec.n - 2, spec.n - 1
    edges = [(a, b) for a in x1 for b in x2] + [(b, c) for b in x2 for c in x3]
    edges += [(c, p) for c in x3] + [(p, q)] + [(q, a) for a in x1]
    return Graph.from_edges(spec.n, edges)


def c5plus_members(n: int) -> list[C5PlusSpec]:
    """Class-size triples of the order-``n`` members, one per isomorphism class."""
    out = []
    seen = set()
    for s2 in sorted({(n - 3) // 2, (n - 2) // 2}):
        rest = n - 2 - s2
        for s1 in range(1, rest // 2 + 1):
            if s2 < 1 or rest - s1 < 1:
                continue
            spec = C5PlusSpec(s1, s2, rest - s1)
            form = canonical_form(c5_expansion(spec))
            if form not in seen:
                seen.add(form)
                out.append(spec)
    return out


def is_in_c5plus(g: Graph) -> bool:
    """Twin quotient is a 5-cycle with two adjacent singleton classes and a
    middle opposite class of the required size."""
    if g.n < 5:
        return False
    q, classes = twin_quotient(g)
    if q.n != 5 or q.m != 5 or any(q.degree(x) != 2 for x in range(5)):
        return False
    # a 2-regular graph on five vertices is the 5-cycle; walk it
    order = [0]
    prev, cur = -1, 0
    for _ in range(4):
        nxt = next(y for y in bits(q.adj[cur]) if y != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    sizes = [len(classes[x]) for x in order]
    for i in range(5):
        # positions i, i+1 hold the plain vertices; i+3 is the middle class
        if sizes[i] == 1 and sizes[(i + 1) % 5] == 1:
            spec = C5PlusSpec(sizes[(i + 2) % 5], sizes[(i + 3) % 5], sizes[(i + 4) % 5])
            if spec.middle_size_ok():
                return True
    return False


# ------------------------------------------------------------------ T_n

def t_family(n: int) -> Graph:
    """The twin-free D2C graph of order ``n`` with maximum degree ``n - 2``."""
    if n < 6:
        raise ValueError("T_n is defined for n >= 6")
    k = (n - 2) // 2
    u, v = 0, 1
    a = list(range(2, 2 + k))
    b = list(range(2 + k, 2 + 2 * k))
    edges = []
    for ai, bi in zip(a, b):
        edges += [(ai, bi), (u, ai), (u, bi), (v, bi)]
    if n % 2:
        w = 2 + 2 * k
        edges += [(w, u), (w, v)]
    return Graph.from_edges(n, edges)


def h5() -> Graph:
    return t_family(6)


@lru_cache(maxsize=None)
def _h5_form() -> bytes:
    return canonical_form(h5())


def is_h5(g: Graph) -> bool:
    if g.n != 6 or g.m != 8:
        return False
    return canonical_form(g) == _h5_form()


def expand_twins(g: Graph, counts: dict[int, int]) -> Graph:
    """Replace vertex ``x`` by ``counts[x]`` pairwise twins (new copies appended)."""
    cur = g
    for x in sorted(counts):
        for _ in range(counts[x] - 1):
            cur = add_twin(cur, x)
    return cur


def add_twin(g: Graph, vtx: int) -> Graph:
    return g.with_vertex(g.adj[vtx])


def twin_addable(g: Graph, vtx: int) -> bool:
    """Condition under which an added open twin of ``vtx`` keeps a D2C graph D2C.

    For every ``w`` forming a triangle with ``vtx`` there must be a non-neighbour
    ``x`` of ``vtx`` whose common neighbourhood with ``vtx`` is exactly ``{w}``.
    """
    nv = g.adj[vtx]
    non_nbrs = g.full & ~nv & ~(1 << vtx)
    for w in bits(nv):
        if not g.adj[w] & nv:
            continue
        if not any(g.adj[x] & nv == 1 << w for x in bits(non_nbrs)):
            return False
    return True


def _partitions(total: int, parts: int, cap: int | None = None):
    """Non-increasing tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    cap = total if cap is None else cap
    for first in range(min(total, cap), -1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def tprime_members(n: int) -> list[Graph]:
    """Order-``n`` members of the twin-expanded T family, one per class."""
    if n < 6:
        return []
    seen: dict[bytes, Graph] = {}
    for base_n in range(6, n + 1):
        base = t_family(base_n)
        k = (base_n - 2) // 2
        a = list(range(2, 2 + k))
        slots_w = [2 + 2 * k] if base_n % 2 else []
        extra = n - base_n
        for on_w in range(extra + 1 if slots_w else 1):
            for extra_a in _partitions(extra - on_w, k):
                counts = {x: 1 + e for x, e in zip(a, extra_a) if e}
                if on_w:
                    counts[slots_w[0]] = 1 + on_w
                g = expand_twins(base, counts)
                seen.setdefault(canonical_form(g), g)
    return [seen[f] for f in sorted(seen)]


def is_in_tprime(g: Graph) -> bool:
    """Twin quotient is some ``T_k`` and only ``A`` or ``w`` classes have size > 1."""
    q, classes = twin_quotient(g)
    k = q.n
    if k < 6 or q.m != 2 * k - 4:
        return False
    degs = q.degrees()
    tops = [x for x in range(k) if degs[x] == k - 2]
    if len(tops) != 1:
        return False
    u = tops[0]
    non = [x for x in range(k) if x != u and not q.has_edge(u, x)]
    if len(non) != 1:
        return False
    v = non[0]
    nu, nv = q.adj[u], q.adj[v]
    a_side = nu & ~nv
    both = nu & nv
    w_side = [x for x in bits(both) if degs[x] == 2]
    if len(w_side) > 1:
        return False
    b_side = both & ~(sum(1 << x for x in w_side))
    if a_side.bit_count() != b_side.bit_count() or a_side.bit_count() < 2:
        return False
    if len(w_side) != k % 2:
        return False
    # rebuild T_k on this labelling and compare
    edges = set()
    for ai in bits(a_side):
        partners = [bi for bi in bits(b_side) if q.has_edge(ai, bi)]
        if len(partners) != 1 or q.adj[ai] != (1 << u | 1 << partners[0]):
            return False
    for bi in bits(b_side):
        if q.adj[bi].bit_count() != 3:
            return False
    for x in w_side:
        if q.adj[x] != (1 << u | 1 << v):
            return False
    if nv != b_side | sum(1 << x for x in w_side):
        return False
    expandable = a_side | sum(1 << x for x in w_side)
    return all(len(classes[x]) == 1 or expandable >> x & 1 for x in range(k))


# ------------------------------------------------------------- conclusion

def conclusion_construction(s: int) -> Graph:
    """``T_7`` with ``v`` and ``w`` each blown up into ``s`` twins; order ``2s + 5``."""
    if s < 1:
        raise ValueError("s must be positive")
    base = t_family(7)
    v, w = 1, 6
    return expand_twins(base, {v: s, w: s})


def conclusion_edges(n: int) -> int:
    return ((n - 2) ** 2 + 15) // 4


# ----------------------------------------------------- Δ = n-2 characterisation

@dataclass(frozen=True)
class MaxDegreeVerdict:
    n: int
    found: tuple[str, ...]       # canonical graph6 of search results
    expected: tuple[str, ...]    # canonical graph6 of the T' members
    @property
    def equal(self) -> bool:
        return self.found == self.expected


def max_degree_characterization(n: int, graphs=None) -> MaxDegreeVerdict:
    """Compare non-bipartite D2C graphs with Δ = n-2 against the T' members.

    ``graphs`` defaults to an exhaustive isomorph-free stream of order ``n``.
    """
    from .generate import generate

    if graphs is None:
        graphs = generate(n, min_degree=2)
    found = set()
    for g in graphs:
        if g.max_degree() == n - 2 and is_d2c(g) and not is_bipartite(g):
            found.add(canonical_form(g).decode())
    expected = {canonical_form(g).decode() for g in tprime_members(n)}
    return MaxDegreeVerdict(n, tuple(sorted(found)), tuple(sorted(expected)))


FAMILY_NAMES = ("kab", "c5plus", "t", "tprime", "conclusion", "h5")


def has_dominating_edge(g: Graph) -> bool:
    return bool(dominating_edges(g))


def figure3_graphs() -> list[Graph]:
    """The thirteen exceptional extremal graphs (orders 7-9) pinned by a census run."""
    from importlib.resources import files

    from .graph import parse_graph6

    text = files("d2c").joinpath("data/figure3.g6").read_text()
    return [parse_graph6(line) for line in text.split()]
