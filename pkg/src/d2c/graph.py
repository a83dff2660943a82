"""Small simple graphs stored as bit rows, plus graph6 I/O.

Row ``i`` of a :class:`Graph` is an int whose bit ``j`` is set iff ``ij`` is
an edge. Orders are capped at 64 so a neighbourhood fits one machine word.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record. ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, x: int) -> list[int]:
        return list(bits(self.adj[x]))

    def closed(self, x: int) -> int:
        return self.adj[x] | 1 << x

    def degree(self, x: int) -> int:
        return self.adj[x].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a] >> (a + 1) << (a + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in combinations(range(self.n), 2) if not self.adj[a] >> b & 1]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``i`` becomes ``perm[i]``."""
        rows = [0] * self.n
        for i, row in enumerate(self.adj):
            new = 0
            for j in bits(row):
                new |= 1 << perm[j]
            rows[perm[i]] = new
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask(index[w] for w in bits(self.adj[v]) if w in index))
        return Graph(len(vertices), tuple(rows))

    def without_edge(self, a: int, b: int) -> "Graph":
        rows = list(self.adj)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        return Graph(self.n, tuple(rows))

    def with_vertex(self, neighbourhood: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices in ``neighbourhood``."""
        rows = [row | (neighbourhood >> i & 1) << self.n for i, row in enumerate(self.adj)]
        rows.append(neighbourhood)
        return Graph(self.n + 1, tuple(rows))

    def __str__(self) -> str:
        return to_graph6(self)


# --------------------------------------------------------------------- graph6

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    s = line.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 record", offset)
    data = [ord(c) - 63 for c in s]
    for pos, v in enumerate(data):
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {s[pos]!r} outside the graph6 range", offset + pos)
    if data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("truncated extended length", offset + len(data))
        if data[1] == 63:
            raise Graph6Error("orders above 258047 are not supported", offset + 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        body_start = 4
    else:
        n = data[0]
        body_start = 1
    if n < 1 or n > MAX_ORDER:
        raise Graph6Error(f"order {n} outside 1..{MAX_ORDER}", offset)
    nbits = n * (n - 1) // 2
    expected = body_start + (nbits + 5) // 6
    if len(data) < expected:
        raise Graph6Error(f"expected {expected} bytes for n={n}, got {len(data)}", offset + len(data))
    if len(data) > expected:
        raise Graph6Error("trailing garbage", offset + expected)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[body_start + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = data[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", offset + expected - 1)
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ------------------------------------------------------------ basic analyses

def two_ball(adj: Sequence[int], x: int) -> int:
    """Vertices at distance at most 2 from ``x``."""
    ball = adj[x] | 1 << x
    for y in bits(adj[x]):
        ball |= adj[y]
    return ball


def diameter(g: Graph) -> int | float:
    """Diameter by bit-parallel neighbourhood closure; ``math.inf`` if disconnected."""
    full = g.full
    adj = g.adj
    best = 0
    for x in range(g.n):
        reach = 1 << x
        frontier = reach
        d = 0
        while reach != full:
            nxt = 0
            for y in bits(frontier):
                nxt |= adj[y]
            frontier = nxt & ~reach
            if not frontier:
                return math.inf
            reach |= frontier
            d += 1
        best = max(best, d)
    return best


def has_diameter_at_most_two(adj: Sequence[int], n: int) -> bool:
    full = (1 << n) - 1
    return all(two_ball(adj, x) == full for x in range(n))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def bipartition(g: Graph) -> tuple[int, ...] | None:
    """A proper 2-colouring as a tuple of 0/1 colours, or None if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in bits(g.adj[x]):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    return tuple(colour)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of vertices with equal open neighbourhoods, ordered by least member."""
    by_row: dict[int, list[int]] = {}
    for x, row in enumerate(g.adj):
        by_row.setdefault(row, []).append(x)
    return sorted(by_row.values())


def twin_quotient(g: Graph) -> tuple[Graph, list[list[int]]]:
    """Graph on the twin classes (adjacent iff members are) and the classes themselves."""
    classes = twin_classes(g)
    reps = [c[0] for c in classes]
    return g.induced(reps), classes


def is_connected(g: Graph) -> bool:
    return diameter(g) != math.inf


# ------------------------------------------------------------ named fixtures

def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
