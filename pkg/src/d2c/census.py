"""Exhaustive census of D2C graphs of one order, with sharding and merging.

Every isomorphism class within the chosen edge and degree limits is produced
once by canonical augmentation, tested for D2C-ness and classified. Counts
and canonical graph6 witnesses go into a ``SearchReport``.

Modes
-----
``full``      every graph of order ``n``; nothing is pruned.
``d2c``       edge counts up to ``n^2/4`` and minimum degree at least one.
              Safe for D2C questions as long as the Murty-Simon bound is known
              at this order.
``extremal``  exactly ``(n-1)^2/4 + 1`` edges and minimum degree at least two:
              enough for the strengthened-bound census (a D2C graph with a
              degree-one vertex is a star).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .analysis import dominating_edges, is_d2c, is_d2c_rows
from .canon import canonical_graph6
from .families import is_balanced_complete_bipartite, is_h5, is_in_c5plus, strengthened_bound
from .generate import Bounds, generate_rows, prefix_nodes
from .graph import Graph, bipartition, complement, diameter, is_bipartite, parse_graph6

MODES = ("full", "d2c", "extremal")

COUNT_KEYS = (
    "total_graphs",
    "d2c",
    "d2c_bipartite",
    "d2c_nonbipartite",
    "with_dominating_edge",
    "nonbipartite_with_dominating_edge",
    "attaining_murty_simon",
    "murty_simon_violations",
    "bipartite_not_complete",
    "attaining_strengthened",
    "exceeding_strengthened",
    "c5plus_members",
    "exceptions_not_in_c5plus",
    "exceptions_with_dominating_edge",
    "theorem4_violations",
    "complement_violations",
    "max_degree_n_minus_2",
)

WITNESS_KEYS = (
    "attaining_murty_simon",
    "murty_simon_violations",
    "bipartite_not_complete",
    "attaining_strengthened",
    "exceeding_strengthened",
    "exceptions_not_in_c5plus",
    "theorem4_violations",
    "complement_violations",
    "max_degree_n_minus_2",
)

# counts that must be zero on a correct run
VIOLATION_KEYS = ("murty_simon_violations", "bipartite_not_complete",
                  "theorem4_violations", "complement_violations")


@dataclass(frozen=True)
class CensusOptions:
    mode: str = "d2c"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")

    def bounds(self, n: int) -> Bounds:
        if self.mode == "full":
            return Bounds(n)
        if self.mode == "d2c":
            return Bounds(n, max_edges=n * n // 4, min_degree=1 if n > 1 else 0)
        target = strengthened_bound(n)
        return Bounds(n, min_edges=target, max_edges=target, min_degree=2 if n > 2 else 0)


@dataclass(frozen=True)
class ShardSpec:
    n: int
    mode: str
    depth: int
    index: int
    count: int


@dataclass(frozen=True)
class Coverage:
    depth: int = 0
    count: int = 1
    indices: tuple[int, ...] = (0,)

    @property
    def complete(self) -> bool:
        return self.indices == tuple(range(self.count))


@dataclass
class SearchReport:
    n: int
    mode: str
    counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(COUNT_KEYS, 0))
    witnesses: dict[str, list[str]] = field(default_factory=lambda: {k: [] for k in WITNESS_KEYS})
    coverage: Coverage = field(default_factory=Coverage, compare=False)

    @property
    def violations(self) -> int:
        return sum(self.counts[k] for k in VIOLATION_KEYS)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "counts": {k: self.counts[k] for k in COUNT_KEYS},
            "witnesses": {k: sorted(self.witnesses[k]) for k in WITNESS_KEYS},
            "coverage": {"depth": self.coverage.depth, "count": self.coverage.count,
                         "indices": list(self.coverage.indices)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        cov = d.get("coverage", {})
        return cls(
            n=d["n"],
            mode=d["mode"],
            counts={k: int(d["counts"].get(k, 0)) for k in COUNT_KEYS},
            witnesses={k: sorted(d["witnesses"].get(k, [])) for k in WITNESS_KEYS},
            coverage=Coverage(cov.get("depth", 0), cov.get("count", 1), tuple(cov.get("indices", (0,)))),
        )

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        return cls.from_dict(json.loads(text))

    def problems(self) -> list[str]:
        """Internal consistency failures; empty when the report is sound."""
        out = []
        if not set(self.witnesses["exceptions_not_in_c5plus"]) <= set(self.witnesses["attaining_strengthened"]):
            out.append("exception witness missing from attaining_strengthened")
        for key in WITNESS_KEYS:
            if len(self.witnesses[key]) != self.counts[key]:
                out.append(f"{key}: {self.counts[key]} counted, {len(self.witnesses[key])} witnesses")
            for line in self.witnesses[key]:
                if not is_d2c(parse_graph6(line)):
                    out.append(f"{key}: witness {line} is not D2C")
        return out


def _classify(report: SearchReport, g: Graph) -> None:
    c, w = report.counts, report.witnesses
    n, m = g.n, g.m
    c["d2c"] += 1
    label = None

    def note(key: str) -> None:
        nonlocal label
        c[key] += 1
        if key in w:
            if label is None:
                label = canonical_graph6(g)
            w[key].append(label)

    bip = is_bipartite(g)
    dom = bool(dominating_edges(g))
    ms = n * n // 4
    if m == ms:
        note("attaining_murty_simon")
    if m > ms or (m == ms) != is_balanced_complete_bipartite(g):
        note("murty_simon_violations")
    if dom:
        c["with_dominating_edge"] += 1
    if bip:
        c["d2c_bipartite"] += 1
        if m != _bipartite_edges(g):
            note("bipartite_not_complete")
        return
    c["d2c_nonbipartite"] += 1
    if dom:
        c["nonbipartite_with_dominating_edge"] += 1
        if not is_h5(g) and m > ms - 2:
            note("theorem4_violations")
    cd = diameter(complement(g))
    if cd not in (2, 3) or dom != (cd == 3):
        note("complement_violations")
    if g.max_degree() == n - 2:
        note("max_degree_n_minus_2")
    sb = strengthened_bound(n)
    if m > sb:
        note("exceeding_strengthened")
    elif m == sb:
        note("attaining_strengthened")
        if is_in_c5plus(g):
            c["c5plus_members"] += 1
        else:
            note("exceptions_not_in_c5plus")
            if dom:
                c["exceptions_with_dominating_edge"] += 1


def _bipartite_edges(g: Graph) -> int:
    """Edge count of the complete bipartite graph on g's colour classes."""
    side = bipartition(g)
    a = sum(side)
    return a * (g.n - a)


def _run(n: int, options: CensusOptions, depth: int, index: int, count: int) -> SearchReport:
    report = SearchReport(n, options.mode, coverage=Coverage(depth, count, (index,)))
    for rows in generate_rows(options.bounds(n), depth, index, count):
        report.counts["total_graphs"] += 1
        if is_d2c_rows(rows, n):
            _classify(report, Graph(n, tuple(rows)))
    for key in WITNESS_KEYS:
        report.witnesses[key].sort()
    return report


def census(n: int, options: CensusOptions | None = None) -> SearchReport:
    """Classify every graph of order ``n`` allowed by ``options``."""
    options = options or CensusOptions()
    if not 1 <= n <= 64:
        raise ValueError("order must be in 1..64")
    return _run(n, options, 0, 0, 1)


def shard(n: int, prefix_depth: int, options: CensusOptions | None = None,
          count: int | None = None) -> list[ShardSpec]:
    """Split the census of order ``n`` by its first ``prefix_depth`` augmentation steps.

    Without ``count`` every prefix node becomes its own shard; otherwise the
    prefixes are dealt round-robin onto ``count`` shards.
    """
    options = options or CensusOptions()
    if prefix_depth < 0:
        raise ValueError("prefix depth must be non-negative")
    if prefix_depth == 0:
        k = 1 if count is None else count
    elif count is None:
        k = max(1, len(prefix_nodes(options.bounds(n), prefix_depth)))
    else:
        k = count
    if k < 1:
        raise ValueError("shard count must be positive")
    return [ShardSpec(n, options.mode, prefix_depth, i, k) for i in range(k)]


def census_shard(spec: ShardSpec) -> SearchReport:
    return _run(spec.n, CensusOptions(spec.mode), spec.depth, spec.index, spec.count)


def merge(reports: Iterable[SearchReport], *, complete: bool = True) -> SearchReport:
    """Sum counts and union witnesses of shard reports of one census.

    Raises ValueError on mismatched runs, on a shard seen twice and, when
    ``complete``, on any missing shard.
    """
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    key = (first.n, first.mode, first.coverage.depth, first.coverage.count)
    seen: set[int] = set()
    out = SearchReport(first.n, first.mode)
    for r in reports:
        if (r.n, r.mode, r.coverage.depth, r.coverage.count) != key:
            raise ValueError("reports come from different runs")
        overlap = seen & set(r.coverage.indices)
        if overlap:
            raise ValueError(f"shards {sorted(overlap)} appear more than once")
        seen |= set(r.coverage.indices)
        for k in COUNT_KEYS:
            out.counts[k] += r.counts[k]
        for k in WITNESS_KEYS:
            out.witnesses[k].extend(r.witnesses[k])
    missing = set(range(key[3])) - seen
    if complete and missing:
        raise ValueError(f"shards {sorted(missing)} are missing")
    for k in WITNESS_KEYS:
        out.witnesses[k].sort()
    out.coverage = Coverage(key[2], key[3], tuple(sorted(seen)))
    return out
