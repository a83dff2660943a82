import json

import pytest

from d2c.canon import canonical_graph6
from d2c.census import (COUNT_KEYS, CensusOptions, SearchReport, census, census_shard, merge,
                        shard)
from d2c.graph import cycle, is_bipartite

from oracles import d2c_graphs


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_against_oracle_stream(n):
    rep = census(n, CensusOptions("full"))
    d2c = d2c_graphs(n)
    assert rep.counts["d2c"] == len(d2c)
    assert rep.counts["d2c_bipartite"] == sum(is_bipartite(g) for g in d2c)
    assert rep.problems() == []
    assert rep.violations == 0


def test_small_orders():
    assert census(5).witnesses["attaining_strengthened"] == [canonical_graph6(cycle(5))]
    assert census(6).witnesses["exceptions_not_in_c5plus"] == []
    rep = census(7)
    assert rep.counts["exceptions_not_in_c5plus"] == 3
    assert rep.counts["exceptions_not_in_c5plus"] <= rep.counts["attaining_strengthened"]


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_modes_agree_on_d2c_questions(n):
    full = census(n, CensusOptions("full"))
    pruned = census(n, CensusOptions("d2c"))
    extremal = census(n, CensusOptions("extremal"))
    assert full.witnesses == pruned.witnesses
    assert full.counts["d2c"] == pruned.counts["d2c"]
    for key in ("attaining_strengthened", "exceptions_not_in_c5plus"):
        assert extremal.witnesses[key] == full.witnesses[key]


def test_depth_zero_single_shard():
    specs = shard(6, 0)
    assert len(specs) == 1
    assert census_shard(specs[0]) == census(6)


def test_sharded_order_eight_equals_unsharded():
    specs = shard(8, 2)
    assert len(specs) > 1
    merged = merge(census_shard(s) for s in specs)
    assert merged == census(8)
    assert merged.to_dict()["counts"] == census(8).to_dict()["counts"]


def test_shard_totals_order_seven():
    specs = shard(7, 3, CensusOptions("full"), count=5)
    assert sum(census_shard(s).counts["total_graphs"] for s in specs) == 1044


def test_merge_rejects_overlap_and_gaps():
    specs = shard(7, 2, count=3)
    parts = [census_shard(s) for s in specs]
    with pytest.raises(ValueError):
        merge(parts + parts[:1])
    with pytest.raises(ValueError):
        merge(parts[:2])
    partial = merge(parts[:2], complete=False)
    assert partial.coverage.indices == (0, 1)
    with pytest.raises(ValueError):
        merge([parts[0], census(8)])
    with pytest.raises(ValueError):
        merge([])


def test_json_round_trip_is_byte_stable():
    rep = census(7)
    text = rep.to_json()
    assert SearchReport.from_json(text).to_json() == text
    assert census(7).to_json() == text
    assert list(json.loads(text)["counts"]) == list(COUNT_KEYS)


def test_unknown_mode():
    with pytest.raises(ValueError):
        CensusOptions("fast")
