import networkx as nx
import pytest
from hypothesis import given, settings

from d2c.analysis import (InconsistencyError, NotDominatingError, critical_pairs, dominating_edges,
                          is_d2c, is_d2c_by_definition, observation_shape_ok, pair, partition_uv,
                          verify_structure)
from d2c.families import complete_bipartite, h5, t_family
from d2c.graph import Graph, complete, cycle, petersen

from oracles import all_graphs, critical_by_networkx, d2c_by_networkx, d2c_upto, graphs, to_nx


def test_c5_critical_pairs():
    g = cycle(5)
    assert critical_pairs(g, (0, 1)) == {(0, 1), (0, 2), (1, 4)}


def test_k33_critical_pairs_only_the_edge():
    g = complete_bipartite(3, 3)
    assert critical_pairs(g, (0, 3)) == {(0, 3)}


def test_critical_pairs_rejects_non_edge():
    with pytest.raises(ValueError):
        critical_pairs(cycle(5), (0, 2))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_critical_pairs_match_networkx(g):
    for e in g.edges():
        got = critical_pairs(g, e)
        assert got == critical_by_networkx(g, e)
        assert all(observation_shape_ok(g, e, p) for p in got)


@pytest.mark.parametrize("g, expect", [
    (cycle(5), True), (complete_bipartite(3, 3), True), (petersen(), True),
    (complete(4), False), (complete_bipartite(1, 5), True), (complete(2), False),
    (Graph(1, (0,)), False),
])
def test_d2c_examples(g, expect):
    assert is_d2c(g) is expect
    assert is_d2c_by_definition(g) is expect


@pytest.mark.parametrize("n", range(2, 8))
def test_d2c_agrees_with_networkx_exhaustively(n):
    for g in all_graphs(n):
        assert is_d2c(g) == d2c_by_networkx(g), str(g)


def test_dominating_edges_examples():
    assert dominating_edges(cycle(5)) == []
    assert dominating_edges(petersen()) == []
    edges = dominating_edges(h5())
    # in the layout u=0, v=1, a=2,3, b=4,5 the dominating edges are u b_i
    assert edges == [(0, 4), (0, 5)]


def test_dominating_edges_brute_force():
    for g in all_graphs(6):
        want = [(a, b) for a, b in g.edges()
                if all(x in (a, b) or g.has_edge(a, x) or g.has_edge(b, x) for x in range(g.n))]
        assert dominating_edges(g) == want


def test_partition_k33():
    part = partition_uv(complete_bipartite(3, 3), 0, 3)
    assert part.p_uv == part.s_uv == frozenset()
    assert part.s_u == {4, 5} and part.s_v == {1, 2}


def test_partition_h5():
    part = partition_uv(h5(), 0, 4)
    assert part.sizes() == {"p_uv": 1, "s_uv": 1, "s_u": 1, "s_v": 1}
    assert verify_structure(h5(), part).ok


def test_partition_t8_every_dominating_edge():
    g = t_family(8)
    for u, v in dominating_edges(g):
        part = partition_uv(g, u, v)
        parts = [{part.u}, {part.v}, part.p_uv, part.s_uv, part.s_u, part.s_v]
        assert sum(len(p) for p in parts) == g.n
        assert set().union(*parts) == set(range(g.n))


def test_partition_rejects_non_dominating():
    with pytest.raises(NotDominatingError):
        partition_uv(cycle(5), 0, 1)


def _partition_by_definition(g, u, v):
    h = to_nx(g)
    h.remove_edge(u, v)
    dist = dict(nx.all_pairs_shortest_path_length(h))
    p = {x for x in range(g.n) if x not in (u, v)
         and (dist[x].get(u, 99) > 2 or dist[x].get(v, 99) > 2)}
    return p


def test_partition_invariants_up_to_nine():
    """Partition sets, normalisation and the structure checks on every dominating edge."""
    seen = 0
    for g in d2c_upto(9):
        for u, v in dominating_edges(g):
            part = partition_uv(g, u, v)
            seen += 1
            assert part.p_uv == _partition_by_definition(g, part.u, part.v)
            nu, nv = set(g.neighbors(part.u)) - {part.v}, set(g.neighbors(part.v)) - {part.u}
            assert not part.p_uv & nv
            assert part.s_uv == (nu & nv)
            assert part.s_u == nu - nv - part.p_uv
            assert part.s_v == nv - nu - part.p_uv
            assert verify_structure(g, part).ok, (str(g), u, v)
    assert seen > 100


def test_d2c_bipartite_graphs_are_complete_bipartite():
    for g in d2c_upto(9):
        if nx.is_bipartite(to_nx(g)):
            a, b = nx.bipartite.sets(to_nx(g))
            assert g.m == len(a) * len(b)


def test_pair_normalises():
    assert pair(3, 1) == (1, 3)
    with pytest.raises(ValueError):
        pair(2, 2)


def test_inconsistency_error_is_runtime_error():
    assert issubclass(InconsistencyError, RuntimeError)
