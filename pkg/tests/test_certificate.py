import pytest

from d2c.analysis import dominating_edges, partition_uv
from d2c.certificate import (FOrientation, build_assignment, build_f_orientation, build_xy,
                             bound_verdicts, certificate_bound, certify, orientation_features,
                             verify_edge_identity)
from d2c.families import complete_bipartite, figure3_graphs, h5, is_h5, t_family
from d2c.graph import is_bipartite

from oracles import critical_by_networkx, d2c_upto


def _instances(n):
    for g in d2c_upto(n):
        for u, v in dominating_edges(g):
            yield g, u, v


def test_k33_split_and_assignment():
    g = complete_bipartite(3, 3)
    part = partition_uv(g, 0, 3)
    split = build_xy(part)
    assert {split.x_side, split.y_side} == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    asg = build_assignment(g, split)
    assert asg.mapping == {} and asg.free == frozenset() and asg.cross_non_edges == frozenset()


def test_h5_assignment_by_enumeration():
    g = h5()
    part = partition_uv(g, 0, 4)
    split = build_xy(part)
    assert (len(split.x_side), len(split.y_side)) == (4, 2)
    asg = build_assignment(g, split)
    assert len(asg.mapping) == 2
    assert len(asg.cross_non_edges) == 2
    assert asg.free == frozenset()
    for e, (b, c) in asg.mapping.items():
        crit = critical_by_networkx(g, e)
        options = sorted((x, y) for x in e for y in range(g.n)
                         if (x in split.x_side) != (y in split.x_side)
                         and tuple(sorted((x, y))) in crit)
        assert (b, c) == options[0]


def test_assignment_is_valid_critical_witness_up_to_eight():
    for g, u, v in _instances(8):
        part = partition_uv(g, u, v)
        split = build_xy(part)
        asg = build_assignment(g, split)
        for e, (b, c) in asg.mapping.items():
            assert b in e
            assert (b in split.x_side) != (c in split.x_side)
            assert not g.has_edge(b, c)
            assert tuple(sorted((b, c))) in critical_by_networkx(g, e)
        cross_non = {(a, b) for a in range(g.n) for b in range(a + 1, g.n)
                     if (a in split.x_side) != (b in split.x_side) and not g.has_edge(a, b)}
        assert asg.cross_non_edges == cross_non
        assert asg.free == cross_non - {tuple(sorted(x)) for x in asg.mapping.values()}


def test_identity_every_dominating_edge_up_to_nine():
    for g, u, v in _instances(9):
        part = partition_uv(g, u, v)
        split = build_xy(part)
        asg = build_assignment(g, split)
        assert asg.is_injective()
        ident = verify_edge_identity(g, split, asg)
        assert ident.holds, (str(g), u, v)
        d = abs(len(split.x_side) - len(split.y_side))
        assert g.m == (g.n ** 2 - d ** 2) // 4 - len(asg.free)


def test_orientation_is_empty_on_independent_sides():
    g = complete_bipartite(3, 4)
    part = partition_uv(g, 0, 3)
    asg = build_assignment(g, build_xy(part))
    assert build_f_orientation(g, part, asg).arcs == frozenset()
    b = certificate_bound(g, 0, 3)
    assert b.implied_bound == 0 and b.sound


def test_orientation_features_small_cases():
    side = frozenset({0, 1, 2})
    f = orientation_features(FOrientation(frozenset({(0, 1)}), side, frozenset()))
    assert f.sources == {0} and f.sinks == {1} and f.cycles == []
    f = orientation_features(FOrientation(frozenset({(0, 1), (1, 2), (2, 0)}), side, frozenset()))
    assert not f.sources and not f.sinks and [len(c) for c in f.cycles] == [3]
    f = orientation_features(FOrientation(frozenset({(0, 1), (0, 2), (1, 2)}), side, frozenset()))
    assert f.transitive_triangles == [(0, 1, 2)]
    f = orientation_features(FOrientation(frozenset({(0, 1)}), frozenset({0, 1, 2}), frozenset()))
    assert 2 not in f.sources | f.sinks


def test_certificate_bound_rejects_nonempty_puv():
    with pytest.raises(ValueError):
        certificate_bound(h5(), 0, 4)


def test_lemma_checks_and_bounds_up_to_nine():
    arcs_seen = 0
    for g, u, v in _instances(9):
        cert = certify(g, u, v)
        assert cert.ok, (str(g), u, v, cert.orientation_report.violations, cert.matching_report.violations)
        arcs_seen += len(cert.orientation.arcs)
        if cert.bound is not None:
            b = cert.bound
            assert b.implied_bound <= b.free
            assert g.m <= g.n ** 2 // 4 - b.implied_bound
            if b.c1 or b.c2:
                assert b.implied_bound >= 1
    assert arcs_seen > 0


def test_exceptional_order_eight_graph_with_nonempty_orientation():
    found = False
    for g in figure3_graphs():
        if g.n != 8:
            continue
        for u, v in dominating_edges(g):
            cert = certify(g, u, v)
            assert cert.ok
            found |= bool(cert.orientation.arcs)
    assert found


def test_h5_and_t8_matching_checks():
    cert = certify(h5(), 0, 4)
    assert cert.matching_report.applicable and cert.matching_report.ok
    assert cert.matching_report.checked["match"] == 1
    g = t_family(8)
    for u, v in dominating_edges(g):
        rep = certify(g, u, v).matching_report
        assert rep.ok


def test_bound_verdicts():
    v = bound_verdicts(h5())
    assert v.theorem4_applies is False and v.ok and v.m == 9 - 1
    v = bound_verdicts(complete_bipartite(3, 3))
    assert v.murty_simon_equality and v.equality_case_ok
    for g in d2c_upto(8):
        v = bound_verdicts(g)
        assert v.ok
        assert v.theorem4_applies == (not is_bipartite(g) and bool(dominating_edges(g)) and not is_h5(g))


def test_edge_deficit_covers_unbalanced_sides():
    """Where free(f) is 0 the unbalanced split alone keeps m below n^2/4."""
    for g, u, v in _instances(9):
        if is_bipartite(g):
            continue
        part = partition_uv(g, u, v)
        split = build_xy(part)
        asg = build_assignment(g, split)
        d = abs(len(split.x_side) - len(split.y_side))
        deficit = g.n ** 2 // 4 - g.m
        assert deficit == len(asg.free) + g.n ** 2 // 4 - (g.n ** 2 - d * d) // 4
        assert deficit >= (1 if is_h5(g) else 2)
        if not asg.free:
            assert d >= 2


def test_orientation_verifier_flags_fabricated_violations():
    # K_{4,4} has no inside edges; feeding it a made-up orientation with no free
    # non-edges must trip the cycle, triangle, sink and source checks
    from d2c.certificate import Assignment, verify_orientation_lemmas

    g = complete_bipartite(4, 4)
    part = partition_uv(g, 0, 4)
    a, b, c = sorted(part.s_u)
    empty = Assignment({}, frozenset(), frozenset())
    cyc = FOrientation(frozenset({(a, b), (b, c), (c, a)}), part.s_u, part.s_v)
    rep = verify_orientation_lemmas(g, part, empty, cyc)
    assert rep.checked["cycle"] == 1 and any("cycle" in v for v in rep.violations)
    tri = FOrientation(frozenset({(a, b), (a, c), (b, c)}), part.s_u, part.s_v)
    rep = verify_orientation_lemmas(g, part, empty, tri)
    assert {"triangle", "sink", "source"} <= set(rep.checked)
    assert len(rep.violations) >= 3
