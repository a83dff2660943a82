import pytest

from d2c.analysis import dominating_edges, is_d2c
from d2c.canon import are_isomorphic, canonical_form
from d2c.families import (C5PlusSpec, add_twin, c5_expansion, c5plus_members, complete_bipartite,
                          conclusion_construction, conclusion_edges, expand_twins, figure3_graphs,
                          h5, is_balanced_complete_bipartite, is_h5, is_in_c5plus, is_in_tprime,
                          max_degree_characterization, strengthened_bound, t_family, tprime_members,
                          twin_addable)
from d2c.graph import cycle, petersen

from oracles import d2c_by_networkx, d2c_graphs


def test_c5_is_the_smallest_member():
    assert c5plus_members(5) == [C5PlusSpec(1, 1, 1)]
    assert are_isomorphic(c5_expansion(1, 1, 1), cycle(5))
    assert is_in_c5plus(cycle(5))
    assert not is_in_c5plus(h5())
    assert not is_in_c5plus(petersen())


@pytest.mark.parametrize("n", range(5, 12))
def test_c5plus_members_are_extremal_and_recognised(n):
    for spec in c5plus_members(n):
        g = c5_expansion(spec)
        assert g.n == n
        assert g.m == strengthened_bound(n) == 1 + (spec.s1 + spec.s3) + spec.s2 * (spec.s1 + spec.s3)
        assert d2c_by_networkx(g)
        assert is_in_c5plus(g)


def test_c5plus_recogniser_against_brute_force_definition():
    # every graph isomorphic to some member, and nothing else, is recognised
    for n in range(5, 9):
        members = {canonical_form(c5_expansion(s)) for s in c5plus_members(n)}
        for g in d2c_graphs(n):
            assert is_in_c5plus(g) == (canonical_form(g) in members)


def test_relaxed_expansion_is_not_a_member():
    g = c5_expansion(1, 1, 4, relaxed=True)
    assert is_d2c(g) and not is_in_c5plus(g)
    with pytest.raises(ValueError):
        c5_expansion(1, 1, 4)


def test_t_family_layout():
    g = t_family(7)
    assert g.n == 7 and g.m == 10 and g.max_degree() == 5
    assert set(g.neighbors(6)) == {0, 1}
    with pytest.raises(ValueError):
        t_family(5)


@pytest.mark.parametrize("n", range(6, 12))
def test_t_and_tprime_members(n):
    members = tprime_members(n)
    assert any(are_isomorphic(t_family(n), g) for g in members)
    for g in members:
        assert d2c_by_networkx(g)
        assert g.m == 2 * n - 4 and g.max_degree() == n - 2
        assert is_in_tprime(g)


def test_h5():
    g = h5()
    assert is_h5(g) and g.n == 6 and g.m == 8
    assert dominating_edges(g)
    assert not is_h5(cycle(6))


def test_twin_addition_condition_on_small_d2c_graphs():
    for n in range(4, 8):
        for g in d2c_graphs(n):
            for x in range(g.n):
                assert twin_addable(g, x) == is_d2c(add_twin(g, x)), (str(g), x)


def test_expand_twins_counts():
    g = expand_twins(t_family(6), {2: 3})
    assert g.n == 8 and g.adj[6] == g.adj[2] == g.adj[7]


def test_conclusion_construction():
    for s in range(1, 5):
        g = conclusion_construction(s)
        assert g.n == 2 * s + 5
        assert g.m == conclusion_edges(g.n) == s * s + 3 * s + 6
        assert d2c_by_networkx(g)
        # u = 0 and the original w = 6 span a dominating edge
        assert (0, 6) in dominating_edges(g)
    assert conclusion_construction(2).m == 16


@pytest.mark.parametrize("n", [6, 7, 8])
def test_max_degree_characterisation(n):
    verdict = max_degree_characterization(n)
    assert verdict.equal
    assert len(verdict.found) == {6: 1, 7: 2, 8: 5}[n]


def test_balanced_complete_bipartite():
    assert is_balanced_complete_bipartite(complete_bipartite(3, 3))
    assert is_balanced_complete_bipartite(complete_bipartite(2, 3))
    assert not is_balanced_complete_bipartite(complete_bipartite(1, 4))
    with pytest.raises(ValueError):
        complete_bipartite(0, 2)


def test_figure3_fixture():
    graphs = figure3_graphs()
    assert [g.n for g in graphs] == [7] * 3 + [8] * 8 + [9] * 2
    for g in graphs:
        assert d2c_by_networkx(g)
        assert g.m == strengthened_bound(g.n)
        assert not is_in_c5plus(g)
    order7 = {canonical_form(g) for g in graphs if g.n == 7}
    t6 = t_family(6)
    expected = {canonical_form(add_twin(t6, 2)), canonical_form(add_twin(t6, 1)),
                canonical_form(t_family(7))}
    assert order7 == expected
    assert sum(1 for g in graphs if g.n == 8 and not dominating_edges(g)) == 3

