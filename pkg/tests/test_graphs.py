import itertools

import pytest

import oracles
from minorlab.boolfn import Hypergraph
from minorlab.graphs import (
    ai_components,
    classify_graph,
    classify_loopless,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_triangles,
    enumerate_graphs,
    graph,
    lexicographic_sum,
    path_graph,
    satisfies_property_p,
)
from minorlab.hypergraph import function_of, isomorphic
from minorlab.irreducibility import brute_force_ji


def with_loops(g, loops):
    return graph(g.n_vertices, [e for e in g.edge_sets() if len(e) == 2], loops)


def test_ai_components_examples():
    d = ai_components(cycle_graph(4))
    assert d.components == ((1, 3), (2, 4))
    assert d.quotient == complete_graph(2)
    d = ai_components(path_graph(4))
    assert d.is_prime and d.quotient == path_graph(4)
    d = ai_components(complete_multipartite([3, 2]))
    assert sorted(map(len, d.components)) == [2, 3]
    assert d.quotient == complete_graph(2)


def test_lexicographic_sum_rebuilds():
    for g in [cycle_graph(4), complete_multipartite([2, 2, 3]), path_graph(5), cycle_graph(5)]:
        assert lexicographic_sum(ai_components(g)) == g


def test_property_p():
    assert satisfies_property_p(cycle_graph(4))
    assert satisfies_property_p(cycle_graph(5))
    assert satisfies_property_p(path_graph(3))
    assert satisfies_property_p(complete_graph(5))
    assert not satisfies_property_p(cycle_graph(6))


def test_loopless_verdicts():
    v = classify_loopless(disjoint_triangles(2))
    assert (v.tag, v.params, v.join_irreducible) == ("DisjointK3s", (2,), True)
    assert classify_loopless(cycle_graph(5)).tag == "C5"
    v = classify_loopless(path_graph(4))
    assert v.tag == "Reducible" and v.witness is not None
    assert classify_loopless(complete_graph(4)).params == (4,)
    assert classify_loopless(complete_multipartite([2, 3])).tag == "EmptyPlusEmpty"
    assert classify_loopless(complete_multipartite([2, 2, 2])).params == (3, 2)
    assert classify_loopless(complete_multipartite([1, 1, 3])).tag == "K2PlusEmpty"


def test_overlapping_shapes_report_first_match():
    # C4 is the join of two copies of the edgeless graph on two vertices
    assert str(classify_loopless(cycle_graph(4))) == "JoinOfEmpties(2,2)"
    assert classify_loopless(complete_graph(3)).tag == "Kn"


def test_isolated_vertices_are_ignored():
    g = graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert classify_loopless(g).tag == "C5"
    with pytest.raises(ValueError):
        classify_loopless(Hypergraph(3, ()))


def test_loop_verdicts():
    k4 = complete_graph(4)
    assert classify_graph(with_loops(k4, [1])).join_irreducible
    assert not classify_graph(with_loops(k4, [1, 2])).join_irreducible
    assert classify_graph(with_loops(k4, [1, 2, 3])).join_irreducible
    assert not classify_graph(with_loops(cycle_graph(5), [1])).join_irreducible
    v = classify_graph(graph(4, [(1, 2), (2, 3), (1, 3)], [4]))
    assert v.tag == "LoopVariant" and v.params[0] == "LoopsPlusK3"


def test_verdicts_match_brute_force_on_named_graphs():
    named = [disjoint_triangles(2), cycle_graph(5), path_graph(4), complete_graph(5),
             complete_multipartite([2, 3]), complete_multipartite([1, 1, 3]), cycle_graph(6)]
    for g in named:
        assert classify_loopless(g).join_irreducible == brute_force_ji(function_of(g)), g


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 6)] == [
        len(oracles.graph_classes(n)) for n in range(1, 6)]
    assert [sum(1 for _ in enumerate_graphs(n, allow_loops=True)) for n in range(1, 5)] == [
        len(oracles.graph_classes(n, loops=True)) for n in range(1, 5)]
    assert sum(1 for _ in enumerate_graphs(3)) == 4
    assert sum(1 for _ in enumerate_graphs(2, allow_loops=True)) == 6


def test_enumeration_has_no_isomorphic_pairs():
    gs = list(enumerate_graphs(5))
    for a, b in itertools.combinations(gs, 2):
        if len(a.edges) == len(b.edges):
            assert isomorphic(a, b) is None


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_graphs(7))


def test_not_a_graph():
    with pytest.raises(ValueError):
        classify_graph(Hypergraph.from_sets(3, [[1, 2, 3]]))
