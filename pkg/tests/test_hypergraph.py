import itertools
import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

import oracles
from minorlab.boolfn import Hypergraph, VarMap, apply_map, is_minor, zhegalkin
from minorlab.hypergraph import (
    apply_quotient,
    automorphisms,
    collapse_map,
    contract_pair,
    function_of,
    is_2set_transitive,
    is_hyper_minor,
    is_isomorphism,
    is_quotient_map,
    isomorphic,
    isomorphisms,
    quotient_witness,
    reduced,
    restrict,
)
from minorlab.steiner import fano_plane

TRIANGLE = Hypergraph.from_sets(3, [[1, 2], [1, 3], [2, 3]])
K4 = Hypergraph.from_sets(4, itertools.combinations(range(1, 5), 2))


@st.composite
def hypergraphs(draw, max_n=4, min_n=1):
    n = draw(st.integers(min_n, max_n))
    return Hypergraph(n, tuple(draw(st.sets(st.integers(0, (1 << n) - 1)))))


def as_sets(h):
    return {frozenset(e) for e in h.edge_sets()}


def test_collapse_triangle():
    # 1,2 -> 1 and 3 -> 2: edge {1,2} becomes {1}, the other two cancel
    q = apply_quotient(TRIANGLE, VarMap((1, 1, 2), 2))
    assert q == Hypergraph.from_sets(2, [[1]])
    w = quotient_witness(TRIANGLE, VarMap((1, 1, 2), 2))
    assert w.preimage_parities == {(1,): 1, (1, 2): 0}


@given(hypergraphs(), st.data())
def test_quotient_matches_oracle(h, data):
    m = data.draw(st.integers(1, 4))
    image = tuple(data.draw(st.integers(1, m)) for _ in range(h.n_vertices))
    assert as_sets(apply_quotient(h, VarMap(image, m))) == oracles.quotient(as_sets(h), image, m)


@given(hypergraphs(max_n=5), st.data())
def test_quotient_is_composition_on_functions(h, data):
    m = data.draw(st.integers(1, 5))
    sigma = VarMap(tuple(data.draw(st.integers(1, m)) for _ in range(h.n_vertices)), m)
    assert apply_quotient(h, sigma) == zhegalkin(apply_map(function_of(h), sigma))


def test_contract_k4():
    r = contract_pair(K4, (1, 2))
    assert r.fresh_vertex == 3
    assert r.hypergraph == Hypergraph.from_sets(3, [[1, 2], [3]])
    assert r.relabel == {1: 3, 2: 3, 3: 1, 4: 2}
    assert not r.isolates_fresh


def test_contract_single_edge_isolates():
    r = contract_pair(Hypergraph.from_sets(2, [[1, 2]]), (1, 2))
    assert r.hypergraph == Hypergraph.from_sets(1, [[1]])
    r = contract_pair(TRIANGLE, (1, 2))
    # here the old vertex 3, now 1, is the one left without edges
    assert r.hypergraph == Hypergraph.from_sets(2, [[2]])
    assert r.fresh_vertex == 2 and not r.isolates_fresh


@given(hypergraphs(min_n=2, max_n=5), st.data())
def test_contract_is_collapse_quotient(h, data):
    i, j = data.draw(st.lists(st.integers(1, h.n_vertices), min_size=2, max_size=2, unique=True))
    r = contract_pair(h, (i, j), cross_check=False)
    assert r.hypergraph == apply_quotient(h, collapse_map(h.n_vertices, (i, j)))


def test_collapse_map_layout():
    assert collapse_map(5, (2, 4)).image == (1, 4, 2, 4, 3)


def test_reduce_and_restrict():
    h = Hypergraph.from_sets(5, [[2, 4], [4], []])
    assert reduced(h) == Hypergraph.from_sets(2, [[1, 2], [2], []])
    assert restrict(h, [4, 5]) == Hypergraph.from_sets(2, [[1], []])


def test_minor_small_cases():
    edge = Hypergraph.from_sets(2, [[1, 2]])
    loop = Hypergraph.from_sets(1, [[1]])
    assert is_hyper_minor(loop, edge)
    assert not is_hyper_minor(edge, loop)
    assert is_hyper_minor(loop, TRIANGLE)
    assert not is_hyper_minor(edge, TRIANGLE)
    with pytest.raises(ValueError):
        is_hyper_minor(Hypergraph(0, ()), edge)


def test_minor_agrees_with_functions_on_two_vertices():
    hs = [Hypergraph(n, tuple(e for e in range(1 << n) if c >> e & 1))
          for n in (1, 2) for c in range(1 << (1 << n))]
    for a, b in itertools.product(hs, repeat=2):
        assert is_hyper_minor(a, b, cross_check=False) == is_minor(function_of(a), function_of(b))


def test_fano_symmetry():
    fano = fano_plane()
    blocks = {123, 145, 167, 246, 257, 347, 356}
    assert {int("".join(map(str, e))) for e in fano.edge_sets()} == blocks
    assert sum(1 for _ in automorphisms(fano)) == 168
    assert is_2set_transitive(fano)


def test_non_transitive():
    path = Hypergraph.from_sets(3, [[1, 2], [2, 3]])
    assert sum(1 for _ in automorphisms(path)) == 2
    assert not is_2set_transitive(path)
    assert is_2set_transitive(K4)


@given(hypergraphs(max_n=6), st.randoms())
def test_relabelled_copy_is_isomorphic(h, rnd):
    perm = list(range(1, h.n_vertices + 1))
    rnd.shuffle(perm)
    g = apply_quotient(h, VarMap(tuple(perm), h.n_vertices))
    iso = isomorphic(h, g)
    assert iso is not None and is_isomorphism(h, g, iso)


def test_isomorphism_count_matches_brute_force():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 5)
        h = Hypergraph(n, tuple(e for e in range(1, 1 << n) if rng.random() < 0.3))
        brute = sum(1 for p in itertools.permutations(range(1, n + 1)) if is_isomorphism(h, h, p))
        assert sum(1 for _ in isomorphisms(h, h)) == brute


def test_not_isomorphic():
    assert isomorphic(TRIANGLE, Hypergraph.from_sets(3, [[1, 2], [2, 3]])) is None
    assert isomorphic(TRIANGLE, Hypergraph.from_sets(4, [[1, 2], [1, 3], [2, 3]])) is None


def test_quotient_map_checks_codomain():
    assert is_quotient_map(VarMap((1, 1, 2), 2), TRIANGLE, Hypergraph.from_sets(2, [[1]]))
    with pytest.raises(ValueError):
        is_quotient_map(VarMap((1, 1, 2), 2), TRIANGLE, Hypergraph.from_sets(3, [[1]]))
