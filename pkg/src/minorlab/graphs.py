"""Graphs (edges of size two, loops of size one) and their join-irreducible shapes.

Graphs are plain :class:`Hypergraph` values whose edges have size 1 or 2.
Structural helpers work on adjacency bitmasks of the loopless part; loops are
only consulted by :func:`classify_graph`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .boolfn import CapExceeded, Hypergraph, iter_bits, mask_of, vertices_of
from .hypergraph import function_of, reduced, restrict
from .irreducibility import cover_report


def graph(n: int, edges=(), loops=()) -> Hypergraph:
    """Graph on 1..n from pairs and looped vertices."""
    return Hypergraph.from_sets(n, [tuple(e) for e in edges] + [(v,) for v in loops])


def check_graph(g: Hypergraph):
    for e in g.edges:
        if e.bit_count() not in (1, 2):
            raise ValueError(f"edge {vertices_of(e)} is not a pair or a loop")


def loops_of(g: Hypergraph) -> frozenset[int]:
    return frozenset(vertices_of(e)[0] for e in g.edges if e.bit_count() == 1)


def loopless_part(g: Hypergraph) -> Hypergraph:
    return Hypergraph(g.n_vertices, tuple(e for e in g.edges if e.bit_count() == 2))


def _require_loopless(g: Hypergraph):
    check_graph(g)
    if any(e.bit_count() == 1 for e in g.edges):
        raise ValueError("graph has loops; use the loopless part")


def adjacency(g: Hypergraph) -> list[int]:
    """adj[v] is the neighbour mask of vertex v (index 0 unused)."""
    adj = [0] * (g.n_vertices + 1)
    for e in g.edges:
        if e.bit_count() == 2:
            a, b = vertices_of(e)
            adj[a] |= 1 << (b - 1)
            adj[b] |= 1 << (a - 1)
    return adj


def is_connected(g: Hypergraph) -> bool:
    n = g.n_vertices
    if n == 0:
        return True
    adj = adjacency(g)
    seen, stack = 1, [1]
    while stack:
        v = stack.pop()
        new = adj[v] & ~seen
        seen |= new
        stack.extend(b + 1 for b in iter_bits(new))
    return seen == (1 << n) - 1


def components(g: Hypergraph) -> list[tuple[int, ...]]:
    adj = adjacency(g)
    left = (1 << g.n_vertices) - 1
    out = []
    while left:
        start = (left & -left).bit_length()
        seen, stack = 1 << (start - 1), [start]
        while stack:
            v = stack.pop()
            new = adj[v] & ~seen
            seen |= new
            stack.extend(b + 1 for b in iter_bits(new))
        out.append(vertices_of(seen))
        left &= ~seen
    return out


@dataclass(frozen=True)
class AiDecomposition:
    components: tuple[tuple[int, ...], ...]
    quotient: Hypergraph

    @property
    def is_prime(self) -> bool:
        return all(len(c) == 1 for c in self.components)


def ai_components(g: Hypergraph) -> AiDecomposition:
    """Maximal autonomous independent sets and the graph between them.

    Two vertices share an ai-set exactly when they are non-adjacent with the
    same neighbourhood, so the components are the classes of that relation.
    """
    _require_loopless(g)
    adj = adjacency(g)
    classes: dict[int, list[int]] = {}
    for v in range(1, g.n_vertices + 1):
        classes.setdefault(adj[v], []).append(v)
    comps = tuple(sorted(tuple(c) for c in classes.values()))
    where = {v: k for k, comp in enumerate(comps, start=1) for v in comp}
    qedges = {(where[a], where[b]) for a, b in (vertices_of(e) for e in g.edges)}
    quotient = graph(len(comps), sorted({tuple(sorted(e)) for e in qedges}))
    return AiDecomposition(comps, quotient)


def lexicographic_sum(dec: AiDecomposition) -> Hypergraph:
    """Rebuild a graph from its ai-components indexed by the quotient."""
    n = sum(len(c) for c in dec.components)
    edges = []
    for e in dec.quotient.edges:
        a, b = vertices_of(e)
        edges += itertools.product(dec.components[a - 1], dec.components[b - 1])
    return graph(n, edges)


def satisfies_property_p(g: Hypergraph) -> bool:
    """Every non-adjacent pair has a common neighbour of degree exactly two."""
    _require_loopless(g)
    adj = adjacency(g)
    n = g.n_vertices
    deg2 = 0
    for v in range(1, n + 1):
        if adj[v].bit_count() == 2:
            deg2 |= 1 << (v - 1)
    for a, b in itertools.combinations(range(1, n + 1), 2):
        if not (adj[a] >> (b - 1)) & 1 and not (adj[a] & adj[b] & deg2):
            return False
    return True


# --- named graphs --------------------------------------------------------------


def complete_graph(n: int) -> Hypergraph:
    return graph(n, itertools.combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Hypergraph:
    return graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Hypergraph:
    return graph(n, [(i, i + 1) for i in range(1, n)])


def complete_multipartite(sizes) -> Hypergraph:
    """Graph join of edgeless graphs with the given part sizes."""
    parts, start = [], 1
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = [
        (a, b) for p, q in itertools.combinations(parts, 2) for a in p for b in q
    ]
    return graph(start - 1, edges)


def disjoint_triangles(k: int) -> Hypergraph:
    edges = []
    for t in range(k):
        a = 3 * t
        edges += [(a + 1, a + 2), (a + 1, a + 3), (a + 2, a + 3)]
    return graph(3 * k, edges)


# --- recognizers ----------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationVerdict:
    tag: str
    params: tuple = ()
    loops: tuple = ()
    witness: tuple | None = field(default=None, compare=False)

    @property
    def join_irreducible(self) -> bool:
        return self.tag != "Reducible"

    def __str__(self):
        text = self.tag
        if self.params:
            text += "(" + ",".join(map(str, self.params)) + ")"
        if self.loops:
            text += " loops=" + ",".join(map(str, self.loops))
        if self.witness:
            text += " witness=" + " ".join("{%d,%d}" % p for p in self.witness)
        return text


def _reducible(g: Hypergraph) -> ClassificationVerdict:
    hr = reduced(g)
    witness = None
    if hr.n_vertices >= 2 and hr.n_vertices <= 16:
        rep = cover_report(function_of(g))
        witness = rep.witness
    return ClassificationVerdict("Reducible", witness=witness)


def _is_complete(adj, vs) -> bool:
    full = mask_of(vs)
    return all(adj[v] | (1 << (v - 1)) == full for v in vs)


def _loopless_shape(g: Hypergraph):
    """Shape tag and parameters of a loopless graph without isolated vertices."""
    n = g.n_vertices
    adj = adjacency(g)
    comps = components(g)
    if len(comps) > 1:
        if all(len(c) == 3 and _is_complete(adj, c) for c in comps):
            return ("DisjointK3s", (len(comps),))
        return None
    dec = ai_components(g)
    if dec.is_prime:
        if all(adj[v].bit_count() == 2 for v in range(1, n + 1)) and n == 5:
            return ("C5", ())
        if _is_complete(adj, range(1, n + 1)):
            return ("Kn", (n,))
        return None
    r = len(dec.components)
    qadj = adjacency(dec.quotient)
    if not _is_complete(qadj, range(1, r + 1)):
        return None
    sizes = sorted(len(c) for c in dec.components)
    if r == 3 and sizes[:2] == [1, 1] and sizes[2] >= 2:
        return ("K2PlusEmpty", (sizes[2],))
    if r == 2 and sizes[0] < sizes[1]:
        return ("EmptyPlusEmpty", tuple(sizes))
    if len(set(sizes)) == 1 and sizes[0] >= 2:
        return ("JoinOfEmpties", (r, sizes[0]))
    return None


def classify_loopless(g: Hypergraph) -> ClassificationVerdict:
    _require_loopless(g)
    gr = reduced(g)
    if gr.n_vertices < 2:
        raise ValueError("fewer than two non-isolated vertices")
    shape = _loopless_shape(gr)
    if shape is None:
        return _reducible(gr)
    return ClassificationVerdict(*shape)


def _loops_allowed(g0: Hypergraph, tag: str, params: tuple, loops: frozenset) -> bool:
    n = g0.n_vertices
    k = len(loops)
    if tag in ("DisjointK3s", "C5"):
        return k == 0
    if tag == "Kn":
        return k in (0, 1, n - 1, n)
    dec = ai_components(g0)
    parts = sorted(dec.components, key=len)
    looped = [sum(v in loops for v in p) for p in parts]
    whole = [c in (0, len(p)) for c, p in zip(looped, parts)]
    if tag == "EmptyPlusEmpty":
        return all(whole)
    if tag == "JoinOfEmpties":
        r = params[0]
        if r == 2:
            return all(whole)
        return k in (0, n)
    if tag == "K2PlusEmpty":
        pair_loops = looped[0] + looped[1]
        big_loops = looped[2]
        return (pair_loops in (0, 2) and big_loops == 0) or (pair_loops == 1 and big_loops == len(parts[2]))
    raise AssertionError(tag)


def classify_graph(g: Hypergraph) -> ClassificationVerdict:
    """Join-irreducibility verdict for a graph that may carry loops."""
    check_graph(g)
    gr = reduced(g)
    if gr.n_vertices < 2:
        raise ValueError("fewer than two non-isolated vertices")
    loops = loops_of(gr)
    g0 = loopless_part(gr)
    if not loops:
        return classify_loopless(gr)
    isolated = [v for v, a in enumerate(adjacency(g0)) if v and not a]
    if isolated:
        # only bare loops, possibly next to one triangle, survive here
        rest = [v for v in range(1, gr.n_vertices + 1) if v not in isolated]
        if not rest:
            return ClassificationVerdict("LoopVariant", ("Loops", len(isolated)), tuple(sorted(loops)))
        tri = restrict(gr, rest)
        if (
            tri.n_vertices == 3
            and all(v in loops for v in isolated)
            and _loopless_shape(loopless_part(tri)) == ("Kn", (3,))
            and not loops_of(tri)
        ):
            return ClassificationVerdict("LoopVariant", ("LoopsPlusK3", len(isolated)), tuple(sorted(loops)))
        return _reducible(gr)
    shape = _loopless_shape(g0)
    if shape is None or not _loops_allowed(g0, shape[0], shape[1], loops):
        return _reducible(gr)
    return ClassificationVerdict("LoopVariant", (shape[0],) + shape[1], tuple(sorted(loops)))


# --- enumeration -------------------------------------------------------------------

GRAPH_CAPS = {False: 6, True: 5}


@lru_cache(maxsize=None)
def _canonical_codes(n: int, allow_loops: bool) -> np.ndarray:
    slots = list(itertools.combinations(range(n), 2))
    if allow_loops:
        slots += [(v,) for v in range(n)]
    index = {s: k for k, s in enumerate(slots)}
    codes = np.arange(1 << len(slots), dtype=np.int64)
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        moved = np.zeros_like(codes)
        for k, s in enumerate(slots):
            target = index[tuple(sorted(perm[v] for v in s))]
            moved |= ((codes >> k) & 1) << target
        np.minimum(best, moved, out=best)
    return np.unique(best)


def _decode(n: int, allow_loops: bool, code: int) -> Hypergraph:
    slots = list(itertools.combinations(range(1, n + 1), 2))
    if allow_loops:
        slots += [(v,) for v in range(1, n + 1)]
    return graph(n, [s for k, s in enumerate(slots) if (code >> k) & 1 and len(s) == 2],
                 [s[0] for k, s in enumerate(slots) if (code >> k) & 1 and len(s) == 1])


def enumerate_graphs(n: int, allow_loops: bool = False):
    """One graph per isomorphism class on n vertices, by minimum labelled code."""
    if n < 0 or n > GRAPH_CAPS[allow_loops]:
        raise CapExceeded(f"graph enumeration capped at {GRAPH_CAPS[allow_loops]} vertices")
    for code in _canonical_codes(n, allow_loops):
        yield _decode(n, allow_loops, int(code))
