"""Hypergraphs, quotient maps and the hypergraph side of the minor relation.

Vertices are 1..n, edges are bitmasks (vertex v is bit v-1).  A map
h: V' -> V is a quotient map from H' to H when every E in H is hit by an odd
number of edges of H' and every other subset of V by an even number.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .boolfn import (
    CapExceeded,
    Hypergraph,
    VarMap,
    from_polynomial,
    is_minor,
    iter_bits,
    mask_of,
    vertices_of,
)

__all__ = [
    "Hypergraph",
    "QuotientWitness",
    "ContractionResult",
    "function_of",
    "reduced",
    "apply_quotient",
    "quotient_witness",
    "is_quotient_map",
    "collapse_map",
    "contract_pair",
    "is_hyper_minor",
    "isomorphic",
    "isomorphisms",
    "automorphisms",
    "is_2set_transitive",
    "is_isomorphism",
    "restrict",
]

MAX_ISO_VERTICES = 13
MAX_MINOR_MAPS = 1_000_000
FULL_AUTOMORPHISM_LIMIT = 9


def function_of(h: Hypergraph):
    return from_polynomial(h)


def image_mask(mask: int, image: tuple[int, ...]) -> int:
    out = 0
    for b in iter_bits(mask):
        out |= 1 << (image[b] - 1)
    return out


def reduced(h: Hypergraph) -> Hypergraph:
    """Drop vertices lying in no edge, renumbering the rest in order."""
    active = vertices_of(h.support)
    rank = {v: r for r, v in enumerate(active, start=1)}
    return Hypergraph.from_sets(len(active), ([rank[v] for v in vertices_of(e)] for e in h.edges))


def restrict(h: Hypergraph, keep) -> Hypergraph:
    """Induced sub-hypergraph on ``keep``: edges entirely inside it, renumbered."""
    keep = sorted(keep)
    kmask = mask_of(keep)
    rank = {v: r for r, v in enumerate(keep, start=1)}
    edges = [[rank[v] for v in vertices_of(e)] for e in h.edges if e & ~kmask == 0]
    return Hypergraph.from_sets(len(keep), edges)


def _check_map(h: Hypergraph, m: VarMap):
    if m.domain_size != h.n_vertices:
        raise ValueError(f"map domain {m.domain_size} != {h.n_vertices} vertices")


def apply_quotient(h: Hypergraph, m: VarMap) -> Hypergraph:
    """The hypergraph whose edges are the subsets with an odd number of preimages."""
    _check_map(h, m)
    return Hypergraph.from_masks(m.codomain_size, (image_mask(e, m.image) for e in h.edges))


@dataclass(frozen=True)
class QuotientWitness:
    map: VarMap
    preimage_parities: dict = field(compare=False)


def quotient_witness(h: Hypergraph, m: VarMap) -> QuotientWitness:
    _check_map(h, m)
    counts = Counter(image_mask(e, m.image) for e in h.edges)
    return QuotientWitness(m, {vertices_of(k): c % 2 for k, c in sorted(counts.items())})


def is_quotient_map(m: VarMap, source: Hypergraph, target: Hypergraph) -> bool:
    if m.codomain_size != target.n_vertices:
        raise ValueError(f"map codomain {m.codomain_size} != {target.n_vertices} vertices")
    return apply_quotient(source, m) == target


def collapse_map(n: int, pair) -> VarMap:
    """Map sending both ends of ``pair`` to a new last vertex, others kept in order."""
    i, j = pair
    rest = [v for v in range(1, n + 1) if v not in (i, j)]
    rank = {v: r for r, v in enumerate(rest, start=1)}
    fresh = len(rest) + 1
    return VarMap(tuple(rank.get(v, fresh) for v in range(1, n + 1)), fresh)


@dataclass(frozen=True)
class ContractionResult:
    hypergraph: Hypergraph
    fresh_vertex: int
    relabel: dict = field(compare=False)

    @property
    def isolates_fresh(self) -> bool:
        return not (self.hypergraph.support >> (self.fresh_vertex - 1)) & 1


def contract_pair(h: Hypergraph, pair, cross_check: bool = True) -> ContractionResult:
    """Identify the two vertices of ``pair`` into a fresh vertex (placed last).

    Edges avoiding the pair survive unchanged; a set F + {fresh} is an edge iff
    one or all three of F+{i,j}, F+{i}, F+{j} are edges of h.
    """
    i, j = sorted(pair)
    n = h.n_vertices
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"invalid pair {pair!r} for {n} vertices")
    rest = [v for v in range(1, n + 1) if v not in (i, j)]
    rank = {v: r for r, v in enumerate(rest, start=1)}
    fresh = n - 1
    emask = mask_of((i, j))
    edges = set(h.edges)

    def rename(mask):
        return mask_of(rank[v] for v in vertices_of(mask))

    new_edges = []
    touched = set()
    for e in h.edges:
        if e & emask == 0:
            new_edges.append(rename(e))
        else:
            touched.add(e & ~emask)
    for f in touched:
        hits = sum(x in edges for x in (f | emask, f | (1 << (i - 1)), f | (1 << (j - 1))))
        if hits in (1, 3):
            new_edges.append(rename(f) | (1 << (fresh - 1)))
    result = Hypergraph(fresh, tuple(new_edges))
    if cross_check:
        expected = apply_quotient(h, collapse_map(n, (i, j)))
        if expected != result:
            raise AssertionError(f"contraction of {pair} disagrees with quotient: {result} vs {expected}")
    relabel = dict(rank)
    relabel[i] = relabel[j] = fresh
    return ContractionResult(result, fresh, relabel)


def is_hyper_minor(h: Hypergraph, h2: Hypergraph, cross_check: bool = True) -> bool:
    """h is a simple minor of h2: some map V(h2) -> V(h) is a quotient map onto h."""
    n, m = h.n_vertices, h2.n_vertices
    if n == 0:
        raise ValueError("target hypergraph needs at least one vertex")
    if n**m > MAX_MINOR_MAPS:
        raise CapExceeded(f"{n}^{m} candidate maps exceeds {MAX_MINOR_MAPS}")
    found = False
    for image in itertools.product(range(1, n + 1), repeat=m):
        if apply_quotient(h2, VarMap(image, n)) == h:
            found = True
            break
    if cross_check and max(n, m) <= 6:
        if found != is_minor(function_of(h), function_of(h2)):
            raise AssertionError(f"hypergraph minor test disagrees with function side for {h}, {h2}")
    return found


# --- isomorphism -----------------------------------------------------------


class _IsoData:
    def __init__(self, h: Hypergraph):
        n = h.n_vertices
        self.h = h
        self.n = n
        self.edge_set = frozenset(h.edges)
        self.incident = [[] for _ in range(n + 1)]
        for e in h.edges:
            for b in iter_bits(e):
                self.incident[b + 1].append(e)
        base = [None] + [
            tuple(sorted(Counter(e.bit_count() for e in self.incident[v]).items()))
            for v in range(1, n + 1)
        ]
        refined = [None]
        for v in range(1, n + 1):
            sig = sorted(
                (e.bit_count(), tuple(sorted(base[u + 1] for u in iter_bits(e) if u + 1 != v)))
                for e in self.incident[v]
            )
            refined.append((base[v], tuple(sig)))
        self.invariant = refined

    def signature(self):
        sizes = Counter(e.bit_count() for e in self.h.edges)
        return (self.n, len(self.h.edges), tuple(sorted(sizes.items())), tuple(sorted(Counter(self.invariant[1:]).items())))


def _search_order(d: _IsoData, fixed: dict):
    n = d.n
    freq = Counter(d.invariant[1:])
    order = list(fixed)
    placed = set(order)
    weight = [0] * (n + 1)
    for v in order:
        for e in d.incident[v]:
            for b in iter_bits(e):
                weight[b + 1] += 1
    while len(order) < n:
        v = min(
            (u for u in range(1, n + 1) if u not in placed),
            key=lambda u: (-weight[u], freq[d.invariant[u]], u),
        )
        order.append(v)
        placed.add(v)
        for e in d.incident[v]:
            for b in iter_bits(e):
                weight[b + 1] += 1
    return order


def _iso_search(h1: Hypergraph, h2: Hypergraph, fixed: dict | None = None):
    """Yield every isomorphism h1 -> h2 as a tuple of images (1-based)."""
    fixed = dict(fixed or {})
    if max(h1.n_vertices, h2.n_vertices) > MAX_ISO_VERTICES:
        raise CapExceeded(f"isomorphism search capped at {MAX_ISO_VERTICES} vertices")
    a, b = _IsoData(h1), _IsoData(h2)
    if a.signature() != b.signature():
        return
    n = a.n
    for v, w in fixed.items():
        if a.invariant[v] != b.invariant[w]:
            return
    candidates = {}
    for w in range(1, n + 1):
        candidates.setdefault(b.invariant[w], []).append(w)
    order = _search_order(a, fixed)
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    assigned = 0  # mask of placed h1 vertices
    assigned_img = 0

    def consistent(v, w):
        vm, wm = assigned | (1 << (v - 1)), assigned_img | (1 << (w - 1))
        count = 0
        for e in a.incident[v]:
            if e & ~vm == 0:
                img = 0
                for bit in iter_bits(e):
                    img |= 1 << (image[bit + 1] - 1) if bit + 1 != v else 1 << (w - 1)
                if img not in b.edge_set:
                    return False
                count += 1
        return count == sum(1 for e in b.incident[w] if e & ~wm == 0)

    def extend(pos):
        nonlocal assigned, assigned_img
        if pos == n:
            yield tuple(image[1:])
            return
        v = order[pos]
        pool = [fixed[v]] if v in fixed else candidates.get(a.invariant[v], [])
        for w in pool:
            if used[w] or not consistent(v, w):
                continue
            image[v], used[w] = w, True
            assigned |= 1 << (v - 1)
            assigned_img |= 1 << (w - 1)
            yield from extend(pos + 1)
            assigned &= ~(1 << (v - 1))
            assigned_img &= ~(1 << (w - 1))
            image[v], used[w] = 0, False

    yield from extend(0)


def isomorphisms(h1: Hypergraph, h2: Hypergraph, fixed: dict | None = None):
    return _iso_search(h1, h2, fixed)


def isomorphic(h1: Hypergraph, h2: Hypergraph):
    """A bijection h1 -> h2 as a tuple of images, or None."""
    return next(_iso_search(h1, h2), None)


def automorphisms(h: Hypergraph):
    return _iso_search(h, h)


def _pair_orbit(pair, generators):
    start = frozenset(pair)
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for g in generators:
            q = frozenset(g[v - 1] for v in p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def is_2set_transitive(h: Hypergraph) -> bool:
    """Every vertex pair can be moved onto every other by an automorphism."""
    n = h.n_vertices
    if n < 2:
        return True
    pairs = {frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)}
    if n <= FULL_AUTOMORPHISM_LIMIT:
        return _pair_orbit((1, 2), list(automorphisms(h))) == pairs
    generators = []
    orbit = {frozenset((1, 2))}
    for target in sorted(pairs, key=sorted):
        if target in orbit:
            continue
        x, y = sorted(target)
        g = next(isomorphisms(h, h, {1: x, 2: y}), None) or next(isomorphisms(h, h, {1: y, 2: x}), None)
        if g is None:
            return False
        generators.append(g)
        orbit = _pair_orbit((1, 2), generators)
    return orbit == pairs


def is_isomorphism(h1: Hypergraph, h2: Hypergraph, image) -> bool:
    """Check a candidate bijection (tuple of 1-based images) edge by edge."""
    image = tuple(image)
    if len(image) != h1.n_vertices or h1.n_vertices != h2.n_vertices:
        return False
    if sorted(image) != list(range(1, h1.n_vertices + 1)):
        return False
    return sorted(image_mask(e, image) for e in h1.edges) == list(h2.edges)


def apply_quotient_rows(coeffs, m: VarMap):
    """apply_quotient on many coefficient rows (boolean array, width 2^n)."""
    out = np.zeros((coeffs.shape[0], 1 << m.codomain_size), dtype=bool)
    for src in range(coeffs.shape[1]):
        out[:, image_mask(src, m.image)] ^= coeffs[:, src]
    return out
