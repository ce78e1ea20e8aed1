"""Block designs, Steiner systems and their join-irreducibility test.

For a Steiner system (every pair of points in exactly one block) three
properties coincide: f_H is join-irreducible, all pair contractions H_e are
isomorphic, and all two-point deletions H_{-e} are isomorphic.  The report
computes each one separately and refuses to return if they disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .boolfn import Hypergraph, mask_of, vertices_of
from .hypergraph import (
    contract_pair,
    is_isomorphism,
    isomorphic,
    isomorphisms,
    restrict,
)
from .irreducibility import dh_set, is_join_irreducible_h


@dataclass(frozen=True)
class DesignParams:
    n: int
    k: int
    lam: int = 1

    def __post_init__(self):
        if not (self.n >= self.k >= 2 and self.lam >= 1):
            raise ValueError(f"invalid design parameters {self}")


def is_design(h: Hypergraph, p: DesignParams) -> bool:
    """2-(n,k,lambda): n points, k-blocks, every point pair in exactly lambda blocks."""
    if h.n_vertices != p.n or any(e.bit_count() != p.k for e in h.edges):
        return False
    for pair in itertools.combinations(range(1, p.n + 1), 2):
        m = mask_of(pair)
        if sum(1 for e in h.edges if e & m == m) != p.lam:
            return False
    return True


def block_size(h: Hypergraph) -> int | None:
    sizes = {e.bit_count() for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_steiner(h: Hypergraph) -> bool:
    k = block_size(h)
    return k is not None and k >= 2 and h.n_vertices >= k and is_design(h, DesignParams(h.n_vertices, k, 1))


def minus_pair(h: Hypergraph, pair) -> Hypergraph:
    """Delete both points of ``pair`` together with every block meeting them."""
    i, j = pair
    if i == j or not (1 <= i <= h.n_vertices and 1 <= j <= h.n_vertices):
        raise ValueError(f"invalid pair {pair!r}")
    return restrict(h, [v for v in range(1, h.n_vertices + 1) if v not in (i, j)])


def _pairs(n):
    return list(itertools.combinations(range(1, n + 1), 2))


def is_minus2_monomorphic(h: Hypergraph) -> bool:
    if h.n_vertices < 3:
        raise ValueError("need at least three points")
    pairs = _pairs(h.n_vertices)
    first = minus_pair(h, pairs[0])
    return all(isomorphic(first, minus_pair(h, e)) is not None for e in pairs[1:])


def is_contraction_monomorphic(h: Hypergraph) -> bool:
    pairs = _pairs(h.n_vertices)
    first = contract_pair(h, pairs[0]).hypergraph
    return all(isomorphic(first, contract_pair(h, e).hypergraph) is not None for e in pairs[1:])


@dataclass(frozen=True)
class SteinerReport:
    n: int
    k: int
    ji: bool
    contraction_mono: bool
    minus2_mono: bool
    dh_size: int
    n_pairs: int

    @property
    def agree(self) -> bool:
        return self.ji == self.contraction_mono == self.minus2_mono

    def lines(self):
        yield f"points\t{self.n}"
        yield f"block_size\t{self.k}"
        yield f"join_irreducible\t{int(self.ji)}"
        yield f"contraction_monomorphic\t{int(self.contraction_mono)}"
        yield f"minus2_monomorphic\t{int(self.minus2_mono)}"
        yield f"dh_size\t{self.dh_size}/{self.n_pairs}"


def steiner_report(h: Hypergraph) -> SteinerReport:
    if not is_steiner(h):
        raise ValueError("not a Steiner system")
    k = block_size(h)
    n = h.n_vertices
    d = dh_set(h)
    report = SteinerReport(
        n, k,
        ji=is_join_irreducible_h(h),
        contraction_mono=is_contraction_monomorphic(h),
        minus2_mono=is_minus2_monomorphic(h),
        dh_size=len(d),
        n_pairs=n * (n - 1) // 2,
    )
    if not report.agree:
        raise AssertionError(f"three-way disagreement: {report}")
    if k >= 3 and report.dh_size != report.n_pairs:
        raise AssertionError(f"contraction isolates a vertex in a Steiner system: {report}")
    return report


def lift_isomorphism(iso, n: int) -> tuple[int, ...]:
    """Extend a map between two-point deletions to the contractions.

    Deleted and contracted hypergraphs share the numbering of the remaining
    points; the fresh vertex is n-1 on both sides and is sent to itself.
    """
    return tuple(iso) + (n - 1,)


def check_lift(h: Hypergraph, e, e2) -> bool:
    """Every isomorphism H_-e -> H_-e2 lifts to one of H_e -> H_e2."""
    n = h.n_vertices
    src, dst = contract_pair(h, e).hypergraph, contract_pair(h, e2).hypergraph
    found = False
    for iso in isomorphisms(minus_pair(h, e), minus_pair(h, e2)):
        found = True
        if not is_isomorphism(src, dst, lift_isomorphism(iso, n)):
            return False
    return found


def check_fresh_fixed(h: Hypergraph, e, e2) -> bool:
    """Every isomorphism H_e -> H_e2 sends the fresh vertex to the fresh vertex."""
    fresh = h.n_vertices - 1
    found = False
    for iso in isomorphisms(contract_pair(h, e).hypergraph, contract_pair(h, e2).hypergraph):
        found = True
        if iso[fresh - 1] != fresh:
            return False
    return found


# --- built-in systems ---------------------------------------------------------


def fano_plane() -> Hypergraph:
    """PG(2,2): points are nonzero vectors of GF(2)^3, lines are {a, b, a+b}."""
    lines = {frozenset((a, b, a ^ b)) for a in range(1, 8) for b in range(1, 8) if a != b}
    return Hypergraph.from_sets(7, sorted(sorted(l) for l in lines))


def affine_plane_3() -> Hypergraph:
    """AG(2,3): points of GF(3)^2, lines {p + t d}."""
    index = {(x, y): 3 * x + y + 1 for x in range(3) for y in range(3)}
    lines = set()
    for p in index:
        for d in ((0, 1), (1, 0), (1, 1), (1, 2)):
            pts = [((p[0] + t * d[0]) % 3, (p[1] + t * d[1]) % 3) for t in range(3)]
            lines.add(frozenset(index[q] for q in pts))
    return Hypergraph.from_sets(9, sorted(sorted(l) for l in lines))


def cyclic_sts13() -> Hypergraph:
    """The cyclic STS(13) developed from base blocks {0,1,4}, {0,2,8}."""
    blocks = {frozenset((b + t) % 13 + 1 for b in base) for base in ((0, 1, 4), (0, 2, 8)) for t in range(13)}
    return Hypergraph.from_sets(13, sorted(sorted(b) for b in blocks))


def pasch_switch(h: Hypergraph) -> Hypergraph | None:
    """Trade the first Pasch configuration found for its alternative cover.

    Blocks abc, ade, bdf, cef cover the same pairs as abd, ace, bcf, def.
    """
    blocks = [frozenset(vertices_of(e)) for e in h.edges]
    bset = set(blocks)
    for abc, ade in itertools.combinations(blocks, 2):
        common = abc & ade
        if len(common) != 1:
            continue
        (a,) = common
        for b, c in itertools.permutations(abc - {a}):
            for d, e in itertools.permutations(ade - {a}):
                for f in range(1, h.n_vertices + 1):
                    if f in (a, b, c, d, e):
                        continue
                    bdf, cef = frozenset((b, d, f)), frozenset((c, e, f))
                    if bdf in bset and cef in bset:
                        new = bset - {abc, ade, bdf, cef}
                        new |= {frozenset((a, b, d)), frozenset((a, c, e)), frozenset((b, c, f)), frozenset((d, e, f))}
                        return Hypergraph.from_sets(h.n_vertices, sorted(sorted(x) for x in new))
    return None


def complete_system(n: int) -> Hypergraph:
    """K_n viewed as a 2-(n,2,1) design."""
    return Hypergraph.from_sets(n, itertools.combinations(range(1, n + 1), 2))


def builtin_systems(extended: bool = False) -> dict[str, Hypergraph]:
    systems = {"fano": fano_plane(), "ag9": affine_plane_3()}
    if extended:
        sts13 = cyclic_sts13()
        systems["sts13a"] = sts13
        other = pasch_switch(sts13)
        if other is not None and isomorphic(other, sts13) is None:
            systems["sts13b"] = other
    for name, h in systems.items():
        if not is_steiner(h):
            raise AssertionError(f"builtin system {name} is not a Steiner system")
    return systems
