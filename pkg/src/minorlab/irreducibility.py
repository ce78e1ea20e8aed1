"""Arity gap, pair equivalence, lower covers and join-irreducibility.

For a function f and two essential variables i, j the identification
f_{i=j} loses one or two essential variables.  Pairs are grouped by
equivalence of the identified functions; the pairs with the smallest loss
give the lower covers of f, and f is join-irreducible exactly when those
pairs form a single group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .boolfn import (
    MAX_CANONICAL_ARITY,
    CanonicalForm,
    CapExceeded,
    Hypergraph,
    TruthTable,
    VarMap,
    apply_map,
    canonical,
    compact,
    ess,
    essential_vars,
    identify,
    vertices_of,
    zhegalkin,
)
from .hypergraph import _IsoData, contract_pair, function_of, isomorphic, reduced

BRUTE_FORCE_CAP = 6

Pair = tuple[int, int]


def _equivalence_labels(tables: list[TruthTable]) -> list[int]:
    """Label tables so that equal labels mean equivalent functions.

    Small essential arity goes through canonical tables; anything larger is
    compared as reduced Zhegalkin hypergraphs up to isomorphism.
    """
    labels: list[int] = []
    if all(ess(t) <= MAX_CANONICAL_ARITY for t in tables):
        seen: dict[CanonicalForm, int] = {}
        for t in tables:
            labels.append(seen.setdefault(canonical(t), len(seen)))
        return labels
    reps: dict[tuple, list[tuple[Hypergraph, int]]] = {}
    count = 0
    for t in tables:
        h = reduced(zhegalkin(t))
        bucket = reps.setdefault(_IsoData(h).signature(), [])
        for other, label in bucket:
            if isomorphic(h, other) is not None:
                labels.append(label)
                break
        else:
            bucket.append((h, count))
            labels.append(count)
            count += 1
    return labels


@dataclass(frozen=True)
class PairPartition:
    pairs: tuple[Pair, ...]
    classes: tuple[tuple[Pair, ...], ...]
    drop: dict
    label: dict

    def equivalent(self, e: Pair, e2: Pair) -> bool:
        return self.label[e] == self.label[e2]


def _essential_pairs(f: TruthTable) -> list[Pair]:
    vs = sorted(essential_vars(f))
    if len(vs) < 2:
        raise ValueError(f"need at least two essential variables, got {len(vs)}")
    return list(itertools.combinations(vs, 2))


def pair_classes(f: TruthTable) -> PairPartition:
    pairs = _essential_pairs(f)
    k = ess(f)
    minors = [identify(f, i, j) for i, j in pairs]
    drop = {p: k - ess(g) for p, g in zip(pairs, minors)}
    labels = _equivalence_labels(minors)
    label = dict(zip(pairs, labels))
    groups: dict[int, list[Pair]] = {}
    for p, lab in zip(pairs, labels):
        groups.setdefault(lab, []).append(p)
    return PairPartition(tuple(pairs), tuple(tuple(g) for g in groups.values()), drop, label)


def gap(f: TruthTable) -> int:
    """Smallest loss of essential variables over identifications of two of them."""
    pairs = _essential_pairs(f)
    k = ess(f)
    return min(k - ess(identify(f, i, j)) for i, j in pairs)


@dataclass(frozen=True)
class CoverReport:
    ess: int
    gap: int
    c_f: tuple[Pair, ...]
    lower_cover_classes: tuple[TruthTable, ...]
    join_irreducible: bool
    witness: tuple[Pair, Pair] | None
    partition: PairPartition

    def tsv(self) -> str:
        fields = [self.ess, self.gap, int(self.join_irreducible), len(self.lower_cover_classes), len(self.c_f)]
        if self.witness:
            fields += ["%d,%d" % p for p in self.witness]
        return "\t".join(map(str, fields))

    def lines(self):
        yield f"ess\t{self.ess}"
        yield f"gap\t{self.gap}"
        yield f"join_irreducible\t{int(self.join_irreducible)}"
        yield f"n_cover_classes\t{len(self.lower_cover_classes)}"
        yield f"cf_size\t{len(self.c_f)}"
        if self.witness:
            yield "witness\t" + "\t".join("%d,%d" % p for p in self.witness)


TSV_HEADER = "ess\tgap\tjoin_irreducible\tn_cover_classes\tcf_size"


def cover_report(f: TruthTable) -> CoverReport:
    part = pair_classes(f)
    g = min(part.drop.values())
    c_f = tuple(p for p in part.pairs if part.drop[p] == g)
    reps: dict[int, TruthTable] = {}
    for i, j in c_f:
        reps.setdefault(part.label[(i, j)], compact(identify(f, i, j)))
    witness = None
    if len(reps) > 1:
        first = c_f[0]
        other = next(p for p in c_f if not part.equivalent(p, first))
        witness = (first, other)
    if g == 2 and (len(reps) != 1 or len(c_f) != len(part.pairs)):
        raise AssertionError(f"gap 2 but pairs split: {part.classes}")
    return CoverReport(ess(f), g, c_f, tuple(reps.values()), len(reps) == 1, witness, part)


# --- hypergraph side --------------------------------------------------------


def _active(h: Hypergraph):
    hr = reduced(h)
    if hr.n_vertices < 2:
        raise ValueError("hypergraph has fewer than two vertices in edges")
    return hr, vertices_of(h.support)


def dh_set(h: Hypergraph) -> frozenset[Pair]:
    """Vertex pairs whose contraction isolates no vertex (original labels)."""
    hr, active = _active(h)
    n = hr.n_vertices
    out = set()
    for i, j in itertools.combinations(range(1, n + 1), 2):
        hc = contract_pair(hr, (i, j)).hypergraph
        keeps_all = reduced(hc).n_vertices == n - 1
        if n <= 12 and keeps_all != (ess(function_of(hc)) == n - 1):
            raise AssertionError(f"support test and essential arity disagree on pair {(i, j)}")
        if keeps_all:
            out.add((active[i - 1], active[j - 1]))
    return frozenset(out)


GAP2_TEMPLATES = {
    2: [((2, 2), [[1, 2], [1]])],
    3: [((3, 3), [[1, 2], [1, 3], [2, 3]]), ((4, 3), [[1, 2], [1, 3], [2, 3], [1], [2]])],
}


def _gap2_shape(h: Hypergraph):
    """Match a reduced hypergraph (constant edge ignored) against the gap-2 shapes."""
    core = Hypergraph(h.n_vertices, tuple(e for e in h.edges if e))
    n = h.n_vertices
    if len(core.edges) == n and all(e.bit_count() == 1 for e in core.edges) and n >= 2:
        return (1, n)
    for (case, m), edges in GAP2_TEMPLATES.get(n, []):
        if isomorphic(core, Hypergraph.from_sets(n, edges)) is not None:
            return (case, m)
    return None


def is_join_irreducible_h(h: Hypergraph) -> bool:
    hr, _ = _active(h)
    d = dh_set(hr)
    if d:
        minors = [reduced(contract_pair(hr, e).hypergraph) for e in sorted(d)]
        return all(isomorphic(minors[0], other) is not None for other in minors[1:])
    return _gap2_shape(hr) is not None


@dataclass(frozen=True)
class Gap2Case:
    case: int
    m: int
    c: int


def gap2_classify(f: TruthTable, check: bool = True) -> Gap2Case | None:
    fc = compact(f)
    if fc.arity < 2:
        raise ValueError("need at least two essential variables")
    h = zhegalkin(fc)
    shape = _gap2_shape(h)
    result = None if shape is None else Gap2Case(shape[0], shape[1], int(0 in h.edges))
    if check and (result is not None) != (gap(fc) == 2):
        raise AssertionError(f"gap-2 shape {result} inconsistent with gap of {fc}")
    return result


def gap2_instances(max_m: int):
    """Truth tables of every listed gap-2 shape with m <= max_m and c in {0, 1}."""
    shapes = [Hypergraph.from_sets(m, [[i] for i in range(1, m + 1)]) for m in range(2, max_m + 1)]
    for n, items in GAP2_TEMPLATES.items():
        if n <= max_m:
            shapes += [Hypergraph.from_sets(n, edges) for _, edges in items]
    for h in shapes:
        for c in (0, 1):
            yield function_of(Hypergraph(h.n_vertices, h.edges + ((0,) if c else ())))


# --- independent oracle ------------------------------------------------------


def set_partitions(k: int):
    """Restricted growth strings of length k, as 1-based block labels."""
    if k == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for b in range(1, top + 2):
            yield from rec(prefix + [b], max(top, b))

    yield from rec([1], 1)


@lru_cache(maxsize=None)
def _all_minor_classes(form: CanonicalForm) -> frozenset[CanonicalForm]:
    t = form.table
    if t.arity == 0:
        return frozenset([form])
    out = set()
    for rgs in set_partitions(t.arity):
        out.add(canonical(apply_map(t, VarMap(rgs, max(rgs)))))
    return frozenset(out)


def brute_lower_covers(f: TruthTable) -> frozenset[CanonicalForm]:
    """Maximal strict minor classes of f, from the full partition enumeration.

    Every minor of f is f composed with a partition of its variables, so the
    strict minors are listed directly and the maximal ones kept.
    """
    form = canonical(f)
    k = form.ess_arity
    if k > BRUTE_FORCE_CAP:
        raise CapExceeded(f"brute force capped at {BRUTE_FORCE_CAP} essential variables")
    strict = [c for c in _all_minor_classes(form) if c.ess_arity < k]
    return frozenset(
        c for c in strict
        if not any(c != d and c in _all_minor_classes(d) for d in strict)
    )


def brute_force_ji(f: TruthTable) -> bool:
    if ess(f) < 2:
        raise ValueError("join-irreducibility is undefined below two essential variables")
    return len(brute_lower_covers(f)) == 1
