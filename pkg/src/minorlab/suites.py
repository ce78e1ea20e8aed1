"""Named verification suites: exhaustive or seeded-sampled checks of the structural results.

Each suite returns a SuiteResult whose failures carry enough text to rebuild
the offending input.  A correct build reports no failures.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .boolfn import (
    Hypergraph,
    TruthTable,
    VarMap,
    apply_map,
    apply_map_rows,
    canonical,
    ess,
    identification_closure,
    is_minor,
    moebius_rows,
    zhegalkin,
)
from .catalog import build_catalog
from .graphs import classify_graph, classify_loopless, enumerate_graphs
from .hypergraph import (
    apply_quotient,
    apply_quotient_rows,
    function_of,
    is_hyper_minor,
    is_quotient_map,
    reduced,
)
from .irreducibility import (
    _all_minor_classes,
    brute_force_ji,
    brute_lower_covers,
    cover_report,
    gap,
    gap2_classify,
    gap2_instances,
)
from .steiner import builtin_systems, check_fresh_fixed, check_lift, complete_system, steiner_report

DEFAULT_SEED = 2024
MAX_REPORTED = 20


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, repro) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(repro() if callable(repro) else str(repro))

    def merge(self, other: SuiteResult) -> None:
        self.checks += other.checks
        self.failures += other.failures

    def summary(self) -> str:
        line = f"{self.name}: {self.checks} checks, {len(self.failures)} failures"
        if self.seed is not None:
            line += f" (seed {self.seed})"
        return line


def _fn(f: TruthTable) -> str:
    return f"function {f.arity} {f.hex()}"


def _hg(h: Hypergraph) -> str:
    return f"hypergraph {h!r}"


# --- function suites ---------------------------------------------------------------


def _salomaa_chunk(args):
    start, stop = args
    res = SuiteResult("salomaa")
    for bits in range(start, stop):
        f = TruthTable(4, bits)
        if ess(f) >= 2:
            res.check(gap(f) in (1, 2), lambda: f"{_fn(f)}: gap {gap(f)}")
    return res


def suite_salomaa(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Every arity-4 table with two or more essential variables has gap 1 or 2."""
    step = 1 << 12
    work = [(s, s + step) for s in range(0, 1 << 16, step)]
    res = SuiteResult("salomaa")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_salomaa_chunk, work))
    else:
        parts = [_salomaa_chunk(w) for w in work]
    for p in parts:
        res.merge(p)
    return res


def brute_gap(f: TruthTable) -> int:
    """Gap from the full list of minor classes, without pair bookkeeping."""
    form = canonical(f)
    smaller = [c.ess_arity for c in _all_minor_classes(form) if c != form]
    return form.ess_arity - max(smaller)


def suite_gap2(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Classes of gap 2 at arity <= 4 are exactly the listed shapes."""
    res = SuiteResult("gap2")
    classes = [e.representative for e in build_catalog(4, jobs) if e.ess >= 2]
    found = {c for c in classes if brute_gap(c.table) == 2}
    listed = {canonical(f) for f in gap2_instances(4)}
    for c in sorted(found | listed, key=lambda c: c.key()):
        res.check(c in found and c in listed,
                  lambda: f"{_fn(c.table)}: gap2={c in found} listed={c in listed}")
    for c in classes:
        res.check((gap2_classify(c.table, check=False) is not None) == (c in found),
                  lambda: f"{_fn(c.table)}: recognizer disagrees with brute gap")
    return res


def suite_lowercover(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Lower covers share one essential arity, ess-1 or ess-2; ess-2 means one cover."""
    res = SuiteResult("lowercover")
    for bits in range(1 << 16):
        f = TruthTable(4, bits)
        k = ess(f)
        if k < 2:
            continue
        rep = cover_report(f)
        fast = {canonical(t) for t in rep.lower_cover_classes}
        slow = brute_lower_covers(f)
        arities = {c.ess_arity for c in slow}
        res.check(fast == slow, lambda: f"{_fn(f)}: cover classes differ from brute force")
        res.check(len(arities) == 1 and arities <= {k - 1, k - 2},
                  lambda: f"{_fn(f)}: cover arities {sorted(arities)}")
        res.check(k - 2 not in arities or len(slow) == 1,
                  lambda: f"{_fn(f)}: drop 2 with {len(slow)} cover classes")
        res.check(rep.join_irreducible == (len(slow) == 1),
                  lambda: f"{_fn(f)}: join-irreducible flag wrong")
    return res


# --- hypergraph suites -------------------------------------------------------------


def _random_hypergraph(rng: random.Random, n: int) -> Hypergraph:
    return Hypergraph(n, tuple(e for e in range(1 << n) if rng.random() < 0.5))


def _random_map(rng: random.Random, n: int, m: int) -> VarMap:
    return VarMap(tuple(rng.randint(1, m) for _ in range(n)), m)


def _pointwise_exhaustive(res: SuiteResult, max_vertices: int) -> None:
    for n in range(1, max_vertices + 1):
        width = 1 << n
        codes = np.arange(1 << width, dtype=np.int64)
        coeffs = ((codes[:, None] >> np.arange(width)) & 1).astype(bool)
        tables = moebius_rows(coeffs)
        for m in range(1, max_vertices + 1):
            for image in itertools.product(range(1, m + 1), repeat=n):
                h = VarMap(image, m)
                lhs = apply_quotient_rows(coeffs, h)
                rhs = moebius_rows(apply_map_rows(tables, h))
                bad = np.flatnonzero((lhs != rhs).any(axis=1))
                res.checks += len(codes)
                for code in bad[:MAX_REPORTED]:
                    edges = tuple(e for e in range(width) if code >> e & 1)
                    res.failures.append(f"{_hg(Hypergraph(n, edges))} map {image}->{m}")


def _minor_iff_exhaustive(res: SuiteResult, max_vertices: int) -> None:
    hs = [Hypergraph(n, tuple(e for e in range(1 << n) if code >> e & 1))
          for n in range(1, max_vertices + 1) for code in range(1 << (1 << n))]
    fs = {h: function_of(h) for h in hs}
    for src in hs:
        below = set()
        for m in range(1, max_vertices + 1):
            for image in itertools.product(range(1, m + 1), repeat=src.n_vertices):
                below.add(apply_quotient(src, VarMap(image, m)))
        for h in hs:
            res.check((h in below) == is_minor(fs[h], fs[src]),
                      lambda: f"{_hg(h)} vs {_hg(src)}: hypergraph and function order differ")


def _codes(rows: np.ndarray) -> np.ndarray:
    return rows.astype(np.int64) @ (1 << np.arange(rows.shape[1], dtype=np.int64))


def _minor_iff_by_classes(res: SuiteResult, max_vertices: int) -> None:
    """Both orders agree on every pair of hypergraphs with at most max_vertices vertices.

    The quotients of a source depend only on its isomorphism class, and two
    hypergraphs on the same vertices are isomorphic exactly when their
    functions are equivalent, so one source per function class suffices.  For
    each source and target size, every quotient must be a function minor, and
    the number of distinct quotients must equal the number of labelled
    hypergraphs whose function is a minor.
    """
    index: dict = {}
    ids, coeffs = {}, {}
    for m in range(1, max_vertices + 1):
        width = 1 << m
        codes = np.arange(1 << width, dtype=np.int64)
        coeffs[m] = ((codes[:, None] >> np.arange(width)) & 1).astype(bool)
        tables = _codes(moebius_rows(coeffs[m]))
        ids[m] = np.array([index.setdefault(canonical(TruthTable(m, int(t))), len(index)) for t in tables])
    forms = sorted(index, key=index.get)
    below = np.zeros((len(forms), len(forms)), dtype=bool)
    for form, i in index.items():
        below[i, [index[c] for c in identification_closure(form)]] = True
    sizes = {m: np.bincount(ids[m], minlength=len(forms)) for m in ids}
    for n in range(1, max_vertices + 1):
        _, first = np.unique(ids[n], return_index=True)
        src_ids = ids[n][first]
        for m in range(1, max_vertices + 1):
            quotients = np.stack([
                _codes(apply_quotient_rows(coeffs[n][first], VarMap(image, m)))
                for image in itertools.product(range(1, m + 1), repeat=n)
            ], axis=1)
            sound = below[src_ids[:, None], ids[m][quotients]].all(axis=1)
            q = np.sort(quotients, axis=1)
            distinct = 1 + (np.diff(q, axis=1) != 0).sum(axis=1)
            complete = distinct == below[src_ids] @ sizes[m]
            for k in range(len(first)):
                src = Hypergraph(n, tuple(e for e in range(1 << n) if int(first[k]) >> e & 1))
                res.check(bool(sound[k]), lambda: f"{_hg(src)}: a quotient on {m} vertices is not a minor")
                res.check(bool(complete[k]), lambda: f"{_hg(src)}: some minor on {m} vertices is not a quotient")


def suite_correspondence(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Quotients on the hypergraph side are compositions on the function side."""
    seed = DEFAULT_SEED if seed is None else seed
    res = SuiteResult("correspondence", seed=seed)
    _pointwise_exhaustive(res, 4)
    rng = random.Random(seed)
    for _ in range(200):
        n = rng.choice((5, 6))
        h = _random_hypergraph(rng, n)
        sigma = _random_map(rng, n, rng.randint(1, 6))
        lhs = apply_quotient(h, sigma)
        rhs = zhegalkin(apply_map(function_of(h), sigma))
        res.check(lhs == rhs, lambda: f"{_hg(h)} map {sigma.image}->{sigma.codomain_size}")
    _minor_iff_exhaustive(res, 3)
    _minor_iff_by_classes(res, 4)
    for _ in range(200):
        src = _random_hypergraph(rng, rng.choice((5, 6)))
        m = rng.randint(1, 4)
        if rng.random() < 0.5:
            h = apply_quotient(src, _random_map(rng, src.n_vertices, m))
        else:
            h = _random_hypergraph(rng, m)
        res.check(is_hyper_minor(h, src, cross_check=False) == is_minor(function_of(h), function_of(src)),
                  lambda: f"{_hg(h)} vs {_hg(src)}: hypergraph and function order differ")
    return res


def suite_quasiorder(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Transitivity of both orders along random chains of quotient maps."""
    seed = DEFAULT_SEED if seed is None else seed
    res = SuiteResult("quasiorder", seed=seed)
    rng = random.Random(seed)
    for _ in range(1000):
        n3 = rng.randint(1, 5)
        n2, n1 = rng.randint(1, 5), rng.randint(1, 5)
        h3 = _random_hypergraph(rng, n3)
        a, b = _random_map(rng, n3, n2), _random_map(rng, n2, n1)
        h2 = apply_quotient(h3, a)
        h1 = apply_quotient(h2, b)
        repro = f"{_hg(h3)} maps {a.image}->{n2}, {b.image}->{n1}"
        res.check(is_quotient_map(a.then(b), h3, h1), lambda: f"{repro}: composite is not a quotient")
        f1, f2, f3 = function_of(h1), function_of(h2), function_of(h3)
        res.check(is_minor(f1, f2) and is_minor(f2, f3), lambda: f"{repro}: chain not detected")
        res.check(is_minor(f1, f3), lambda: f"{repro}: <= not transitive")
        res.check(is_minor(f3, f3) and is_quotient_map(VarMap.identity(n3), h3, h3),
                  lambda: f"{repro}: not reflexive")
    return res


# --- graph and design suites -------------------------------------------------------


def _graph_suite(name: str, allow_loops: bool, max_n: int, classify) -> SuiteResult:
    res = SuiteResult(name)
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n, allow_loops=allow_loops):
            if reduced(g).n_vertices < 2:
                continue
            verdict = classify(g)
            res.check(verdict.join_irreducible == brute_force_ji(function_of(g)),
                      lambda: f"{_hg(g)}: verdict {verdict}")
    return res


def suite_graphs6(seed=None, jobs=1, extended=False) -> SuiteResult:
    return _graph_suite("graphs6", False, 6, classify_loopless)


def suite_loops5(seed=None, jobs=1, extended=False) -> SuiteResult:
    return _graph_suite("loops5", True, 5, classify_graph)


def steiner_instances(extended: bool = False) -> dict[str, Hypergraph]:
    systems = builtin_systems(extended)
    for n in range(3, 8):
        systems[f"K{n}"] = complete_system(n)
    return systems


EXPECTED_JI = {"fano", "ag9", "K3", "K4", "K5", "K6", "K7"}


def suite_steiner(seed=None, jobs=1, extended=False) -> SuiteResult:
    """Three-way agreement on Steiner systems; the small ones must be join-irreducible."""
    res = SuiteResult("steiner")
    for name, h in steiner_instances(extended).items():
        try:
            rep = steiner_report(h)
        except AssertionError as exc:
            res.check(False, f"{name}: {exc}")
            continue
        res.check(rep.agree, f"{name}: {rep}")
        if name in EXPECTED_JI:
            res.check(rep.ji, f"{name}: expected join-irreducible, got {rep}")
        if rep.k >= 3 or rep.n >= 4:
            res.check(rep.dh_size == rep.n_pairs, f"{name}: D_H has {rep.dh_size}/{rep.n_pairs} pairs")
        else:
            res.check(rep.dh_size == 0, f"{name}: D_H has {rep.dh_size}/{rep.n_pairs} pairs")
        if rep.k >= 3 and rep.minus2_mono:
            pairs = list(itertools.combinations(range(1, h.n_vertices + 1), 2))
            for e2 in pairs[1:]:
                res.check(check_lift(h, pairs[0], e2), f"{name}: lift fails for {pairs[0]} -> {e2}")
                res.check(check_fresh_fixed(h, pairs[0], e2), f"{name}: fresh vertex moves for {pairs[0]} -> {e2}")
    return res


SUITES = {
    "salomaa": suite_salomaa,
    "gap2": suite_gap2,
    "lowercover": suite_lowercover,
    "correspondence": suite_correspondence,
    "graphs6": suite_graphs6,
    "loops5": suite_loops5,
    "steiner": suite_steiner,
    "quasiorder": suite_quasiorder,
}


def verify_suite(name: str, seed: int | None = None, jobs: int = 1, extended: bool = False) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed=seed, jobs=jobs, extended=extended)
