"""Exhaustive catalog of small Boolean functions up to equivalence.

Classes are identified by their canonical table; ``class_id`` is the rank of
that table in (essential arity, bits) order, so ids do not depend on how the
enumeration was split across workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .boolfn import CanonicalForm, CapExceeded, TruthTable, canonical, identification_closure
from .irreducibility import cover_report

MAX_CATALOG_ARITY = 4
CHUNKS = 16


@dataclass(frozen=True)
class CatalogEntry:
    class_id: int
    representative: CanonicalForm
    arity: int
    ess: int
    gap: int | None
    join_irreducible: bool | None
    level: int | None
    lower_cover_class_ids: tuple[int, ...]

    @property
    def key(self) -> str:
        return f"{self.ess}:{self.representative.table.hex()}"


def _classes_in_range(args):
    n, start, stop = args
    return sorted({canonical(TruthTable(n, b)).key() for b in range(start, stop)})


def _ranges(n: int, chunks: int):
    total = 1 << (1 << n)
    step = max(1, -(-total // chunks))
    return [(n, s, min(total, s + step)) for s in range(0, total, step)]


def enumerate_functions(max_arity: int, jobs: int = 1) -> list[CatalogEntry]:
    """One entry per class of functions with at most ``max_arity`` variables."""
    if not 0 <= max_arity <= MAX_CATALOG_ARITY:
        raise CapExceeded(f"catalog arity capped at {MAX_CATALOG_ARITY}")
    work = _ranges(max_arity, CHUNKS)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_classes_in_range, work))
    else:
        parts = [_classes_in_range(w) for w in work]
    keys = sorted(set().union(*parts))
    forms = [canonical(TruthTable(k, bits)) for k, bits in keys]
    ids = {form: i for i, form in enumerate(forms)}
    entries = []
    for i, form in enumerate(forms):
        gap = ji = None
        covers: tuple[int, ...] = ()
        if form.ess_arity >= 2:
            rep = cover_report(form.table)
            gap, ji = rep.gap, rep.join_irreducible
            covers = tuple(sorted(ids[canonical(t)] for t in rep.lower_cover_classes))
        entries.append(CatalogEntry(i, form, form.table.arity, form.ess_arity, gap, ji, None, covers))
    return entries


def compute_levels(entries: list[CatalogEntry]) -> list[CatalogEntry]:
    """Peel off minimal classes repeatedly; level n is the n-th layer removed."""
    below = {
        e.class_id: {c for c in identification_closure(e.representative) if c != e.representative}
        for e in entries
    }
    by_form = {e.representative: e.class_id for e in entries}
    for e in entries:
        if not all(c in by_form for c in below[e.class_id]):
            raise ValueError("catalog is not closed under minors")
    remaining = {e.class_id for e in entries}
    level = {}
    depth = 0
    while remaining:
        layer = {cid for cid in remaining if not any(by_form[c] in remaining for c in below[cid])}
        for cid in layer:
            level[cid] = depth
        remaining -= layer
        depth += 1
    return [replace(e, level=level[e.class_id]) for e in entries]


HEADER = "key\tclass_id\tess\tgap\tjoin_irreducible\tlevel\tlower_covers"


def _field(x):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(int(x))
    return str(x)


def format_catalog(entries: list[CatalogEntry]) -> str:
    rows = [HEADER]
    for e in sorted(entries, key=lambda e: e.class_id):
        covers = ",".join(map(str, e.lower_cover_class_ids)) or "-"
        rows.append("\t".join([e.key, str(e.class_id), str(e.ess), _field(e.gap),
                               _field(e.join_irreducible), _field(e.level), covers]))
    return "\n".join(rows) + "\n"


def write_catalog(entries: list[CatalogEntry], path) -> None:
    Path(path).write_text(format_catalog(entries))


def read_catalog(path) -> list[dict]:
    lines = Path(path).read_text().splitlines()
    cols = lines[0].split("\t")
    return [dict(zip(cols, line.split("\t"))) for line in lines[1:]]


def build_catalog(max_arity: int, jobs: int = 1) -> list[CatalogEntry]:
    return compute_levels(enumerate_functions(max_arity, jobs))
