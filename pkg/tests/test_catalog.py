import pytest

import oracles
from minorlab.boolfn import CapExceeded, TruthTable, is_minor
from minorlab.catalog import (
    build_catalog,
    compute_levels,
    enumerate_functions,
    format_catalog,
    read_catalog,
    write_catalog,
)


def oracle_classes(n):
    return {oracles.canon(oracles.values_of(b, n)) for b in range(1 << (1 << n))}


def test_class_counts():
    assert len(enumerate_functions(0)) == 2
    assert len(enumerate_functions(1)) == 4
    assert len(enumerate_functions(2)) == len(oracle_classes(2)) == 12
    assert len(enumerate_functions(3)) == len(oracle_classes(3)) == 80


def test_representatives_match_oracle():
    got = {(e.ess, e.representative.table.bits) for e in enumerate_functions(3)}
    assert got == oracle_classes(3)


def test_ids_are_ranks():
    entries = enumerate_functions(3)
    keys = [e.representative.key() for e in entries]
    assert keys == sorted(keys)
    assert [e.class_id for e in entries] == list(range(len(entries)))


def test_level_zero():
    cat = build_catalog(3)
    zero = [e for e in cat if e.level == 0]
    assert [e.key for e in zero] == ["0:0", "0:1", "1:1", "1:2"]
    for a in zero:
        for b in zero:
            if a is not b:
                assert not is_minor(a.representative.table, b.representative.table)


def test_levels_match_oracle_peeling():
    cat = build_catalog(3)
    below = {}
    for e in cat:
        t = e.representative.table
        below[(e.ess, t.bits)] = oracles.minor_classes(oracles.values_of(t.bits, t.arity)) - {(e.ess, t.bits)}
    remaining, level, depth = set(below), {}, 0
    while remaining:
        layer = {c for c in remaining if not below[c] & remaining}
        level.update(dict.fromkeys(layer, depth))
        remaining -= layer
        depth += 1
    assert {(e.ess, e.representative.table.bits): e.level for e in cat} == level


def test_cover_consistency():
    cat = build_catalog(3)
    by_id = {e.class_id: e for e in cat}
    for e in cat:
        if e.ess < 2:
            assert e.gap is None and not e.lower_cover_class_ids
            continue
        covers = [by_id[c] for c in e.lower_cover_class_ids]
        assert len({c.ess for c in covers}) == 1
        assert covers[0].ess in (e.ess - 1, e.ess - 2)
        assert e.join_irreducible == (len(covers) == 1)
        assert all(c.level == e.level - 1 for c in covers)


def test_parallel_is_byte_identical(tmp_path):
    write_catalog(build_catalog(3, jobs=1), tmp_path / "a.tsv")
    write_catalog(build_catalog(3, jobs=2), tmp_path / "b.tsv")
    assert (tmp_path / "a.tsv").read_bytes() == (tmp_path / "b.tsv").read_bytes()


def test_round_trip(tmp_path):
    cat = build_catalog(2)
    write_catalog(cat, tmp_path / "c.tsv")
    rows = read_catalog(tmp_path / "c.tsv")
    assert [r["key"] for r in rows] == [e.key for e in cat]
    assert rows[4] == {"key": "2:1", "class_id": "4", "ess": "2", "gap": "1",
                       "join_irreducible": "1", "level": "1", "lower_covers": "2"}
    assert format_catalog(cat).splitlines()[0].startswith("key\tclass_id")


def test_levels_need_closed_catalog():
    cat = [e for e in enumerate_functions(2) if e.ess != 1]
    with pytest.raises(ValueError):
        compute_levels(cat)


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_functions(5)
    assert TruthTable(0, 1).hex() == "1"
