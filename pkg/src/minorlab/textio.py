"""Plain-text formats for functions and hypergraphs.

    # a comment
    function 3 e8

    hypergraph 3
    1 2
    empty

The function line carries the truth table as big-endian hex (bit a is
f(a), x_1 least significant).  Each hypergraph line after the header is one
edge; ``empty`` is the empty edge and a single index is a loop.
"""

from __future__ import annotations

from pathlib import Path

from .boolfn import Hypergraph, TruthTable


class FormatError(ValueError):
    pass


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def format_function(f: TruthTable) -> str:
    return f"function {f.arity} {f.hex()}\n"


def parse_function(text: str) -> TruthTable:
    lines = list(_lines(text))
    if len(lines) != 1:
        raise FormatError("expected exactly one 'function' line")
    parts = lines[0].split()
    if len(parts) != 3 or parts[0] != "function":
        raise FormatError(f"bad function line: {lines[0]!r}")
    try:
        n, bits = int(parts[1]), int(parts[2], 16)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return TruthTable(n, bits)


def format_hypergraph(h: Hypergraph) -> str:
    out = [f"hypergraph {h.n_vertices}"]
    for e in h.edge_sets():
        out.append(" ".join(map(str, e)) if e else "empty")
    return "\n".join(out) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "hypergraph":
        raise FormatError(f"bad hypergraph header: {lines[0]!r}")
    n = int(head[1])
    edges = []
    for line in lines[1:]:
        if line == "empty":
            edges.append(())
        else:
            try:
                edges.append(tuple(int(t) for t in line.split()))
            except ValueError:
                raise FormatError(f"bad edge line: {line!r}") from None
    try:
        return Hypergraph.from_sets(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_function(path) -> TruthTable:
    return parse_function(Path(path).read_text())


def read_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())
