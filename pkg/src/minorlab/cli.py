"""Command-line entry point ``minor-lab``.

Exit status: 0 on success, 1 when a verification fails, 2 for bad usage or
unreadable input.
"""

from __future__ import annotations

import argparse
import sys

from .boolfn import CapExceeded, compact, ess, is_minor
from .catalog import build_catalog, write_catalog
from .graphs import check_graph, classify_graph
from .hypergraph import function_of
from .irreducibility import cover_report, dh_set, gap2_classify, is_join_irreducible_h
from .steiner import builtin_systems, is_steiner, steiner_report
from .suites import SUITES, verify_suite
from .textio import FormatError, read_function, read_hypergraph

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _print_lines(lines):
    for line in lines:
        print(line)


def cmd_classify(args) -> int:
    if args.kind == "fn":
        f = read_function(args.file)
        k = ess(f)
        if k < 2:
            print(f"ess\t{k}")
            print("gap\tundefined")
            return OK
        _print_lines(cover_report(f).lines())
        case = gap2_classify(f, check=False)
        if case is not None:
            print(f"gap2_shape\t{case.case}\tm={case.m}\tc={case.c}")
        return OK
    h = read_hypergraph(args.file)
    if args.kind == "graph":
        try:
            check_graph(h)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(f"verdict\t{classify_graph(h)}")
        return OK
    if h.support.bit_count() < 2:
        raise UsageError("need at least two vertices lying in edges")
    print(f"join_irreducible\t{int(is_join_irreducible_h(h))}")
    print(f"dh_size\t{len(dh_set(h))}")
    if h.n_vertices <= 16:
        _print_lines(line for line in cover_report(function_of(h)).lines() if not line.startswith("join"))
    return OK


def cmd_steiner(args) -> int:
    systems = builtin_systems(extended=args.extended or args.source.startswith("sts13"))
    h = systems[args.source] if args.source in systems else read_hypergraph(args.source)
    if not is_steiner(h):
        raise UsageError("input is not a Steiner system")
    try:
        rep = steiner_report(h)
    except AssertionError as exc:
        print(f"error\t{exc}")
        return FAILED
    _print_lines(rep.lines())
    return OK


def cmd_enumerate(args) -> int:
    entries = build_catalog(args.max_arity, jobs=args.jobs)
    write_catalog(entries, args.out)
    levels = max(e.level for e in entries) + 1
    print(f"classes\t{len(entries)}")
    print(f"levels\t{levels}")
    print(f"written\t{args.out}")
    return OK


def cmd_verify(args) -> int:
    res = verify_suite(args.suite, seed=args.seed, jobs=args.jobs, extended=args.extended)
    print(res.summary())
    for failure in res.failures:
        print(f"FAIL\t{failure}")
    return OK if res.ok else FAILED


def cmd_minor(args) -> int:
    f, g = read_function(args.f_file), read_function(args.g_file)
    print(f"minor\t{int(is_minor(f, g))}")
    print(f"ess\t{ess(compact(f))}\t{ess(compact(g))}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled suites")
    common.add_argument("--extended", action="store_true", help="include the STS(13) instances")

    p = argparse.ArgumentParser(prog="minor-lab", description="Minors and join-irreducibility of Boolean functions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="report on a function, graph or hypergraph file")
    c.add_argument("kind", choices=["fn", "graph", "hypergraph"])
    c.add_argument("file")
    c.set_defaults(run=cmd_classify)

    s = sub.add_parser("steiner", help="Steiner system checks")
    ssub = s.add_subparsers(dest="action", required=True)
    sc = ssub.add_parser("check", parents=[common], help="three-way join-irreducibility report")
    sc.add_argument("source", help="hypergraph file or one of fano, ag9, sts13a, sts13b")
    sc.set_defaults(run=cmd_steiner)

    e = sub.add_parser("enumerate", parents=[common], help="write the catalog of small functions")
    e.add_argument("--max-arity", type=int, required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(run=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.set_defaults(run=cmd_verify)

    m = sub.add_parser("minor", help="minor relation between two functions")
    msub = m.add_subparsers(dest="action", required=True)
    mt = msub.add_parser("test", parents=[common], help="is the first function a minor of the second")
    mt.add_argument("f_file")
    mt.add_argument("g_file")
    mt.set_defaults(run=cmd_minor)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.run(args)
    except (UsageError, FormatError, CapExceeded, OSError, ValueError) as exc:
        print(f"minor-lab: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
