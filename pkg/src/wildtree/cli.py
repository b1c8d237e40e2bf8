"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from math import comb

from . import __version__
from .bits import format_labels
from .engine import EngineStats
from .errors import DisconnectedGraphError, GraphError, LibraryError, LimitExceeded
from .generate import random_connected_graph
from .graph import (Graph, complete_graph, enumerate_cycles, enumerate_mincuts, format_graph,
                    is_connected, read_graph)
from .library import DEFAULT_BOUND, build_library, load_library, save_library, sieve
from .noncover import cycles_to_sptrees
from .oracles import (brute_force_connected, brute_force_spanning_trees, connected_count_by_size,
                      kirchhoff_count, reliability_polynomial)
from .transversal import check_conjectures, compress_transversals, mcuts_to_sptrees

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

MAX_CYCLES = 2_000_000
MAX_STACK = 10_000_000
MAX_PARTITION_N = 27
BRUTE_CAP = 200_000


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.start = time.perf_counter()

    def line(self) -> str | None:
        if not self.enabled:
            return None
        return f"elapsed={time.perf_counter() - self.start:.3f}s"


def _emit(*lines):
    for line in lines:
        if line is not None:
            print(line)


def _check_partition_size(g: Graph) -> None:
    if g.n > MAX_PARTITION_N:
        raise LimitExceeded(f"mincut enumeration visits 2^{g.n - 1} partitions; "
                            f"limit is n <= {MAX_PARTITION_N}")


def cmd_mincuts(args) -> int:
    g = read_graph(args.graph)
    _check_partition_size(g)
    if not is_connected(g):
        print("warning: graph is disconnected; it has no good partitions", file=sys.stderr)
        print("0 mincuts")
        return EXIT_OK
    cuts = enumerate_mincuts(g)
    for h in cuts:
        print(format_labels(h))
    print(f"{len(cuts)} mincuts")
    return EXIT_OK


def cmd_cycles(args) -> int:
    g = read_graph(args.graph)
    cycles = enumerate_cycles(g, limit=args.max_cycles)
    for c in cycles:
        print(format_labels(c))
    print(f"{len(cycles)} cycles")
    return EXIT_OK


def _run_method(method: str, g: Graph, args):
    stats = EngineStats()
    if method == "mcuts":
        _check_partition_size(g)
        result = mcuts_to_sptrees(g, jobs=args.jobs, max_stack=args.max_stack, stats=stats)
        return result.rows, result.count, stats
    if method == "cycles":
        result = cycles_to_sptrees(g, max_cycles=args.max_cycles, jobs=args.jobs,
                                   max_stack=args.max_stack, stats=stats)
        return result.rows, result.count, stats
    if not args.lib:
        raise GraphError("--method library needs --lib FILE")
    lib = load_library(args.lib)
    result = sieve(lib, g)
    return result.graph_rows(), result.count, None


def cmd_compress(args) -> int:
    g = read_graph(args.graph)
    clock = _Clock(not args.no_timing)
    if args.method != "library" and not is_connected(g):
        raise DisconnectedGraphError("graph is not connected; it has no spanning trees")
    rows, count, stats = _run_method(args.method, g, args)
    print(f"method={args.method} n={g.n} m={g.m}")
    if args.emit_rows:
        for r in rows:
            print(r)
    note = " (input not spanning)" if args.method == "library" and not rows else ""
    print(f"rows={len(rows)} trees={count}{note}")
    if stats is not None and args.stats:
        print(f"impositions={stats.impositions} final={stats.finalized} max_stack={stats.max_stack}")
    _emit(clock.line())
    return EXIT_OK


def cmd_library(args) -> int:
    clock = _Clock(not args.no_timing)
    if args.action == "build":
        lib = build_library(args.n, bound=args.bound, jobs=args.jobs)
        save_library(lib, args.output)
        print(f"library n={lib.n} rows={len(lib)} trees={lib.tree_total} file={args.output}")
    else:
        lib = load_library(args.lib)
        g = read_graph(args.graph)
        result = sieve(lib, g)
        if args.emit_rows:
            for r in result.graph_rows():
                print(r)
        if not result.rows:
            print("0 rows (input not spanning)")
        else:
            print(f"relevant={len(result.relevant)} rows={len(result.rows)} trees={result.count}")
    _emit(clock.line())
    return EXIT_OK


def cmd_count(args) -> int:
    print(kirchhoff_count(read_graph(args.graph)))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    failures = 0

    def report(ok: bool, what: str) -> None:
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {what}")

    expected = kirchhoff_count(g)
    if g.n > 2:
        other = kirchhoff_count(g, removed=g.n - 1)
        report(other == expected, f"kirchhoff minors agree: {expected} / {other}")
    print(f"kirchhoff={expected}")
    small = comb(g.m, g.n - 1) <= BRUTE_CAP
    reference = set(brute_force_spanning_trees(g, cap=BRUTE_CAP)) if small else None
    if reference is not None:
        report(len(reference) == expected, f"brute force trees={len(reference)}")

    def check_pipeline(name: str, trees: list[int], count: int, rows: int) -> None:
        report(count == expected, f"{name} rows={rows} trees={count}")
        if reference is not None:
            report(len(trees) == len(set(trees)), f"{name} rows are disjoint")
            report(set(trees) == reference, f"{name} tree set equals brute force")

    connected = is_connected(g)
    if not connected:
        report(expected == 0, "disconnected graph has no spanning trees")
    if connected and g.n <= MAX_PARTITION_N:
        res = mcuts_to_sptrees(g)
        check_pipeline("mcuts", list(res.trees()) if small else [], res.count, len(res.rows))
        if g.m <= 16:
            con = compress_transversals(enumerate_mincuts(g))
            members = [x for r in con for x in r.members()]
            report(len(members) == len(set(members)) and set(members) == set(brute_force_connected(g)),
                   f"connected-subgraph rows partition CON ({len(members)} sets)")
            c = connected_count_by_size(con, g.m)
            rel = reliability_polynomial(c, g.n, g.m)
            report(rel(1) == 1 and (g.m == 0 or rel(0) == 0), "reliability polynomial Rel(1)=1, Rel(0)=0")
    if connected:
        try:
            res = cycles_to_sptrees(g, max_cycles=args.max_cycles)
        except LimitExceeded as exc:
            print(f"SKIP cycles: {exc}")
        else:
            check_pipeline("cycles", list(res.trees()) if small else [], res.count, len(res.rows))
    lib = None
    if args.lib:
        try:
            lib = load_library(args.lib)
        except LibraryError as exc:
            report(False, f"library {args.lib}: {exc}")
    elif 2 <= g.n <= 8:
        lib = build_library(g.n)
    if lib is not None:
        try:
            res = sieve(lib, g)
        except GraphError as exc:
            print(f"SKIP library: {exc}")
        else:
            check_pipeline("library", res.trees() if small else [], res.count, len(res.rows))
    print("PASS" if not failures else f"FAIL ({failures} check{'s' if failures > 1 else ''} failed)")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_conjectures(args) -> int:
    report = check_conjectures(args.n, seed=args.seed, bound=args.bound)
    _emit(*report.lines())
    return EXIT_OK


def cmd_reliability(args) -> int:
    g = read_graph(args.graph)
    _check_partition_size(g)
    rows = compress_transversals(enumerate_mincuts(g))
    c = connected_count_by_size(rows, g.m)
    rel = reliability_polynomial(c, g.n, g.m)
    print("c=" + ",".join(map(str, c)))
    print("rel=" + ",".join(map(str, rel.coeffs)))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.complete:
        g = complete_graph(args.complete)
        comment = f"Com({args.complete})"
    else:
        n, m = args.random
        g = random_connected_graph(n, m, args.seed)
        comment = f"random connected ({n},{m}) graph, seed {args.seed}"
    sys.stdout.write(format_graph(g, comment))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wildtree", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"wildtree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def limits(p):
        p.add_argument("--max-cycles", type=int, default=MAX_CYCLES)
        p.add_argument("--max-stack", type=int, default=MAX_STACK)

    p = sub.add_parser("mincuts", help="list all minimal cutsets")
    p.add_argument("graph")
    p.set_defaults(func=cmd_mincuts)

    p = sub.add_parser("cycles", help="list all simple cycles")
    p.add_argument("graph")
    p.add_argument("--max-cycles", type=int, default=MAX_CYCLES)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("compress", help="compress all spanning trees into wildcard rows")
    p.add_argument("graph")
    p.add_argument("--method", choices=("mcuts", "cycles", "library"), default="mcuts")
    p.add_argument("--lib", help="library file for --method library")
    p.add_argument("--emit-rows", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stats", action="store_true", help="print engine counters")
    p.add_argument("--no-timing", action="store_true")
    limits(p)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("library", help="build or sieve a Com(n) library")
    lsub = p.add_subparsers(dest="action", required=True)
    b = lsub.add_parser("build")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-timing", action="store_true")
    s = lsub.add_parser("sieve")
    s.add_argument("--lib", required=True)
    s.add_argument("graph")
    s.add_argument("--emit-rows", action="store_true")
    s.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_library)

    p = sub.add_parser("count", help="spanning-tree count by the matrix-tree theorem")
    p.add_argument("graph")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check every applicable pipeline and oracle")
    p.add_argument("graph")
    p.add_argument("--lib")
    p.add_argument("--max-cycles", type=int, default=MAX_CYCLES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjectures", help="row count and capacity for Com(n)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, help="random mincut order instead of the natural one")
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("reliability", help="connected-subset counts and Rel(p) coefficients")
    p.add_argument("graph")
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("generate", help="write a graph file to stdout")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--complete", type=int, metavar="N")
    group.add_argument("--random", type=int, nargs=2, metavar=("N", "M"))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (GraphError, LibraryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
