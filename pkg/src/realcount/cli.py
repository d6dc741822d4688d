"""Command-line front end.

Subcommands: laman, c2, nbc, bounds, tutte, bigraph, oracle-verify,
catalog, batch.  Exit codes: 0 success, 1 usage error, 2 computation
failure (failures itemised on stderr).
"""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import os
import sys
import time

from .bounds import compute_bounds, nbc_upper_bound, realisation_lower_bound
from .fixtures import fixture, fixture_names
from .graphs import (
    EdgeOrder,
    GraphError,
    LabelledGraph,
    ParseError,
    encode_graph6,
    henneberg_generate,
    is_minimally_rigid_2d,
    parse_edge_list,
    parse_graph6,
)
from .matroids import GraphicMatroid, MatroidError, enumerate_nbc_bases
from .oracle import oracle_count, oracle_verify
from .pairs import (
    bigraph_laman_number,
    count_intersecting_pairs,
    nbc_via_uniform_pairs,
    realisation_number,
)
from .polynomials import characteristic_and_chromatic, tutte_polynomial

WORKERS_ENV = "REALCOUNT_WORKERS"
CSV_HEADER = ["graph", "n", "m", "laman", "c2", "nbc", "upper", "lower",
              "elapsed_ms", "verified"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


class CliError(Exception):
    pass


def _default_workers():
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_graph(args) -> tuple:
    """(graph id, LabelledGraph) from --fixture or --input."""
    if getattr(args, "fixture", None):
        try:
            return args.fixture, fixture(args.fixture)
        except KeyError as e:
            raise CliError(str(e))
    path = getattr(args, "input", None)
    if not path:
        raise CliError("need --fixture or --input")
    return _read_graph_file(path, args.format)


def _read_graph_file(path, fmt):
    if path == "-":
        text = sys.stdin.read()
        name = "stdin"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise CliError(f"cannot read {path}: {e}")
        name = os.path.basename(path)
    try:
        if fmt == "graph6":
            return name, parse_graph6(text.strip().splitlines()[0])
        return name, parse_edge_list(text)
    except (ParseError, GraphError, IndexError) as e:
        raise CliError(f"{path}: {e}")


def _resolve_order(spec, graph: LabelledGraph) -> EdgeOrder:
    m = graph.m
    if spec is None or spec == "paper":
        return EdgeOrder.paper(m)
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad order spec {spec!r}: random:<seed> needs an integer")
        return EdgeOrder.random(m, seed)
    labels = [s.strip() for s in spec.split(",")]
    lookup = {lab: i for i, lab in enumerate(graph.labels)}
    try:
        idxs = [lookup[lab] for lab in labels]
    except KeyError as e:
        raise CliError(f"order mentions unknown edge label {e.args[0]!r}")
    if sorted(idxs) != list(range(m)):
        raise CliError("order must list every edge label exactly once")
    return EdgeOrder.greatest_to_least(idxs)


def _resolve_epsilon(spec, graph):
    if spec is None:
        return None
    lookup = {lab: i for i, lab in enumerate(graph.labels)}
    if spec not in lookup:
        raise CliError(f"epsilon {spec!r} is not an edge label")
    return lookup[spec]


# ---------------------------------------------------------------------------
# row computation (batch / catalog)
# ---------------------------------------------------------------------------

def _compute_row(gid, graph, order_spec, verify, no_timing, oracle_seed):
    t0 = time.perf_counter()
    try:
        laman = graph.is_simple and is_minimally_rigid_2d(graph)
    except GraphError:
        laman = False
    row = {"graph": gid, "n": graph.n, "m": graph.m,
           "laman": "yes" if laman else "no",
           "c2": "", "nbc": "", "upper": "", "lower": "",
           "elapsed_ms": 0, "verified": ""}
    if laman and graph.n >= 3:
        order = _resolve_order(order_spec, graph)
        c2 = realisation_number(graph, order)
        nbc, upper, _odd = nbc_upper_bound(graph, order)
        _cnt, lower = realisation_lower_bound(graph, order)
        row.update(c2=c2, nbc=nbc, upper=upper, lower=lower)
        if verify:
            rep = oracle_count(GraphicMatroid(graph), order=order, seed=oracle_seed)
            row["verified"] = "yes" if rep.count == 2 * c2 else "no"
    if not no_timing:
        row["elapsed_ms"] = int(round((time.perf_counter() - t0) * 1000))
    return row


def _row_worker(packed):
    gid, graph, order_spec, verify, no_timing, oracle_seed = packed
    try:
        return ("ok", _compute_row(gid, graph, order_spec, verify, no_timing,
                                   oracle_seed))
    except Exception as e:  # itemised by the coordinator
        return ("err", (gid, f"{type(e).__name__}: {e}"))


def _emit_rows(rows, args, out=None):
    out = out or sys.stdout
    if getattr(args, "jsonl", False):
        for row in rows:
            obj = {"graph": row["graph"], "n": row["n"], "m": row["m"],
                   "laman": row["laman"] == "yes"}
            for k in ("c2", "nbc", "upper", "lower"):
                obj[k] = row[k] if row[k] != "" else None
            obj["elapsedMs"] = row["elapsed_ms"]
            obj["verified"] = {"yes": True, "no": False}.get(row["verified"])
            out.write(json.dumps(obj) + "\n")
    else:
        writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def _run_batch_like(jobs, args):
    """jobs: list of (graph id, LabelledGraph).  Returns exit code."""
    workers = args.workers
    packed = [(gid, g, args.order, args.verify, args.no_timing, args.seed)
              for gid, g in jobs]
    if workers > 1 and len(packed) > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            if args.timeout:
                results = []
                handles = [pool.apply_async(_row_worker, (p,)) for p in packed]
                for p, h in zip(packed, handles):
                    try:
                        results.append(h.get(timeout=args.timeout))
                    except multiprocessing.TimeoutError:
                        results.append(("err", (p[0], f"timed out after {args.timeout}s")))
            else:
                results = pool.map(_row_worker, packed)
    else:
        results = []
        for p in packed:
            if args.timeout:
                t0 = time.perf_counter()
                res = _row_worker(p)
                if time.perf_counter() - t0 > args.timeout:
                    res = ("err", (p[0], f"exceeded {args.timeout}s"))
                results.append(res)
            else:
                results.append(_row_worker(p))
    rows = [payload for status, payload in results if status == "ok"]
    failures = [payload for status, payload in results if status == "err"]
    _emit_rows(rows, args)
    for gid, msg in failures:
        print(f"FAIL {gid}: {msg}", file=sys.stderr)
    return 2 if failures else 0


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_laman(args):
    _gid, g = _load_graph(args)
    ok = g.is_simple and is_minimally_rigid_2d(g)
    print("true" if ok else "false")
    return 0


def _cmd_c2(args):
    _gid, g = _load_graph(args)
    order = _resolve_order(args.order, g)
    eps = _resolve_epsilon(args.epsilon, g)
    print(realisation_number(g, order, epsilon=eps, strategy=args.strategy,
                             workers=args.workers))
    return 0


def _cmd_nbc(args):
    _gid, g = _load_graph(args)
    order = _resolve_order(args.order, g)
    M = GraphicMatroid(g)
    if args.method == "enum":
        print(len(enumerate_nbc_bases(M, order)))
    elif args.method == "pairs":
        print(nbc_via_uniform_pairs(M, order))
    elif args.method == "tutte":
        print(tutte_polynomial(M).evaluate(1, 0))
    else:
        print(characteristic_and_chromatic(g).nbc)
    return 0


def _cmd_bounds(args):
    gid, g = _load_graph(args)
    order = _resolve_order(args.order, g)
    rep = compute_bounds(g, order, graph_id=gid, with_c2=not args.no_c2,
                         with_best_order=args.best_order, workers=args.workers)
    if args.json:
        print(json.dumps(rep.to_json_obj(), sort_keys=True))
    else:
        obj = rep.to_json_obj()
        for k in ("graph", "nbcCount", "upperBound", "realisationBasisCount",
                  "lowerBound", "c2", "bestOrder", "bestOrderCount",
                  "bestOrderCertified"):
            if k in obj:
                print(f"{k}: {obj[k]}")
    return 0


def _cmd_tutte(args):
    _gid, g = _load_graph(args)
    poly = tutte_polynomial(GraphicMatroid(g))
    print(json.dumps(poly.to_json_map(), sort_keys=True))
    return 0


def _cmd_bigraph(args):
    gid1, g1 = _read_graph_file(args.left, args.format)
    gid2, g2 = _read_graph_file(args.right, args.format)
    order = _resolve_order(args.order, g1) if args.order else None
    print(bigraph_laman_number(g1, g2, order=order, workers=args.workers))
    return 0


def _cmd_oracle_verify(args):
    gid, g = _load_graph(args)
    order = _resolve_order(args.order, g)
    eps = _resolve_epsilon(args.epsilon, g)
    M = GraphicMatroid(g)
    expected = count_intersecting_pairs(M, M, order).ordered
    reports = oracle_verify(M, order=order, seeds=tuple(range(args.seeds)),
                            epsilons=None if eps is None else (eps,),
                            workers=args.workers if args.workers > 1 else None)
    counts = [r.count for r in reports]
    line = " == ".join(str(c) for c in counts)
    if all(c == expected for c in counts):
        print(f"{line}; verified")
        return 0
    print(f"{line}; MISMATCH (pair count {expected})")
    print(f"FAIL {gid}: oracle disagrees with the pair count", file=sys.stderr)
    return 2


def _cmd_batch(args):
    jobs = []
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.input) as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            raise CliError(f"cannot read {args.input}: {e}")
    failures = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            jobs.append((line, parse_graph6(line)))
        except (ParseError, GraphError) as e:
            failures.append((f"line {lineno}", str(e)))
    code = _run_batch_like(jobs, args)
    for gid, msg in failures:
        print(f"FAIL {gid}: {msg}", file=sys.stderr)
    return 2 if failures else code


def _cmd_catalog(args):
    jobs = []
    for n in range(args.min_n, args.max_n + 1):
        graphs = henneberg_generate(n)
        for g in graphs:
            jobs.append((encode_graph6(g), g))
    return _run_batch_like(jobs, args)


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _add_graph_source(sp, fixture_ok=True):
    if fixture_ok:
        sp.add_argument("--fixture", choices=fixture_names(),
                        help="built-in example graph")
    sp.add_argument("--input", help="path to a graph file, or - for stdin")
    sp.add_argument("--format", choices=["edge-list", "graph6"],
                    default="edge-list", help="input format (default edge-list)")


def _add_order(sp):
    sp.add_argument("--order", default=None,
                    help='edge order: "paper" (default), "random:SEED", or a '
                         "comma list of edge labels from greatest to least")


def build_parser():
    p = _Parser(prog="realcount",
                description="Counting planar realisations of minimally rigid "
                            "graphs through chains of matroid flats.")
    p.add_argument("--version", action="store_true", help="print version and exit")
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("laman", help="minimal rigidity test")
    _add_graph_source(sp)

    sp = sub.add_parser("c2", help="realisation count")
    _add_graph_source(sp)
    _add_order(sp)
    sp.add_argument("--epsilon", default=None, help="base edge label")
    sp.add_argument("--strategy", choices=["auto", "split", "interleaved", "fixed"],
                    default="auto")
    sp.add_argument("--workers", type=int, default=_default_workers())

    sp = sub.add_parser("nbc", help="count of bases avoiding broken circuits")
    _add_graph_source(sp)
    _add_order(sp)
    sp.add_argument("--method", choices=["enum", "pairs", "tutte", "chromatic"],
                    default="enum")

    sp = sub.add_parser("bounds", help="upper/lower bounds and c2")
    _add_graph_source(sp)
    _add_order(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-c2", action="store_true", help="skip the exact count")
    sp.add_argument("--best-order", action="store_true",
                    help="also search for the best order")
    sp.add_argument("--workers", type=int, default=_default_workers())

    sp = sub.add_parser("tutte", help="Tutte polynomial as JSON")
    _add_graph_source(sp)

    sp = sub.add_parser("bigraph", help="Laman number of two glued multigraphs")
    sp.add_argument("--left", required=True, help="first graph file")
    sp.add_argument("--right", required=True, help="second graph file")
    sp.add_argument("--format", choices=["edge-list", "graph6"],
                    default="edge-list")
    _add_order(sp)
    sp.add_argument("--workers", type=int, default=_default_workers())

    sp = sub.add_parser("oracle-verify", help="cross-check the pair count")
    _add_graph_source(sp)
    _add_order(sp)
    sp.add_argument("--epsilon", default=None, help="base edge label")
    sp.add_argument("--seeds", type=int, default=3, help="number of weight seeds")
    sp.add_argument("--workers", type=int, default=_default_workers())

    for name, fn in (("batch", None), ("catalog", None)):
        sp = sub.add_parser(name, help="CSV/JSONL rows for many graphs")
        if name == "batch":
            sp.add_argument("--input", required=True,
                            help="file of graph6 lines, or - for stdin")
        else:
            sp.add_argument("--min-n", type=int, default=3)
            sp.add_argument("--max-n", type=int, default=6)
        _add_order(sp)
        sp.add_argument("--workers", type=int, default=_default_workers())
        sp.add_argument("--jsonl", action="store_true", help="JSON lines output")
        sp.add_argument("--verify", action="store_true",
                        help="cross-check each c2 against the oracle")
        sp.add_argument("--seed", type=int, default=0, help="oracle weight seed")
        sp.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 for diffable output")
        sp.add_argument("--timeout", type=float, default=None,
                        help="per-graph time limit in seconds")
    return p


_DISPATCH = {
    "laman": _cmd_laman,
    "c2": _cmd_c2,
    "nbc": _cmd_nbc,
    "bounds": _cmd_bounds,
    "tutte": _cmd_tutte,
    "bigraph": _cmd_bigraph,
    "oracle-verify": _cmd_oracle_verify,
    "batch": _cmd_batch,
    "catalog": _cmd_catalog,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from . import __version__
        print(__version__)
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return _DISPATCH[args.command](args)
    except CliError as e:
        print(f"realcount: {e}", file=sys.stderr)
        return 1
    except (GraphError, MatroidError) as e:
        print(f"realcount: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
