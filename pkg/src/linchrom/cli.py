"""Command-line front end: ``linchrom <command> ...``.

Exit codes: 0 success, 1 a checked claim failed (witness printed), 2 bad
usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Iterable, Sequence

from . import colorers, graph as gc, obstructions as ob, scan
from .graph import Graph, GraphError
from .solvers import compute
from .verify import (
    Coloring,
    EliminationForest,
    certified_centered,
    find_centerless_connected_set,
    find_centerless_path,
    find_improper_edge,
)

THREADS_ENV = "LINCHROM_THREADS"
EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input --------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """graph6 lines, or edge lists (``n`` then ``u v`` lines) split by blank lines."""
    body = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    first = next((ln.strip() for ln in body if ln.strip()), None)
    if first is None:
        return []
    if fmt == "auto":
        fmt = "edges" if first.split()[0].isdigit() else "graph6"
    if fmt == "graph6":
        return [gc.from_graph6(ln) for ln in body if ln.strip()]
    graphs, block = [], []
    for ln in body + [""]:
        if ln.strip():
            block.append(ln)
        elif block:
            graphs.append(gc.from_edge_list("\n".join(block)))
            block = []
    return graphs


def read_graphs(paths: Sequence[str], fmt: str) -> list[Graph]:
    out = []
    for p in paths or ["-"]:
        out.extend(parse_graphs(_read_text(p), fmt))
    return out


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: bad JSON ({exc.msg})") from None


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer") from None
    return os.cpu_count() or 1


# -- output -------------------------------------------------------------


def emit(args, obj) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    elif isinstance(obj, dict):
        for k, v in obj.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v)}")
        print()
    else:
        print(obj)


# -- commands -----------------------------------------------------------

NAMED = {
    "path": (1, gc.path_graph),
    "cycle": (1, gc.cycle_graph),
    "complete": (1, gc.complete_graph),
    "star": (1, gc.star),
    "bintree": (1, gc.complete_binary_tree),
    "grid": (1, gc.grid_graph),
    "corook": (2, gc.corook_graph),
    "multipartite": (None, lambda *p: gc.complete_multipartite(p)),
    "caterpillar": (None, lambda *legs: gc.caterpillar(legs)),
}


def _generate(args) -> Iterable[Graph]:
    kind = args.family
    if kind in ("all", "trees", "caterpillars"):
        if args.n is None:
            raise UsageError(f"gen {kind} needs --n")
        if kind == "all":
            return gc.enumerate_graphs(args.n, connected_only=args.connected)
        return gc.enumerate_trees(args.n) if kind == "trees" else gc.enumerate_caterpillars(args.n)
    if kind == "random":
        return scan.random_graphs(args.count, args.n or 10, args.seed, args.p)
    arity, make = NAMED[kind]
    if arity is not None and len(args.params) != arity:
        raise UsageError(f"gen {kind} takes {arity} integer argument(s)")
    if not args.params:
        raise UsageError(f"gen {kind} needs integer arguments")
    return [make(*args.params)]


def cmd_gen(args) -> int:
    graphs = list(_generate(args))
    if args.json:
        print(json.dumps([gc.to_graph6(g) for g in graphs]))
    elif args.format == "edges":
        print("\n".join(gc.to_edge_list(g) for g in graphs), end="")
    else:
        for g in graphs:
            print(gc.to_graph6(g))
    return EXIT_OK


def cmd_compute(args) -> int:
    lin, cen = args.lin, args.cen
    if not lin and not cen:
        lin = cen = True
    for g in read_graphs(args.files, args.format):
        res = compute(g, lin, cen)
        print(json.dumps(res, sort_keys=True) if args.json else _compute_text(g, res))
    return EXIT_OK


def _compute_text(g: Graph, res: dict) -> str:
    return f"{gc.to_graph6(g)} order={res['order']} chi_lin={res['chi_lin']} chi_cen={res['chi_cen']} ms={res['millis']}"


def cmd_verify(args) -> int:
    (g, *rest) = read_graphs(args.files, args.format) or [None]
    if g is None or rest:
        raise UsageError("verify expects exactly one graph")
    data = _read_text(args.coloring)
    try:
        c = Coloring.parse(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(c) != g.n:
        raise UsageError(f"coloring has {len(c)} entries, graph has {g.n} vertices")
    out = {"kind": args.kind, "palette": c.palette_size}
    if args.kind == "proper":
        v = find_improper_edge(g, c)
    elif args.kind == "linear":
        v = find_centerless_path(g, c)
    elif args.forest:
        f = EliminationForest(tuple(_load_json(args.forest)))
        out["certificate"] = certified_centered(g, f, c)
        v = find_centerless_connected_set(g, c) if g.n <= 20 else None
    else:
        v = find_centerless_connected_set(g, c)
    out["accepted"] = v is None and out.get("certificate", True)
    out["witness"] = None if v is None else {"kind": v.kind, "vertices": list(v.witness)}
    emit(args, out)
    return EXIT_OK if out["accepted"] else EXIT_CLAIM


def _class_coloring(args) -> colorers.ClassColoring:
    p = args.params
    kind = args.family
    try:
        if kind == "path":
            return colorers.color_path(*p)
        if kind == "grid":
            return colorers.color_grid(*p)
        if kind == "bintree":
            return colorers.color_binary_tree(*p)
        if kind == "multipartite":
            return colorers.color_complete_multipartite(p)
        if kind == "corook":
            return colorers.color_corook(*p)
        if kind == "caterpillar":
            return colorers.color_caterpillar(gc.caterpillar(p))
        if kind == "star-forest":
            return colorers.color_star_forest(gc.star(*p))
    except TypeError:
        raise UsageError(f"wrong number of arguments for color {kind}") from None
    raise UsageError(f"unknown family {kind}")


def cmd_color(args) -> int:
    cc = _class_coloring(args)
    ok = cc.verify()
    out = {
        "class": cc.class_tag,
        "kind": cc.kind,
        "graph6": gc.to_graph6(cc.graph) if cc.graph.n <= gc.MAX_VERTICES else None,
        "order": cc.graph.n,
        "claimed_size": cc.claimed_size,
        "palette": cc.coloring.palette_size,
        "coloring": list(cc.coloring.colors),
        "forest": cc.forest.to_json() if cc.forest else None,
        "verified": ok,
    }
    emit(args, out)
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_obstructions(args) -> int:
    seeds = None
    db = Path(args.db) if args.db else None
    if db is not None and db.exists():
        seeds = ob.ObstructionSet.load(db, args.k)

    def checkpoint(obs: ob.ObstructionSet) -> None:
        if db is not None:
            obs.save(db)

    obs = ob.enumerate_obstructions(
        args.k, args.nmax, seeds=seeds, budget_seconds=args.budget, workers=args.threads, checkpoint=checkpoint
    )
    checkpoint(obs)
    out = obs.sidecar()
    out["levels"] = obs.level_stats
    if args.appendix:
        out["appendix"] = ob.cross_check_appendix(obs)
    emit(args, out)
    return EXIT_OK


def cmd_characterize(args) -> int:
    obs = ob.ObstructionSet.load(args.db, args.k)
    n = args.n if args.n is not None else obs.n_max_searched
    if n > obs.n_max_searched:
        raise UsageError(f"database only covers orders up to {obs.n_max_searched}")
    stream = read_graphs(args.files, args.format) if args.files else gc.enumerate_graphs(n, connected_only=args.connected)
    rep = ob.check_characterization(obs.k, obs, stream)
    emit(args, rep)
    return EXIT_OK if not rep["discrepancies"] else EXIT_CLAIM


def cmd_scan(args) -> int:
    if args.what == "conjecture":
        graphs = list(gc.enumerate_graphs(args.nmax, connected_only=True))
        if args.random:
            graphs += scan.random_graphs(args.random, args.random_nmax, args.seed, args.p)
        rep = scan.conjecture_scan(graphs, workers=args.threads)
        rep.seeds = {"seed": args.seed, "p": args.p, "count": args.random, "n_max": args.random_nmax}
    elif args.what == "trees":
        rep = scan.tree_ratio_scan(args.nmax, workers=args.threads)
    elif args.what == "caterpillars":
        rep = scan.caterpillar_scan(args.nmax, workers=args.threads)
    else:
        if args.nmax > scan.PARTITION_LIMIT:
            raise UsageError(f"class scans are limited to {scan.PARTITION_LIMIT} vertices")
        rep = scan.classes_scan(args.nmax)
    out = rep.to_dict()
    if args.report:
        Path(args.report).write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    emit(args, out)
    return EXIT_OK if rep.ok else EXIT_CLAIM


def cmd_prop3(args) -> int:
    if args.edges:
        data = _load_json(args.edges)
        if not isinstance(data, dict) or "G" not in data or "H" not in data:
            raise UsageError('prop3 input must be a JSON object with "G" and "H" edge lists')
        try:
            rep = scan.minor_example_check(data["G"], data["H"], data.get("psi"))
        except scan.ReconstructionError as exc:
            emit(args, {"claim": scan.MINOR_EXAMPLE, "rejected": str(exc)})
            return EXIT_USAGE
    else:
        rep = scan.minor_example_check()
    emit(args, rep)
    return EXIT_OK if rep["ok"] else EXIT_CLAIM


# -- parser -------------------------------------------------------------


def _nonneg_float(s: str) -> float:
    x = float(s)
    if x < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--threads", type=int, default=None, help=f"worker processes (default ${THREADS_ENV} or cores)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="linchrom", description="Linear and centered colorings of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="emit named or enumerated graphs")
    g.add_argument("family", choices=sorted(NAMED) + ["all", "trees", "caterpillars", "random"])
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--n", type=int, help="maximum order for enumerations")
    g.add_argument("--connected", action="store_true")
    g.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p", type=float, default=0.5)
    g.set_defaults(func=cmd_gen)

    def add_input(sp):
        sp.add_argument("files", nargs="*", help="graph files (graph6 lines or edge lists); '-' for stdin")
        sp.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")

    c = sub.add_parser("compute", parents=[common], help="exact chromatic numbers")
    c.add_argument("--lin", action="store_true")
    c.add_argument("--cen", action="store_true")
    add_input(c)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", parents=[common], help="check a coloring")
    v.add_argument("--coloring", required=True)
    v.add_argument("--kind", choices=["proper", "linear", "centered"], default="linear")
    v.add_argument("--forest", help="elimination forest JSON (parent array) for centered checks")
    add_input(v)
    v.set_defaults(func=cmd_verify)

    col = sub.add_parser("color", parents=[common], help="constructive colorings of special classes")
    col.add_argument("family", choices=["path", "grid", "bintree", "multipartite", "corook", "caterpillar", "star-forest"])
    col.add_argument("params", nargs="*", type=int)
    col.set_defaults(func=cmd_color)

    o = sub.add_parser("obstructions", parents=[common], help="enumerate or resume an obstruction set")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--nmax", type=int, default=8)
    o.add_argument("--db", help="graph6 database (JSON sidecar alongside); resumed if present")
    o.add_argument("--budget", type=_nonneg_float, help="seconds before stopping with a partial horizon")
    o.add_argument("--appendix", action="store_true", help="cross-check the explicitly described shapes")
    o.set_defaults(func=cmd_obstructions)

    ch = sub.add_parser("characterize", parents=[common], help="obstruction set versus exact solver")
    ch.add_argument("--db", required=True)
    ch.add_argument("--k", type=int)
    ch.add_argument("--n", type=int, help="maximum order of the enumerated stream")
    ch.add_argument("--connected", action="store_true")
    add_input(ch)
    ch.set_defaults(func=cmd_characterize)

    s = sub.add_parser("scan", parents=[common], help="claim scans over graph streams")
    s.add_argument("what", choices=["conjecture", "trees", "caterpillars", "classes"])
    s.add_argument("--nmax", type=int, default=6)
    s.add_argument("--random", type=int, default=0, help="extra seeded random graphs (conjecture)")
    s.add_argument("--random-nmax", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--report", help="write the report JSON here")
    s.set_defaults(func=cmd_scan)

    pr = sub.add_parser("prop3", parents=[common], help="validate and solve the minor example")
    pr.add_argument("--edges", help='JSON {"G": [[u, v], ...], "H": [...], "psi": {...}}')
    pr.set_defaults(func=cmd_prop3)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.threads is None:
            args.threads = default_threads()
        elif args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"linchrom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
