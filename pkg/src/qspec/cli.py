"""Command-line front end: ``qspec spectrum | verify | family | census``.

Exit codes: 0 pass, 1 a check failed, 2 usage or input error, 3 a finding
(a printed formula disagrees with its recomputation).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .formats import parse_graph, to_graph6
from .graph import GraphError, complement, is_bipartite

EXIT = {"pass": 0, "fail": 1, "usage": 2, "finding": 3}
DEFAULT_TOL = 1e-10


def _workers_default() -> int:
    try:
        return max(1, int(os.environ.get("QSPEC_WORKERS", "1")))
    except ValueError:
        return 1


def _read_graph(arg):
    if arg is None or arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    return parse_graph(text)


def cmd_spectrum(args) -> int:
    from .spectra import least_q_eigenpair
    g = _read_graph(args.graph)
    res = least_q_eigenpair(g, tol=args.tol)
    print(json.dumps({
        "n": g.n, "lambda": res.lam, "residual": res.residual,
        "delta": g.min_degree() if g.n else 0, "bipartite": is_bipartite(g),
        "degenerate": res.degenerate, "tol": args.tol, "version": __version__,
    }))
    return EXIT["pass"]


def cmd_verify(args) -> int:
    from .verify import SUITES, run
    if args.target not in SUITES:
        print(f"unknown target {args.target!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT["usage"]
    params = {"n": args.n, "p": args.p, "q": args.q, "samples": args.samples,
              "grid": args.grid, "seed": args.seed}
    if args.target == "theorem211":
        params["workers"] = args.workers
    if args.target == "eq23" and args.tol is not None:
        params["tol"] = args.tol
    try:
        rep = run(args.target, **params)
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["usage"]
    out = rep.to_json()
    out["seed"] = args.seed
    out["tol"] = args.tol
    print(json.dumps(out, default=str))
    return EXIT[rep.status]


def cmd_family(args) -> int:
    from .families import named_graph
    kw = {k: v for k, v in vars(args).items()
          if k in ("p", "q", "n", "a", "b", "c", "ell") and v is not None}
    if args.shared:
        kw["shared"] = True
    try:
        g = named_graph(args.kind, **kw)
    except KeyError as exc:
        print(f"error: family {args.kind} needs --{exc.args[0]}", file=sys.stderr)
        return EXIT["usage"]
    if args.complement:
        g = complement(g)
    print(to_graph6(g))
    return EXIT["pass"]


def cmd_census(args) -> int:
    from .census import (bicyclic_classes, disconnected_classes, extremal_search,
                         records_for, write_csv)
    if args.n is None:
        print("error: census needs --n", file=sys.stderr)
        return EXIT["usage"]
    checkpoint = args.checkpoint or (f"{args.out}.ckpt" if args.out else None)
    classes = bicyclic_classes(args.n, workers=args.workers, checkpoint=checkpoint,
                               resume=args.resume)
    records = records_for(classes)
    if args.out:
        write_csv(records, args.out)
    else:
        write_csv(records, sys.stdout)
    summary = {"n": args.n, "classes": len(records),
               "disconnected_complements": disconnected_classes(records),
               "workers": args.workers, "version": __version__}
    if any(r.complement_connected for r in records):
        res = extremal_search(args.n, records)
        summary.update(winner=to_graph6(res.graph), lambda_min=res.lam,
                       unique=res.unique, gap=res.gap,
                       winner_is_g1=res.matches_g1)
        if res.matches_g1:
            summary["extremal"] = f"G1({args.n - 5},0)"
    print(json.dumps(summary), file=sys.stderr if not args.out else sys.stdout)
    return EXIT["pass"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="graph order")
    common.add_argument("--p", type=int, help="pendants on the first hub")
    common.add_argument("--q", type=int, help="pendants on the second hub")
    common.add_argument("--samples", type=int, help="sample points per check (suite default if unset)")
    common.add_argument("--grid", type=int, default=10_000, help="grid points for claim sweeps (default 10000)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="eigensolver convergence tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--workers", type=int, default=_workers_default(),
                        help="census worker processes (default $QSPEC_WORKERS or 1)")
    common.add_argument("--out", help="output path")
    common.add_argument("--resume", action="store_true", help="resume a census from its checkpoint")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="qspec", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=f"qspec {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="least Q-eigenvalue of a graph")
    sp.add_argument("graph", nargs="?", help="graph6 string, file path, or '-' for stdin")
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vp.add_argument("target")
    vp.set_defaults(func=cmd_verify)

    fp = sub.add_parser("family", parents=[common], help="print a named graph in graph6")
    fp.add_argument("kind", choices=["g1", "g2", "g4", "star2e", "theta", "infinity", "bgraph"])
    fp.add_argument("--a", type=int)
    fp.add_argument("--b", type=int)
    fp.add_argument("--c", type=int)
    fp.add_argument("--ell", type=int)
    fp.add_argument("--shared", action="store_true", help="star2e: the two edges share a leaf")
    fp.add_argument("--complement", action="store_true")
    fp.set_defaults(func=cmd_family)

    cp = sub.add_parser("census", parents=[common], help="bicyclic census as CSV")
    cp.add_argument("--checkpoint", help="checkpoint path (default <out>.ckpt)")
    cp.set_defaults(func=cmd_census)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT["usage"]
    try:
        return args.func(args)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT["usage"]


if __name__ == "__main__":
    sys.exit(main())
