"""slowcol command line: gen, solve, play, verify, bounds.

Exit codes: 0 ok, 1 verification failure, 2 cap exceeded, 3 strategy or rule
violation, 4 bad input.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import io
import json
import sys
from fractions import Fraction

from . import decomposition as dec
from .game import CapExceeded, GameError, play
from .graph import GraphError, read_graph, write_graph
from .harness import (
    FAMILIES,
    LISTERS,
    PAINTERS,
    SUITES,
    ExperimentConfig,
    SuiteOptions,
    WeightedPartition,
    build_graph,
    make_lister,
    make_painter,
    parse_partition,
    run_suite,
)
from .potential import FOURCOL, OUTERPLANAR, TheoryViolation, total_potential
from .solver import solver_for

CLASSES = ("planar", "outerplanar", "degenerate", "acyclic", "acyclic-odd", "two-forests", "multipartite")


class BadInput(Exception):
    pass


def _parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from None


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, help="layer count for c4xpath (same as --n)")
    p.add_argument("--parts", type=_parts, default=())
    p.add_argument("--seed", type=int)
    p.add_argument("--graph", help="graph file; implies --family file")
    p.add_argument("--assume-class", action="append", default=[], help="tag a file graph as planar, outerplanar or 4-colorable")


def _config(args, **extra) -> ExperimentConfig:
    family = args.family or ("file" if args.graph else None)
    if family is None:
        raise BadInput("give --family or --graph")
    n = args.n if args.n is not None else args.k
    try:
        return ExperimentConfig(
            family=family,
            n=n,
            parts=args.parts,
            seed=args.seed,
            graph_file=args.graph,
            assume_class=tuple(args.assume_class),
            **extra,
        )
    except ValueError as e:
        raise BadInput(str(e)) from None


def _graph(cfg):
    try:
        return build_graph(cfg)
    except (ValueError, OSError) as e:
        raise BadInput(str(e)) from None


def cmd_gen(args, out):
    G = _graph(_config(args))
    text = write_graph(G)
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_solve(args, out):
    G = _graph(_config(args))
    solver = solver_for(G, args.cap)
    result = {"n": G.n, "m": G.m, "value": solver.value()}
    if args.trace:
        from .solver import lister_optimal, painter_optimal

        result["trace"] = play(G, lister_optimal(G, args.cap), painter_optimal(G, args.cap)).to_dict()
    _emit(result, out)
    return 0


def cmd_play(args, out):
    cfg = _config(args, painter=args.painter, lister=args.lister, p=args.p, cap=args.cap, debug=args.debug)
    G = _graph(cfg)
    partition = None
    if args.partition:
        with open(args.partition) as fh:
            parts, coeffs = parse_partition(fh.read(), G.n)
        partition = WeightedPartition(parts, [c if c is not None else dec.FOREST for c in coeffs])
    try:
        painter = make_painter(cfg, G, partition)
        lister = make_lister(cfg, G)
    except dec.PreconditionViolated as e:
        raise BadInput(str(e)) from None
    trace = play(G, lister, painter, seed=cfg.seed)
    d = trace.to_dict()
    spec = {"potential-4col": FOURCOL, "potential-outerplanar": OUTERPLANAR}.get(cfg.painter)
    if spec is not None:
        d["potential"] = str(total_potential(G, spec).fraction())
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            _emit(d, fh)
    _emit(d, out)
    return 0


def cmd_verify(args, out):
    opt = SuiteOptions(seed=args.seed if args.seed is not None else 0, reps=args.reps, max_n=args.max_n, slow=args.slow)
    report = run_suite(args.suite, opt)
    rows = [r.to_dict() for r in report.records]
    summary = report.summary()
    if not args.no_timestamp:
        summary["timestamp"] = dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds")
    buf = io.StringIO()
    if args.csv:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["instance"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        for row in rows:
            _emit(row, buf)
        _emit(summary, buf)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    out.write(text)
    return 0 if report.passed else 1


def _number(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    return x


def cmd_bounds(args, out):
    if args.graph:
        with open(args.graph) as fh:
            G = read_graph(fh.read())
        if args.assume_class:
            from .graph import Graph

            G = Graph(G.n, G.adj, {"tags": sorted(args.assume_class)})
        partition = None
        if args.partition:
            with open(args.partition) as fh:
                parts, coeffs = parse_partition(fh.read(), G.n)
            if any(c is None for c in coeffs):
                raise BadInput("every partition line needs c=<rational> for bounds")
            partition = WeightedPartition(parts, coeffs)
        rep = dec.bound_report(G, partition)
    else:
        if not args.cls:
            raise BadInput("give --graph or --class")
        n = args.n
        rep = {"class": args.cls}
        if args.cls == "multipartite":
            if not args.parts:
                raise BadInput("multipartite needs --parts")
            rep.update(
                n=sum(args.parts),
                multipartite_upper=dec.bound_multipartite_upper(*args.parts),
                wu_lower=dec.bound_wu_lower(*args.parts),
                wu_upper_no_strategy=dec.bound_wu_upper(*args.parts),
            )
        else:
            if n is None:
                raise BadInput("--n is required")
            rep["n"] = n
            if args.cls == "planar":
                if args.m is None:
                    raise BadInput("planar needs --m")
                rep["m"] = args.m
                rep["fourcol"] = dec.bound_fourcol(n, args.m)
                rep["acyclic_odd_5"] = dec.bound_acyclic_odd(5, n)
            elif args.cls == "outerplanar":
                rep["outerplanar"] = dec.bound_outerplanar(n)
            elif args.cls == "two-forests":
                rep["two_forests"] = dec.bound_two_forests(n)
            else:
                if args.k is None:
                    raise BadInput(f"{args.cls} needs --k")
                rep["k"] = args.k
                fn = {"degenerate": dec.bound_degenerate, "acyclic": dec.bound_acyclic, "acyclic-odd": dec.bound_acyclic_odd}[args.cls]
                rep[args.cls.replace("-", "_")] = fn(args.k, n)
    _emit({k: _number(v) for k, v in rep.items()}, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slowcol", description="slow-coloring game experiments")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a graph file")
    _instance_flags(g)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact game value")
    _instance_flags(s)
    s.add_argument("--cap", type=int)
    s.add_argument("--trace", action="store_true", help="also play optimal vs optimal")
    s.set_defaults(func=cmd_solve)

    p = sub.add_parser("play", help="play one match and print the trace")
    _instance_flags(p)
    p.add_argument("--painter", choices=PAINTERS, default="greedy")
    p.add_argument("--lister", choices=LISTERS, default="full")
    p.add_argument("--p", type=float, default=0.5, help="mark probability for the random lister")
    p.add_argument("--partition", help="partition file for the composite painter")
    p.add_argument("--cap", type=int)
    p.add_argument("--debug", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_play)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--seed", type=int)
    v.add_argument("--reps", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--slow", action="store_true")
    v.add_argument("--csv", action="store_true")
    v.add_argument("--no-timestamp", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="closed-form bounds for a graph or a class")
    b.add_argument("--graph")
    b.add_argument("--partition")
    b.add_argument("--assume-class", action="append", default=[])
    b.add_argument("--class", dest="cls", choices=CLASSES)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--parts", type=_parts, default=())
    b.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 4 if e.code else 0
    try:
        return args.func(args, out)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (GameError, TheoryViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (BadInput, GraphError, dec.PreconditionViolated, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
