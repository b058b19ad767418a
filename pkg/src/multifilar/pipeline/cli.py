"""Command line entry point: ``multifilar {enumerate,analyze,verify,plot}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from ..errors import MultifilarError
from ..graph_core import write_graph6
from .cache import cached_enumeration
from .clustering import cluster_filars
from .config import RunConfig
from .experiment import load_graphs, run_experiment
from .export import Window, export_csv, export_svg_scatter

log = logging.getLogger("multifilar")


def _parse_cutoff(text: str):
    return text if text == "auto" else int(text)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--vertices", type=int, nargs="+", default=[10])
    p.add_argument("--input-graph6", type=Path, help="read graphs from a graph6 file instead of enumerating")
    p.add_argument("--graph", help="named construction: k4, petersen, k33, prism:k, diamond-string:n")
    p.add_argument("--cutoff", type=_parse_cutoff, default="auto")
    p.add_argument("--t", type=float, nargs="+", default=[1 / 3, 2 / 3], dest="t_values")
    p.add_argument("--variance", choices=("unbiased", "biased"), default="unbiased")
    p.add_argument("--out-dir", type=Path, default=Path("out"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-long-runs", action="store_true")
    p.add_argument("--tolerance", type=float, default=1e-9, help="trace-formula residual tolerance")
    p.add_argument("--no-cache", action="store_true")


def _config(args) -> RunConfig:
    if args.input_graph6 is not None:
        source = "graph6"
    elif args.graph:
        source = "construction"
    else:
        source = "enumerate"
    return RunConfig(
        degree=args.degree,
        vertices=tuple(args.vertices),
        source=source,
        input_graph6=args.input_graph6,
        construction=args.graph,
        cutoff=args.cutoff,
        t_values=tuple(args.t_values),
        variance=args.variance,
        out_dir=args.out_dir,
        jobs=args.jobs,
        allow_long_runs=args.allow_long_runs,
        residual_tol=args.tolerance,
        use_cache=not args.no_cache,
    )


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for n in cfg.vertices:
        family = cached_enumeration(cfg.cache_dir, n, cfg.degree, cfg.allow_long_runs, cfg.use_cache)
        path = cfg.out_dir / f"regular_d{cfg.degree}_n{n}.g6"
        write_graph6(family, path)
        print(f"n={n} d={cfg.degree}: {len(family)} graphs -> {path}")
    return 0


def cmd_analyze(args) -> int:
    cfg = _config(args)
    result = run_experiment(cfg)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    export_csv(result.records, cfg.out_dir / "records.csv")
    (cfg.out_dir / "summary.json").write_text(json.dumps(result.summary, indent=2, sort_keys=True) + "\n")
    for n, info in result.summary["by_n"].items():
        sizes = ", ".join(f"m3={f['m3']}:{f['size']}" for f in info["filars"])
        print(f"n={n}: {info['graphs']} graphs, max residual {info['max_residual']:.2e}; filars {sizes}")
    print(f"wrote {cfg.out_dir / 'records.csv'}")
    return 0 if result.ok else 1


def cmd_verify(args) -> int:
    from ..trace_formula import verify_trace_formula

    cfg = _config(args)
    graphs = load_graphs(cfg)
    worst = 0.0
    failed = 0
    for g in graphs:
        for t in cfg.t_values:
            rep = verify_trace_formula(g, t, cfg.cutoff)
            worst = max(worst, rep.residual)
            if not rep.residual < cfg.residual_tol:
                failed += 1
                print(f"FAIL n={g.n} t={t:.6g}: residual {rep.residual:.3e} (L={rep.cutoff})")
    print(f"{len(graphs)} graphs x {len(cfg.t_values)} t values: max residual {worst:.3e}, {failed} failures")
    return 0 if failed == 0 else 1


def cmd_plot(args) -> int:
    cfg = _config(args)
    result = run_experiment(cfg)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    by_n: dict[int, list] = {}
    for r in result.records:
        by_n.setdefault(r.n, []).append(r)
    for n, recs in sorted(by_n.items()):
        window = None
        suffix = ""
        if args.zoom_m3 is not None:
            group = [r for r in recs if r.m3 == args.zoom_m3]
            if not group:
                print(f"n={n}: no graphs with m3={args.zoom_m3}")
                continue
            window = Window.around([(r.mu, r.sigma) for r in group], pad=0.1)
            suffix = f"_m3_{args.zoom_m3}"
        elif args.window:
            window = Window(*args.window)
            suffix = "_zoom"
        path = cfg.out_dir / f"scatter_n{n}{suffix}.svg"
        export_svg_scatter(recs, path, window, title=f"cubic graphs, n = {n}" if cfg.degree == 3 else None)
        groups = cluster_filars(recs, 3)
        print(f"n={n}: {len(recs)} points, {len(groups)} filars -> {path}")
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multifilar", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (
        ("enumerate", cmd_enumerate, "enumerate connected regular graphs to graph6"),
        ("analyze", cmd_analyze, "compute records.csv and summary.json"),
        ("verify", cmd_verify, "check the trace formula on every graph"),
        ("plot", cmd_plot, "write mean/variance scatter plots as SVG"),
    ):
        p = sub.add_parser(name, help=help_)
        _common(p)
        p.set_defaults(func=fn)
        if name == "plot":
            zoom = p.add_mutually_exclusive_group()
            zoom.add_argument("--zoom-m3", type=int, help="zoom onto the filar with this triangle count")
            zoom.add_argument("--window", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (MultifilarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
