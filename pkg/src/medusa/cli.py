"""Command-line front end: ingestion -> analyses -> plot-ready reports.

One subcommand per analysis plus a ``report`` meta-command that chains
profile + medusa + fractal for a single snapshot.  Every run writes a
manifest echoing the resolved configuration; with a fixed seed, reruns are
byte-identical.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 analysis error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, kernels
from ._util import rows_as_json, write_csv, write_json
from .ensemble import EnsembleSpec, nucleus_scaling
from .fractal import cluster_size_distribution, fractal_dimension, shell_contribution
from .graph import DistanceConfig, Graph, ParseError, connected_components, load_edge_list
from .kshell import decompose, k_crust, shell_rows
from .partition import classify, medusa_report
from .percolation import PROFILE_HEADER, crust_profile, detect_transition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ANALYSIS = 3

DEFAULT_SEED = 1
DEFAULT_LB = "2,3,4,5,6"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write_table(path_base: Path, header, rows, fmt: str) -> None:
    if fmt == "json":
        write_json(path_base.with_suffix(".json"), rows_as_json(header, rows))
    else:
        write_csv(path_base.with_suffix(".csv"), header, rows)


def _load_graph(args) -> Graph:
    graph, report = load_edge_list(args.input)
    print(
        f"loaded {args.input}: N={graph.node_count} E={graph.edge_count} "
        f"(self-loops dropped: {report.dropped_self_loops}, "
        f"duplicates merged: {report.merged_duplicates})"
    )
    return graph


def _manifest(args, out_dir: Path, extra: dict | None = None) -> None:
    """Echo the resolved config next to the outputs.

    ``out`` is recorded relative to the manifest itself so reruns into
    different directories stay byte-identical.
    """
    resolved = {k: v for k, v in vars(args).items() if k != "func"}
    resolved["out"] = "."
    resolved["version"] = __version__
    resolved["kernel_backend"] = kernels.BACKEND
    if extra:
        resolved.update(extra)
    write_json(out_dir / "manifest.json", resolved)


def _distance_config(args) -> DistanceConfig:
    return DistanceConfig(
        exact_threshold=args.exact_threshold,
        sample_sources=args.sample_sources,
        seed=args.seed,
    )


def cmd_decompose(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(args)
    sa = decompose(g)
    _write_table(out / "shells", ["node", "shell"], shell_rows(g, sa), args.format)
    write_json(out / "summary.json", {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "k_max": sa.k_max,
        "shell_sizes": {str(k): v for k, v in sa.shell_sizes.items()},
    })
    _manifest(args, out)
    print(f"k_max={sa.k_max}, {len(sa.shell_sizes)} occupied shells -> {out}")
    return EXIT_OK


def cmd_profile(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(args)
    sa = decompose(g)
    profile = crust_profile(g, sa, _distance_config(args), max_workers=args.threads)
    transition = detect_transition(profile)
    _write_table(out / "profile", PROFILE_HEADER, profile.as_table(), args.format)
    write_json(out / "transition.json", transition.as_dict())
    _manifest(args, out)
    print(f"k_star={transition.k_star_second} (distance peak at "
          f"{transition.k_star_distance}) -> {out}")
    return EXIT_OK


def cmd_medusa(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(args)
    sa = decompose(g)
    mp = classify(g, sa)
    write_json(out / "medusa.json", medusa_report(g, mp))
    _manifest(args, out)
    print(f"nucleus={len(mp.nucleus)} peer={len(mp.peer_connected)} "
          f"isolated={len(mp.isolated)} -> {out}")
    return EXIT_OK


def _fractal_outputs(g: Graph, sa, args, out: Path) -> dict:
    """Shared by cmd_fractal and cmd_report: curve CSV, cluster CSV, fits."""
    if args.crust_k is not None:
        k = args.crust_k
    else:
        profile = crust_profile(g, sa, with_distances=False)
        k = detect_transition(profile).k_star_second
        if k is None:
            raise ValueError("no percolation transition found; pass an explicit crust level")
    crust = k_crust(sa, k)
    parts = connected_components(g, crust)
    if parts.count == 0:
        raise ValueError(f"{k}-crust is empty")
    target = parts.members(0)

    l_range = [int(tok) for tok in args.lb.split(",")]
    res = fractal_dimension(g, target, l_range, trials=args.trials, seed=args.seed)
    _write_table(
        out / "boxes",
        ["l_B", "mean_boxes", "std_boxes", "trials"],
        [(l, res.nb_curve[l], res.nb_std[l], res.trials) for l in sorted(res.nb_curve)],
        args.format,
    )

    fits = {
        "crust_k": k,
        "target_size": int(len(target)),
        "box_dimension": res.fit.as_dict(),
        "regime": res.regime,
        "cluster_tau": None,
    }
    try:
        histogram, tau_fit = cluster_size_distribution(g, sa, k)
    except ValueError:
        histogram, tau_fit = {}, None
    total = sum(histogram.values())
    _write_table(
        out / "cluster_sizes",
        ["size", "count", "probability"],
        [(s, c, c / total) for s, c in histogram.items()],
        args.format,
    )
    if tau_fit is not None:
        fits["cluster_tau"] = tau_fit.as_dict()
    write_json(out / "fits.json", fits)
    return fits


def cmd_fractal(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(args)
    sa = decompose(g)
    fits = _fractal_outputs(g, sa, args, out)
    _manifest(args, out)
    print(f"crust k={fits['crust_k']}: d_B={fits['box_dimension']['exponent']:.3f} "
          f"({fits['regime']}) -> {out}")
    return EXIT_OK


def cmd_ensemble(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    sizes = [int(tok) for tok in args.sizes.split(",")]
    base = EnsembleSpec(n=max(sizes), gamma=args.gamma, k_min=args.kmin,
                        cutoff=args.cutoff, seed=args.seed)
    result = nucleus_scaling(sizes, base, replicates=args.replicates, seed=args.seed)
    _write_table(
        out / "scaling",
        ["N", "replicate", "k_max", "nucleus_size"],
        [(r.n, r.replicate, r.k_max, r.nucleus_size) for r in result.rows],
        args.format,
    )
    write_json(out / "fits.json", result.as_dict())
    _manifest(args, out)
    print(f"nucleus growth ~ N^{result.nucleus_size_fit.slope:.3f}, "
          f"k_max growth ~ N^{result.k_max_fit.slope:.3f} -> {out}")
    return EXIT_OK


def cmd_report(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = _load_graph(args)
    sa = decompose(g)

    profile = crust_profile(g, sa, _distance_config(args), max_workers=args.threads)
    transition = detect_transition(profile)
    _write_table(out / "profile", PROFILE_HEADER, profile.as_table(), args.format)
    write_json(out / "transition.json", transition.as_dict())

    mp = classify(g, sa)
    report = medusa_report(g, mp)
    counts, shell_fit = (None, None)
    if len(mp.peer_connected):
        counts, shell_fit = shell_contribution(mp, sa)
        report["shell_contribution"] = {
            "counts": {str(k): v for k, v in counts.items()},
            "fit": shell_fit.as_dict() if shell_fit else None,
        }
    write_json(out / "medusa.json", report)

    fractal_note = None
    try:
        _fractal_outputs(g, sa, args, out)
    except ValueError as exc:
        fractal_note = str(exc)
        write_json(out / "fits.json", {"skipped": fractal_note})
    _manifest(args, out, extra={"fractal_skipped": fractal_note})
    print(f"report written to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="medusa", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="seed for every stochastic step (default %(default)s)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap for per-crust jobs")
        p.add_argument("--format", choices=["csv", "json"], default="csv",
                       help="tabular output format")

    def distance_opts(p):
        p.add_argument("--exact-threshold", type=int, default=1000,
                       help="all-pairs distances up to this component size")
        p.add_argument("--sample-sources", type=int, default=200,
                       help="BFS sources when sampling distances")

    def fractal_opts(p):
        p.add_argument("--crust-k", type=int, default=None,
                       help="crust level to analyze (default: detected transition)")
        p.add_argument("--lb", default=DEFAULT_LB, help="comma-separated box sizes")
        p.add_argument("--trials", type=int, default=10, help="coverings per box size")

    p = sub.add_parser("decompose", help="k-shell indices and shell sizes")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("profile", help="crust percolation profile and transition")
    common(p)
    distance_opts(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("medusa", help="nucleus / peer-connected / isolated report")
    common(p)
    p.set_defaults(func=cmd_medusa)

    p = sub.add_parser("fractal", help="box-covering dimension and cluster sizes")
    common(p)
    fractal_opts(p)
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("ensemble", help="nucleus scaling over random scale-free graphs")
    common(p, needs_input=False)
    p.add_argument("--sizes", default="1000,3000,10000",
                   help="comma-separated graph sizes")
    p.add_argument("--gamma", type=float, default=2.5, help="degree exponent")
    p.add_argument("--kmin", type=int, default=2, help="minimum target degree")
    p.add_argument("--cutoff", type=int, default=None,
                   help="max target degree (default: natural cutoff)")
    p.add_argument("--replicates", type=int, default=5, help="graphs per size")
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("report", help="profile + medusa + fractal in one pass")
    common(p)
    distance_opts(p)
    fractal_opts(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors, -h, --version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"medusa: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        if str(exc) == "no edges":
            print(f"medusa: input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"medusa: analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
