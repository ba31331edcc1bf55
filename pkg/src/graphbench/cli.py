"""Command-line interface.

Subcommands: generate, stats, sweep, spectral-check, plot.
Exit codes: 0 success, 1 usage/config error, 2 runtime/generation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import spectral
from .errors import ConfigInvalid, GraphBenchError
from .generators import BAParams, ERParams, GGPParams, generate_ba, generate_er, generate_ggp
from .graph import laplacian, read_edge_list, write_edge_list
from .harness import (
    default_config,
    emit_plots,
    parse_config,
    read_rows_csv,
    row_to_csv,
    run_sweep,
    summarize,
)
from .harness.sweep import CSV_HEADER, ExperimentRow, compute_statistics
from .seeds import child_seed
from .stats import CorePeripheryConfig, connected_components


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the interface contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphbench", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write one random graph as an edge-list file")
    gen.add_argument("--model", required=True, choices=("er", "ba", "ggp"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=".", help="output directory")
    gen.add_argument("--n", type=int, help="node count (er, ba)")
    gen.add_argument("--p", type=float, help="edge probability (er)")
    gen.add_argument("--m", type=int, help="edges per arriving node (ba)")
    gen.add_argument("--m0", type=int, help="seed clique size (ba, default m)")
    gen.add_argument("--alpha", type=float, help="mass scale (ggp)")
    gen.add_argument("--sigma", type=float, default=0.0, help="sparsity index (ggp)")
    gen.add_argument("--tau", type=float, default=1.0, help="exponential tilt (ggp)")
    gen.add_argument("--epsilon", type=float, default=1e-6, help="jump truncation (ggp)")

    st = sub.add_parser("stats", help="print one CSV row of statistics for an edge-list file")
    st.add_argument("path", help="edge-list file")
    st.add_argument("--seed", type=int, default=0, help="optimizer seed for core-periphery")

    sw = sub.add_parser("sweep", help="run the experiment sweep defined by a config file")
    sw.add_argument("--config", help="JSON config path (omit to run the default experiment)")
    sw.add_argument("--out", help="override the config's output directory")
    sw.add_argument("--plots", action="store_true", help="also write the four SVG panels")

    sc = sub.add_parser(
        "spectral-check",
        help="compare union-find component counts against Laplacian null multiplicity",
    )
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--graphs", type=int, default=60, help="random graphs per generator family")
    sc.add_argument("--max-n", type=int, default=200)

    pl = sub.add_parser("plot", help="render the four SVG panels from a sweep CSV")
    pl.add_argument("csv", help="results CSV produced by sweep")
    pl.add_argument("--out", default=".", help="output directory")
    return parser


def _cmd_generate(args) -> int:
    if args.model == "er":
        if args.n is None or args.p is None:
            raise ConfigInvalid("--n/--p", "er needs --n and --p")
        g = generate_er(ERParams(n=args.n, p=args.p), args.seed)
    elif args.model == "ba":
        if args.n is None or args.m is None:
            raise ConfigInvalid("--n/--m", "ba needs --n and --m")
        g = generate_ba(BAParams(n=args.n, m=args.m, m0=args.m0), args.seed)
    else:
        if args.alpha is None:
            raise ConfigInvalid("--alpha", "ggp needs --alpha")
        g = generate_ggp(
            GGPParams(alpha=args.alpha, sigma=args.sigma, tau=args.tau, epsilon=args.epsilon),
            args.seed,
        )
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, f"{args.model}_seed{args.seed}.txt")
    write_edge_list(g, path)
    print(path)
    return 0


def _cmd_stats(args) -> int:
    g = read_edge_list(args.path)
    name = os.path.splitext(os.path.basename(args.path))[0]
    comps, clustering, assort, share = compute_statistics(
        g, CorePeripheryConfig(seed=child_seed(args.seed, 2))
    )
    row = ExperimentRow(
        model=name,
        sigma=None,
        n_target=g.node_count,
        n_realized=g.node_count,
        edges=g.edge_count,
        replicate=0,
        seed=args.seed,
        components=comps,
        clustering=clustering,
        assortativity=assort,
        core_share=share,
    )
    print(CSV_HEADER)
    print(row_to_csv(row))
    return 0


def _cmd_sweep(args) -> int:
    if args.config is None:
        config = default_config(output_dir=args.out or "out")
    else:
        with open(args.config) as fh:
            data = json.load(fh)
        if args.out is not None:
            if not isinstance(data, dict):
                raise ConfigInvalid("$", "top-level config must be an object")
            data["output_dir"] = args.out
        config = parse_config(data)
    rows = run_sweep(config)
    print(f"{len(rows)} rows -> {os.path.join(config.output_dir, 'results.csv')}")
    if args.plots:
        for path in emit_plots(summarize(rows), config.output_dir):
            print(path)
    return 0


def _cmd_spectral_check(args) -> int:
    from .graph import build_graph

    checked = 0
    mismatches = []

    def check(g, label):
        nonlocal checked
        uf = connected_components(g).count
        spec = spectral.laplacian_spectrum(laplacian(g)).null_multiplicity
        checked += 1
        if uf != spec:
            mismatches.append((label, uf, spec))

    check(build_graph(4, [(0, 1), (2, 3)]), "two disjoint edges")
    check(build_graph(4, [(0, 1), (1, 2), (0, 2)]), "triangle plus isolated node")
    check(build_graph(3, []), "empty graph")
    rng_index = 0
    for i in range(args.graphs):
        rng_index += 1
        seed = child_seed(args.seed, rng_index)
        n = 10 + (i * 37) % max(1, args.max_n - 10)
        check(generate_er(ERParams(n=n, p=min(1.0, 3.0 / n)), seed), f"er n={n}")
        check(generate_ba(BAParams(n=n, m=2, m0=2), seed), f"ba n={n}")
        try:
            g = generate_ggp(GGPParams(alpha=8.0 + (i % 7), sigma=0.5, tau=1.0), seed)
            if g.node_count <= args.max_n:
                check(g, f"ggp alpha={8 + (i % 7)}")
        except GraphBenchError:
            pass
    if mismatches:
        for label, uf, spec in mismatches:
            print(f"MISMATCH {label}: union-find {uf} vs spectral {spec}")
        print(f"{len(mismatches)} mismatches out of {checked} graphs")
        return 2
    print(f"all {checked} graphs agree: union-find == spectral null multiplicity")
    return 0


def _cmd_plot(args) -> int:
    rows = read_rows_csv(args.csv)
    for path in emit_plots(summarize(rows), args.out):
        print(path)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "stats": _cmd_stats,
        "sweep": _cmd_sweep,
        "spectral-check": _cmd_spectral_check,
        "plot": _cmd_plot,
    }
    try:
        return handlers[args.command](args)
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GraphBenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
