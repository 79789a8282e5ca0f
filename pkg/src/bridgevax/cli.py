"""Command-line interface.

Subcommands: ``rank`` (centrality listing), ``vaccinate`` (vaccinee
selection), ``simulate`` (seeded trials as JSON lines), ``sweep``
(full parameter grid over a network manifest, CSV outputs) and
``report`` (heat map SVG from a records CSV).

Randomized subcommands require an explicit ``--seed``: reproducibility
is the product, and silent nondeterminism is forbidden.  Exit codes:
0 success, 1 usage error, 2 data/parse error, 3 numeric failure.
Errors go to stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .centrality import (
    Strategy,
    all_nbnc_tuples,
    rank_nodes,
    select_vaccinees,
)
from .experiment import (
    ManifestError,
    SweepDataError,
    SweepGrid,
    compute_ratios,
    load_registry,
    read_records_csv,
    run_sweep,
    summarize_ratios,
    write_records_csv,
    write_ratios_csv,
    write_summary_csv,
)
from .graphs import GraphParseError, load_edge_list
from .heatmap import emit_heatmap
from .rng import MASK64
from .sis import run_trials
from .spectral import ConvergenceError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    """Bad flag values caught before any work starts."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _strategy(name: str) -> Strategy:
    try:
        return Strategy[name.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown strategy {name!r} (choose nbnc or deg)"
        ) from None


def _probability(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise UsageError(f"--{name} must be in [0, 1], got {value}")
    return value


def _seed(value: int) -> int:
    if not 0 <= value <= MASK64:
        raise UsageError(f"--seed must be a 64-bit unsigned integer, got {value}")
    return value


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def cmd_rank(args) -> int:
    g = load_edge_list(args.graph)
    tuples = all_nbnc_tuples(g)
    ranking = rank_nodes(g, args.strategy)
    group_of = {}
    for rank_index, group in enumerate(ranking.tie_groups):
        for v in group:
            group_of[v] = rank_index
    for v in ranking.order:
        t = tuples[v]
        print(f"{v} {t.components} {t.acr:.6f} {t.degree} {group_of[v]}")
    return EXIT_OK


def cmd_vaccinate(args) -> int:
    _probability("lambda", args.lam)
    g = load_edge_list(args.graph)
    chosen = select_vaccinees(g, args.strategy, args.lam)
    print(len(chosen))
    for v in sorted(chosen):
        print(v)
    return EXIT_OK


def cmd_simulate(args) -> int:
    _probability("beta", args.beta)
    _probability("mu", args.mu)
    _probability("lambda", args.lam)
    _seed(args.seed)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    if args.rounds < 1:
        raise UsageError(f"--rounds must be >= 1, got {args.rounds}")
    g = load_edge_list(args.graph)
    vaccinees = select_vaccinees(g, args.strategy, args.lam)
    header = {
        "graph": str(args.graph), "nodes": g.node_count,
        "beta": args.beta, "mu": args.mu, "lambda": args.lam,
        "strategy": args.strategy.value, "vaccinated": len(vaccinees),
        "trials": args.trials, "rounds_cap": args.rounds, "seed": args.seed,
    }
    print(json.dumps(header))
    results = run_trials(
        g, vaccinees, beta=args.beta, mu=args.mu, max_rounds=args.rounds,
        n_trials=args.trials, base_seed=args.seed,
    )
    for t, r in enumerate(results):
        print(json.dumps({
            "trial": t, "rounds": r.rounds_executed,
            "total_infected": r.total_infected,
            "avg_infected_per_round": r.avg_infected_per_round,
            "per_round": list(r.per_round_infected),
        }))
    mean_avg = sum(r.avg_infected_per_round for r in results) / len(results)
    fraction = mean_avg / g.node_count if g.node_count else 0.0
    print(json.dumps({
        "summary": True,
        "mean_avg_infected_per_round": mean_avg,
        "mean_infected_fraction": fraction,
    }))
    return EXIT_OK


def cmd_sweep(args) -> int:
    _seed(args.seed)
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    try:
        grid = SweepGrid(
            betas=args.betas, mus=args.mus, lambdas=args.lambdas,
            n_trials=args.trials, max_rounds=args.rounds, base_seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    registry = load_registry(args.manifest)
    if not registry:
        raise UsageError(f"manifest {args.manifest} names no networks")
    records = run_sweep(registry, grid, jobs=args.jobs)
    ratios = compute_ratios(records)
    summaries = summarize_ratios(ratios)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_records_csv(records, out_dir / "records.csv")
    write_ratios_csv(ratios, out_dir / "ratios.csv")
    write_summary_csv(summaries, out_dir / "summary.csv")
    print(f"wrote {len(records)} records to {out_dir}", file=sys.stderr)
    return EXIT_OK


def cmd_report(args) -> int:
    records = read_records_csv(args.records)
    if not records:
        raise SweepDataError(f"no records in {args.records}")
    emit_heatmap(records, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bridgevax", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_strategy(p):
        p.add_argument("--strategy", type=_strategy, choices=list(Strategy),
                       required=True, metavar="{nbnc,deg}",
                       help="ranking strategy")

    p = sub.add_parser("rank", help="rank nodes by bridge-node centrality")
    p.add_argument("--graph", required=True, help="edge-list file")
    add_strategy(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("vaccinate", help="select vaccinees for a fraction")
    p.add_argument("--graph", required=True, help="edge-list file")
    add_strategy(p)
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="fraction of nodes to vaccinate")
    p.set_defaults(func=cmd_vaccinate)

    p = sub.add_parser("simulate", help="run seeded epidemic trials")
    p.add_argument("--graph", required=True, help="edge-list file")
    add_strategy(p)
    p.add_argument("--beta", type=float, required=True, help="infection probability")
    p.add_argument("--mu", type=float, required=True, help="recovery probability")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="fraction of nodes to vaccinate")
    p.add_argument("--trials", type=int, default=50, help="trial count (default 50)")
    p.add_argument("--rounds", type=int, default=20, help="round cap (default 20)")
    p.add_argument("--seed", type=int, required=True, help="base random seed")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="run the full parameter grid over a manifest")
    p.add_argument("--manifest", required=True,
                   help="'name path expected_nodes' lines")
    p.add_argument("--betas", type=_float_list, default=SweepGrid.betas,
                   help="comma-separated beta values (default 0.3,0.5,0.7)")
    p.add_argument("--mus", type=_float_list, default=SweepGrid.mus,
                   help="comma-separated mu values (default 0.25,0.5)")
    p.add_argument("--lambdas", type=_float_list, default=SweepGrid.lambdas,
                   help="comma-separated lambda values "
                        "(default 0.05,0.1,0.15,0.2,0.3)")
    p.add_argument("--trials", type=int, default=50, help="trials per cell (default 50)")
    p.add_argument("--rounds", type=int, default=20, help="round cap (default 20)")
    p.add_argument("--seed", type=int, required=True, help="base random seed")
    p.add_argument("--jobs", type=int, default=1, help="parallel cell workers")
    p.add_argument("--out", required=True, help="output directory for CSVs")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", help="render a records CSV as a heat map SVG")
    p.add_argument("--records", required=True, help="records CSV from sweep")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bridgevax: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, ManifestError, SweepDataError) as exc:
        print(f"bridgevax: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"bridgevax: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ConvergenceError as exc:
        print(f"bridgevax: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
