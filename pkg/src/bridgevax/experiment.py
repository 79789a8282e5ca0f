"""Operating-condition sweeps, ratio metrics, and CSV reports.

A sweep runs every (network, beta, mu, lambda, strategy) cell of a
grid, averaging per-trial infected fractions.  The default grid is
beta in {0.3, 0.5, 0.7}, mu in {0.25, 0.5}, lambda in {0.05, 0.10,
0.15, 0.20, 0.30}, both strategies, 50 trials of at most 20 rounds --
60 operating conditions per network.

Cell seeds derive from (base_seed, network index, cell index), so cells
are independent jobs and a sweep is reproducible regardless of
execution schedule.  The per-cell metric averages each trial's
average-infected-per-round first, then divides by node count; trials
that stop before executing any round contribute 0.0.
"""

from __future__ import annotations

import csv
import logging
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import IO, Iterable, Sequence

from .centrality import Strategy, select_vaccinees
from .graphs import Graph, load_edge_list
from .rng import substream_seed
from .sis import run_trials

log = logging.getLogger(__name__)

RECORDS_HEADER = ["network", "beta", "mu", "lambda", "strategy",
                  "avg_infected_fraction", "n_trials"]
RATIOS_HEADER = ["network", "beta", "mu", "lambda", "ratio", "defined"]
SUMMARY_HEADER = ["beta", "mu", "lambda", "median", "q1", "q3",
                  "min", "max", "n_defined"]


class SweepDataError(ValueError):
    """Sweep input records are inconsistent (e.g. a missing strategy pair)."""


@dataclass(frozen=True)
class SweepGrid:
    """Parameter grid for a sweep; defaults reproduce the full design."""

    betas: tuple[float, ...] = (0.3, 0.5, 0.7)
    mus: tuple[float, ...] = (0.25, 0.5)
    lambdas: tuple[float, ...] = (0.05, 0.10, 0.15, 0.20, 0.30)
    strategies: tuple[Strategy, ...] = (Strategy.NBNC, Strategy.DEG)
    n_trials: int = 50
    max_rounds: int = 20
    base_seed: int = 0

    def __post_init__(self):
        for name, values in (("beta", self.betas), ("mu", self.mus),
                             ("lambda", self.lambdas)):
            for x in values:
                if not 0.0 <= x <= 1.0:
                    raise ValueError(f"{name} values must be in [0, 1], got {x}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {self.n_trials}")
        if self.max_rounds < 1:
            raise ValueError(f"max_rounds must be >= 1, got {self.max_rounds}")

    def cells(self) -> list[tuple[float, float, float, Strategy]]:
        """Operating conditions in canonical (beta, mu, lambda, strategy) order."""
        return list(product(self.betas, self.mus, self.lambdas, self.strategies))


@dataclass(frozen=True)
class SweepRecord:
    """Aggregated metric for one sweep cell."""

    network: str
    beta: float
    mu: float
    lam: float
    strategy: Strategy
    avg_infected_fraction: float
    n_trials: int


@dataclass(frozen=True)
class RatioRecord:
    """DEG fraction divided by NBNC fraction for one condition.

    ``ratio`` is None when the NBNC fraction is 0 (flagged undefined,
    never silently 0 or infinity).
    """

    network: str
    beta: float
    mu: float
    lam: float
    ratio: float | None
    defined: bool


@dataclass(frozen=True)
class RatioSummary:
    """Order statistics of defined ratios across networks, per condition."""

    beta: float
    mu: float
    lam: float
    median: float
    q1: float
    q3: float
    min: float
    max: float
    n_defined: int


def _run_cell(job) -> float:
    name, g, beta, mu, lam, vaccinees, n_trials, max_rounds, seed = job
    results = run_trials(
        g, vaccinees, beta=beta, mu=mu, max_rounds=max_rounds,
        n_trials=n_trials, base_seed=seed,
    )
    if g.node_count == 0:
        return 0.0
    mean_avg = sum(r.avg_infected_per_round for r in results) / len(results)
    return mean_avg / g.node_count


def run_sweep(
    registry: Sequence[tuple[str, Graph]],
    grid: SweepGrid,
    jobs: int = 1,
) -> list[SweepRecord]:
    """One record per (network x beta x mu x lambda x strategy) cell.

    ``jobs`` > 1 executes cells in a process pool; output is identical
    to the sequential run because results are collected by cell index.
    """
    if not registry:
        raise ValueError("network registry is empty")
    cells = []
    job_args = []
    for net_index, (name, g) in enumerate(registry):
        net_seed = substream_seed(grid.base_seed, net_index)
        vaccinee_cache: dict[tuple[Strategy, float], frozenset[int]] = {}
        for cell_index, (beta, mu, lam, strategy) in enumerate(grid.cells()):
            key = (strategy, lam)
            if key not in vaccinee_cache:
                vaccinee_cache[key] = select_vaccinees(g, strategy, lam)
            cell_seed = substream_seed(net_seed, cell_index)
            cells.append((name, beta, mu, lam, strategy))
            job_args.append((name, g, beta, mu, lam, vaccinee_cache[key],
                             grid.n_trials, grid.max_rounds, cell_seed))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fractions = list(pool.map(_run_cell, job_args, chunksize=4))
    else:
        fractions = [_run_cell(job) for job in job_args]
    return [
        SweepRecord(network=name, beta=beta, mu=mu, lam=lam, strategy=strategy,
                    avg_infected_fraction=fraction, n_trials=grid.n_trials)
        for (name, beta, mu, lam, strategy), fraction in zip(cells, fractions)
    ]


def compute_ratios(records: Iterable[SweepRecord]) -> list[RatioRecord]:
    """Pair DEG against NBNC per condition and divide.

    Raises :class:`SweepDataError` naming the condition if either
    strategy's record is missing.
    """
    by_cell: dict[tuple[str, float, float, float], dict[Strategy, SweepRecord]] = {}
    for rec in records:
        cell = (rec.network, rec.beta, rec.mu, rec.lam)
        slot = by_cell.setdefault(cell, {})
        if rec.strategy in slot:
            raise SweepDataError(f"duplicate {rec.strategy.value} record for {cell}")
        slot[rec.strategy] = rec
    ratios = []
    for cell in sorted(by_cell):
        slot = by_cell[cell]
        for strategy in (Strategy.NBNC, Strategy.DEG):
            if strategy not in slot:
                raise SweepDataError(
                    f"missing {strategy.value} record for network={cell[0]} "
                    f"beta={cell[1]} mu={cell[2]} lambda={cell[3]}"
                )
        network, beta, mu, lam = cell
        nbnc = slot[Strategy.NBNC].avg_infected_fraction
        deg = slot[Strategy.DEG].avg_infected_fraction
        if nbnc > 0.0:
            ratios.append(RatioRecord(network, beta, mu, lam, deg / nbnc, True))
        else:
            ratios.append(RatioRecord(network, beta, mu, lam, None, False))
    return ratios


def summarize_ratios(ratios: Iterable[RatioRecord]) -> list[RatioSummary]:
    """Median/quartile/min/max of defined ratios, grouped by condition.

    Groups with no defined ratio are logged and excluded.  The median
    of an even count is the mean of the middle two; quartiles use
    linear interpolation between order statistics.
    """
    groups: dict[tuple[float, float, float], list[float]] = {}
    for r in ratios:
        groups.setdefault((r.beta, r.mu, r.lam), [])
        if r.defined:
            groups[(r.beta, r.mu, r.lam)].append(r.ratio)
    summaries = []
    for key in sorted(groups):
        values = sorted(groups[key])
        if not values:
            log.warning("no defined ratios for beta=%s mu=%s lambda=%s; "
                        "condition excluded from summary", *key)
            continue
        if len(values) == 1:
            q1 = q3 = values[0]
        else:
            q1, q3 = statistics.quantiles(values, n=4, method="inclusive")[0::2]
        summaries.append(RatioSummary(
            beta=key[0], mu=key[1], lam=key[2],
            median=statistics.median(values), q1=q1, q3=q3,
            min=values[0], max=values[-1], n_defined=len(values),
        ))
    return summaries


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _open_dest(dest) -> tuple[IO[str], bool]:
    if hasattr(dest, "write"):
        return dest, False
    return open(dest, "w", encoding="utf-8", newline=""), True


def write_records_csv(records: Iterable[SweepRecord], dest) -> None:
    """Records CSV, rows sorted by (network, beta, mu, lambda, strategy)."""
    rows = sorted(records, key=lambda r: (r.network, r.beta, r.mu, r.lam,
                                          r.strategy.value))
    fh, close = _open_dest(dest)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RECORDS_HEADER)
        for r in rows:
            writer.writerow([r.network, _fmt(r.beta), _fmt(r.mu), _fmt(r.lam),
                             r.strategy.value, _fmt(r.avg_infected_fraction),
                             r.n_trials])
    finally:
        if close:
            fh.close()


def write_ratios_csv(ratios: Iterable[RatioRecord], dest) -> None:
    """Ratios CSV; undefined cells carry an empty ratio and defined=false."""
    rows = sorted(ratios, key=lambda r: (r.network, r.beta, r.mu, r.lam))
    fh, close = _open_dest(dest)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RATIOS_HEADER)
        for r in rows:
            writer.writerow([r.network, _fmt(r.beta), _fmt(r.mu), _fmt(r.lam),
                             _fmt(r.ratio) if r.defined else "",
                             "true" if r.defined else "false"])
    finally:
        if close:
            fh.close()


def write_summary_csv(summaries: Iterable[RatioSummary], dest) -> None:
    """Summary CSV, one row per (beta, mu, lambda) condition."""
    rows = sorted(summaries, key=lambda s: (s.beta, s.mu, s.lam))
    fh, close = _open_dest(dest)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for s in rows:
            writer.writerow([_fmt(s.beta), _fmt(s.mu), _fmt(s.lam),
                             _fmt(s.median), _fmt(s.q1), _fmt(s.q3),
                             _fmt(s.min), _fmt(s.max), s.n_defined])
    finally:
        if close:
            fh.close()


def read_records_csv(source) -> list[SweepRecord]:
    """Parse a records CSV; malformed rows raise with their row number."""
    fh, close = (open(source, "r", encoding="utf-8", newline=""), True) \
        if not hasattr(source, "read") else (source, False)
    try:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SweepDataError("records CSV is empty") from None
        if header != RECORDS_HEADER:
            raise SweepDataError(f"unexpected records CSV header: {header}")
        records = []
        for row_number, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                records.append(SweepRecord(
                    network=row[0], beta=float(row[1]), mu=float(row[2]),
                    lam=float(row[3]), strategy=Strategy(row[4]),
                    avg_infected_fraction=float(row[5]), n_trials=int(row[6]),
                ))
            except (IndexError, ValueError) as exc:
                raise SweepDataError(f"records CSV row {row_number}: {exc}") from None
        return records
    finally:
        if close:
            fh.close()


@dataclass(frozen=True)
class ManifestEntry:
    """One network in a registry manifest."""

    name: str
    path: Path
    expected_nodes: int


class ManifestError(ValueError):
    """Malformed registry manifest."""


def parse_manifest(text: str, base_dir: Path | None = None) -> list[ManifestEntry]:
    """Parse ``name path expected_nodes`` lines; ``#`` starts a comment.

    Relative paths resolve against ``base_dir``.
    """
    entries = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 3:
            raise ManifestError(
                f"manifest line {line_number}: expected 'name path expected_nodes', "
                f"got {len(tokens)} tokens"
            )
        try:
            expected = int(tokens[2])
        except ValueError:
            raise ManifestError(
                f"manifest line {line_number}: expected_nodes is not an integer"
            ) from None
        path = Path(tokens[1])
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        entries.append(ManifestEntry(name=tokens[0], path=path,
                                     expected_nodes=expected))
    return entries


def load_registry(manifest_path) -> list[tuple[str, Graph]]:
    """Load every network named by a manifest file.

    A node-count mismatch against the manifest's expectation is logged
    as a warning, not an error: datasets in the wild vary in
    preprocessing.
    """
    manifest_path = Path(manifest_path)
    entries = parse_manifest(manifest_path.read_text(encoding="utf-8"),
                             base_dir=manifest_path.parent)
    registry = []
    for entry in entries:
        g = load_edge_list(entry.path, name=entry.name)
        if g.node_count != entry.expected_nodes:
            log.warning("network %s: expected %d nodes, loaded %d",
                        entry.name, entry.expected_nodes, g.node_count)
        registry.append((entry.name, g))
    return registry
