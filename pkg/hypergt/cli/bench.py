"""
Benchmark Harness

Runs a sweep of (instance, method, seed) cells and reports one CSV row per
cell. A sweep is a JSON document:

    {"instances": [{"kind": "traditional", "n": 8, "d": 2}, {"file": "x.hg"}],
     "methods": ["construct", "adaptive", "optimal"],
     "seeds": [0, 1]}

Cells can be spread over worker processes; rows are always sorted by
(instance position, method position, seed position), so the CSV does not
depend on the worker count. Wall times are only reported on request.
"""
import csv
import io
import json
import logging
import multiprocessing as mp
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..adaptive import HiddenEdgeOracle, adaptive_identify
from ..config import BenchConfig, ConstructionConfig
from ..construct import (
    ConstructionParams,
    optimal_bruteforce,
    randomized_construct,
    required_k,
    traditional_reference,
)
from ..core import Hypergraph, compute_beta, compute_d, info_lower_bound
from ..errors import HyperGTError, ParseError
from ..generators import GenSpec, generate
from .formats import parse_hypergraph

logger = logging.getLogger(__name__)

METHODS = ("construct", "adaptive", "optimal")


@dataclass(frozen=True)
class BenchSettings:
    alpha: float = ConstructionConfig.ALPHA
    max_attempts: int = ConstructionConfig.MAX_ATTEMPTS
    k_max: int = BenchConfig.OPTIMAL_K_MAX


@dataclass
class RunReport:
    instance: str
    method: str
    seed: int
    n: int
    edges: int
    d: int
    beta: Optional[int] = None
    info_lower_bound: int = 0
    required_k: Optional[int] = None
    traditional_reference: Optional[float] = None
    k: Optional[int] = None
    attempts: Optional[int] = None
    adaptive_worst: Optional[int] = None
    adaptive_mean: Optional[float] = None
    status: str = "ok"
    wall_time: Optional[float] = None

    @classmethod
    def columns(cls, timing: bool) -> List[str]:
        names = [f.name for f in fields(cls)]
        return names if timing else [name for name in names if name != "wall_time"]

    def to_row(self, timing: bool) -> List[str]:
        row = []
        for name in self.columns(timing):
            value = getattr(self, name)
            if value is None:
                row.append("")
            elif isinstance(value, float):
                row.append(f"{value:.4f}")
            else:
                row.append(str(value))
        return row


@dataclass(frozen=True)
class BenchCell:
    position: Tuple[int, int, int]
    label: str
    hypergraph: Hypergraph
    method: str
    seed: int
    settings: BenchSettings


@dataclass(frozen=True)
class Sweep:
    instances: Tuple[Tuple[str, Hypergraph], ...]
    methods: Tuple[str, ...]
    seeds: Tuple[int, ...]

    def cells(self, settings: BenchSettings) -> List[BenchCell]:
        return [
            BenchCell((i, j, s), label, hypergraph, method, seed, settings)
            for i, (label, hypergraph) in enumerate(self.instances)
            for j, method in enumerate(self.methods)
            for s, seed in enumerate(self.seeds)
        ]


def _instance_from_entry(entry: dict, base_dir: Path) -> Tuple[str, Hypergraph]:
    if not isinstance(entry, dict):
        raise ValueError(f"instance entries must be objects, got {entry!r}")
    if "file" in entry:
        path = base_dir / entry["file"]
        return entry["file"], parse_hypergraph(path.read_text())
    try:
        spec = GenSpec(**entry)
    except TypeError as exc:
        raise ValueError(f"bad instance entry {entry!r}: {exc}") from exc
    return spec.describe(), generate(spec)


def load_sweep(text: str, base_dir: Path = Path(".")) -> Sweep:
    """
    Raises:
        ParseError: the text is not JSON
        ValueError: the JSON does not describe a sweep
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg, exc.colno) from exc
    if not isinstance(document, dict):
        raise ValueError("a sweep must be a JSON object")
    methods = tuple(document.get("methods", METHODS))
    unknown = [method for method in methods if method not in METHODS]
    if unknown:
        raise ValueError(f"unknown methods {unknown}, expected a subset of {METHODS}")
    seeds = tuple(int(seed) for seed in document.get("seeds", [0]))
    instances = tuple(_instance_from_entry(entry, base_dir) for entry in document.get("instances", []))
    return Sweep(instances, methods, seeds)


def _base_report(cell: BenchCell) -> RunReport:
    hypergraph = cell.hypergraph
    d = compute_d(hypergraph)
    report = RunReport(
        instance=cell.label, method=cell.method, seed=cell.seed,
        n=hypergraph.n, edges=hypergraph.m, d=d,
        info_lower_bound=info_lower_bound(hypergraph),
    )
    if cell.label.startswith("traditional("):
        report.traditional_reference = traditional_reference(hypergraph.n, d)
    if hypergraph.m >= 2:
        report.beta = compute_beta(hypergraph)
        report.required_k = required_k(hypergraph.m, d, report.beta, cell.settings.alpha)
    return report


def _run_construct(cell: BenchCell, report: RunReport):
    if cell.hypergraph.m < 2:
        report.k, report.attempts = 0, 0
        return
    params = ConstructionParams(alpha=cell.settings.alpha, seed=cell.seed, max_attempts=cell.settings.max_attempts)
    result = randomized_construct(cell.hypergraph, params, beta=report.beta)
    report.k, report.attempts = result.k, result.attempts_used


def _run_adaptive(cell: BenchCell, report: RunReport):
    counts = []
    for edge in cell.hypergraph.edges:
        _, transcript = adaptive_identify(
            cell.hypergraph, HiddenEdgeOracle(edge), seed=cell.seed,
            alpha=cell.settings.alpha, max_attempts=cell.settings.max_attempts,
        )
        counts.append(transcript.num_tests)
    counts = np.array(counts)
    report.adaptive_worst = int(counts.max())
    report.adaptive_mean = float(counts.mean())
    report.k = report.adaptive_worst


def _run_optimal(cell: BenchCell, report: RunReport):
    family = optimal_bruteforce(cell.hypergraph, cell.settings.k_max)
    if family is None:
        report.status = "not_found"
    else:
        report.k = family.k


_RUNNERS = {"construct": _run_construct, "adaptive": _run_adaptive, "optimal": _run_optimal}


def run_bench_cell(cell: BenchCell) -> Tuple[Tuple[int, int, int], RunReport]:
    """Run one cell; library errors become the row's status instead of aborting the sweep."""
    start = time.perf_counter()
    report = _base_report(cell)
    try:
        _RUNNERS[cell.method](cell, report)
    except HyperGTError as exc:
        report.status = type(exc).__name__
        logger.warning(f"{cell.label} / {cell.method} / seed {cell.seed}: {exc}")
    report.wall_time = time.perf_counter() - start
    return cell.position, report


def run_bench(sweep: Sweep, settings: BenchSettings = BenchSettings(),
              num_workers: int = BenchConfig.NUM_WORKERS) -> List[RunReport]:
    cells = sweep.cells(settings)
    logger.info(f"Running {len(cells)} benchmark cells on {num_workers} worker(s)")
    if num_workers > 1 and len(cells) > 1:
        with mp.Pool(processes=num_workers) as pool:
            results = pool.map(run_bench_cell, cells)
    else:
        results = [run_bench_cell(cell) for cell in cells]
    return [report for _, report in sorted(results, key=lambda item: item[0])]


def reports_to_csv(reports: Sequence[RunReport], timing: bool = False) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RunReport.columns(timing))
    for report in reports:
        writer.writerow(report.to_row(timing))
    return buffer.getvalue()
