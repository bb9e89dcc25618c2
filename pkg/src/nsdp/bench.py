"""Ordering-vs-solve benchmark: records, win counts and reports."""

from __future__ import annotations

import csv
import io
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import build_interaction_graph, run_elimination_game
from .model import NEG_INF, DopInstance, validate_instance
from .orderings import Heuristic, compute_ordering
from .solver import DEFAULT_BUDGET, Status, solve

log = logging.getLogger(__name__)

CSV_HEADER = [
    "instance", "n", "m", "heuristic", "order_time_s", "solve_time_s",
    "induced_width", "total_fill", "peak_cells", "status", "optimum",
]
METRICS = ("induced_width", "solve_time")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    heuristic: Heuristic
    order_time: float
    solve_time: float
    induced_width: int
    total_fill: int
    peak_cells: int
    status: Status
    optimum: object

    @property
    def total_time(self) -> float:
        return self.order_time + self.solve_time


def _timed(fn, repeats):
    times, result = [], None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def run_benchmark(
    instances: Iterable[DopInstance],
    heuristics: Sequence[Heuristic] = tuple(Heuristic),
    repeats: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> list[BenchRecord]:
    records = []
    for inst in instances:
        problems = validate_instance(inst)
        if problems:
            log.warning("skipping %s: %s", inst.name, "; ".join(problems))
            continue
        g = build_interaction_graph(inst)
        optima = {}
        for h in heuristics:
            order, t_order = _timed(lambda: compute_ordering(g, h), repeats)
            result, t_solve = _timed(lambda: solve(inst, order, budget), repeats)
            trace = run_elimination_game(g, order)
            if result.status is Status.OPTIMAL:
                optima[h] = result.optimum
            records.append(BenchRecord(
                inst.name, inst.n, inst.m, Heuristic(h), t_order, t_solve,
                trace.induced_width, trace.total_fill, result.stats.peak_cells,
                result.status, result.optimum,
            ))
        if len(set(optima.values())) > 1:
            raise RuntimeError(f"{inst.name}: heuristics disagree on the optimum: {optima}")
        statuses = {r.status for r in records if r.instance == inst.name} - {Status.WIDTH_EXCEEDED}
        if len(statuses) > 1:
            raise RuntimeError(f"{inst.name}: heuristics disagree on feasibility")
    return records


def _metric(rec: BenchRecord, metric: str) -> float:
    if metric == "induced_width":
        return rec.induced_width
    if metric == "solve_time":
        return rec.solve_time if rec.status is not Status.WIDTH_EXCEEDED else float("inf")
    if metric == "total_time":
        return rec.total_time if rec.status is not Status.WIDTH_EXCEEDED else float("inf")
    raise ValueError(f"unknown metric '{metric}'")


def _by_instance(records: Sequence[BenchRecord]) -> dict[str, list[BenchRecord]]:
    rows: dict[str, list[BenchRecord]] = {}
    for r in records:
        rows.setdefault(r.instance, []).append(r)
    return rows


@dataclass(frozen=True)
class WinTable:
    metric: str
    instances: int
    wins: dict

    def percent(self, h: Heuristic) -> float:
        return 100.0 * self.wins[h] / self.instances if self.instances else 0.0

    def format(self) -> str:
        lines = [f"wins by {self.metric} over {self.instances} instances"]
        for h, w in self.wins.items():
            lines.append(f"  {h.label:<9}{w:>4}  ({self.percent(h):.1f}%)")
        return "\n".join(lines)


def summarize_wins(records: Sequence[BenchRecord], metric: str = "induced_width") -> WinTable:
    """Per heuristic, the number of instances where it attains the row minimum
    of `metric`. Ties credit every tied heuristic."""
    rows = _by_instance(records)
    heuristics = None
    for name, row in rows.items():
        hs = [r.heuristic for r in row]
        if len(set(hs)) != len(hs):
            raise ValueError(f"instance {name}: duplicate heuristic records")
        if heuristics is None:
            heuristics = sorted(set(hs), key=list(Heuristic).index)
        elif set(hs) != set(heuristics):
            raise ValueError(f"instance {name}: heuristic coverage differs from other instances")
    wins = {h: 0 for h in heuristics or []}
    for row in rows.values():
        best = min(_metric(r, metric) for r in row)
        for r in row:
            if _metric(r, metric) == best:
                wins[r.heuristic] += 1
    return WinTable(metric, len(rows), wins)


def _fmt_optimum(v) -> str:
    if v is None:
        return ""
    if v == NEG_INF:
        return "-inf"
    return str(v)


def _sorted(records: Sequence[BenchRecord]) -> list[BenchRecord]:
    order = list(Heuristic)
    return sorted(records, key=lambda r: (r.instance, order.index(r.heuristic)))


def emit_report(records: Sequence[BenchRecord], fmt: str = "csv", metric: str = "total_time") -> str:
    """CSV with one row per record, or a markdown table with one row per
    instance where the per-row minimum of `metric` is bolded."""
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in _sorted(records):
            w.writerow([
                r.instance, r.n, r.m, r.heuristic.label, f"{r.order_time:.6f}", f"{r.solve_time:.6f}",
                r.induced_width, r.total_fill, r.peak_cells, r.status.value, _fmt_optimum(r.optimum),
            ])
        return out.getvalue()
    if fmt == "markdown":
        return _markdown(records, metric)
    raise ValueError(f"unknown report format '{fmt}'")


def _markdown(records, metric):
    heuristics = [h for h in Heuristic if any(r.heuristic is h for r in records)]
    lines = [
        "| Test | n | m | " + " | ".join(h.label for h in heuristics) + " |",
        "|---|--:|--:|" + "--:|" * len(heuristics),
    ]
    for name, row in sorted(_by_instance(records).items()):
        cells = {r.heuristic: r for r in row}
        best = min(_metric(r, metric) for r in row)
        out = []
        for h in heuristics:
            r = cells.get(h)
            if r is None:
                out.append("")
                continue
            val = _metric(r, metric)
            if r.status is Status.WIDTH_EXCEEDED and metric != "induced_width":
                text = "budget"
            elif metric == "induced_width":
                text = str(val)
            else:
                text = f"{val:.4f}"
            out.append(f"**{text}**" if val == best else text)
        first = row[0]
        lines.append(f"| {name} | {first.n} | {first.m} | " + " | ".join(out) + " |")
    return "\n".join(lines) + "\n"
