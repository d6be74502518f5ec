"""Atlas reports and the BLT-vs-HHL benchmark table."""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__
from .analysis import involutions
from .blt import SearchConfig, SearchStats, classify
from .cplus import PolytopeRecord
from .errors import AtlasError
from .groups import GroupSpec, parse_group
from .hhl import classify_hhl

ALGORITHMS = {"blt": classify, "hhl": classify_hhl}


@dataclass
class AtlasReport:
    group_name: str
    group_order: int
    involution_count: int
    algorithm: str
    records: list[PolytopeRecord]
    stats: SearchStats
    tool_version: str = __version__

    @property
    def involution_ratio(self) -> Fraction:
        return Fraction(self.involution_count, self.group_order)

    @property
    def ratio_text(self) -> str:
        return f"{float(self.involution_ratio):.4g}"

    def to_dict(self) -> dict:
        return {
            "format": "chiralatlas-report",
            "version": 1,
            "tool_version": self.tool_version,
            "group": {
                "name": self.group_name,
                "order": self.group_order,
                "involutions": self.involution_count,
                "involution_ratio": self.ratio_text,
            },
            "algorithm": self.algorithm,
            "records": [
                {
                    "rank": r.rank,
                    "schlafli": list(r.schlafli),
                    "generators": [str(a) for a in r.alpha_tuple.alphas],
                    "chiral": r.chiral,
                }
                for r in self.records
            ],
            "stats": self.stats.as_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"group {self.group_name}: order {self.group_order}, "
            f"{self.involution_count} involutions (ratio {self.ratio_text})",
            f"algorithm {self.algorithm}: {len(self.records)} record(s) "
            f"in {self.stats.wall_time:.3f}s",
        ]
        for r in self.records:
            kind = "chiral" if r.chiral else "regular"
            entries = ", ".join(map(str, r.schlafli))
            lines.append(f"New {kind} of type  [ {entries} ] for group of order  {r.group_order}")
            lines.append("    generators: " + "  ".join(str(a) for a in r.alpha_tuple.alphas))
        return "\n".join(lines)


def run_classify(spec: GroupSpec | str, cfg: SearchConfig = SearchConfig(),
                 algorithm: str = "blt") -> AtlasReport:
    if isinstance(spec, str):
        spec = GroupSpec.from_string(spec)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    G = parse_group(spec)
    n_inv = len(involutions(G, cfg.enumeration_cap))
    records, stats = ALGORITHMS[algorithm](G, cfg)
    return AtlasReport(spec.display_name, G.order, n_inv, algorithm, records, stats)


def type_multiset(records: Sequence[PolytopeRecord]) -> Counter:
    return Counter((r.rank, tuple(r.schlafli)) for r in records)


@dataclass
class BenchRow:
    group: str
    order: int | None = None
    involution_ratio: str | None = None
    blt_time: float | None = None
    hhl_time: float | None = None
    blt_records: int | None = None
    hhl_records: int | None = None
    status: str = "OK"

    @property
    def speedup(self) -> float | None:
        if self.blt_time and self.hhl_time is not None:
            return self.hhl_time / self.blt_time
        return None


def _timed(fn, G, cfg, min_time, max_runs):
    # best of several runs for short timings, a single run for long ones
    best = None
    spent = 0.0
    for _ in range(max_runs):
        t = time.perf_counter()
        result, _ = fn(G, cfg)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
        spent += dt
        if spent >= min_time:
            break
    return result, best


def run_bench(specs: Sequence[GroupSpec | str], cfg: SearchConfig = SearchConfig(),
              min_time: float = 0.5, max_runs: int = 5) -> list[BenchRow]:
    """Time both algorithms on each group; failures become row statuses.

    Each algorithm is re-run until ``min_time`` seconds have been spent (at
    most ``max_runs`` times) and the fastest run is reported.
    """
    rows = []
    for spec in specs:
        if isinstance(spec, str):
            spec = GroupSpec.from_string(spec)
        row = BenchRow(spec.display_name)
        try:
            G = parse_group(spec)
            row.order = G.order
            row.involution_ratio = f"{len(involutions(G, cfg.enumeration_cap)) / G.order:.4g}"
            blt, row.blt_time = _timed(classify, G, cfg, min_time, max_runs)
            hhl, row.hhl_time = _timed(classify_hhl, G, cfg, min_time, max_runs)
            row.blt_records, row.hhl_records = len(blt), len(hhl)
            if type_multiset(blt) != type_multiset(hhl):
                row.status = "FAILED"
        except AtlasError as exc:
            row.status = f"ERROR: {exc}"
        rows.append(row)
    return rows


def _fmt(x, spec):
    return "-" if x is None else format(x, spec)


def bench_table(rows: Sequence[BenchRow]) -> str:
    head = ("group", "BLT (s)", "HHL (s)", "speedup", "records", "i2/#G", "#G", "status")
    body = []
    for r in rows:
        recs = "-" if r.blt_records is None else f"{r.blt_records}/{r.hhl_records}"
        body.append((r.group, _fmt(r.blt_time, ".3f"), _fmt(r.hhl_time, ".3f"),
                     _fmt(r.speedup, ".1f"), recs, r.involution_ratio or "-",
                     "-" if r.order is None else str(r.order), r.status))
    widths = [max(len(str(x)) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(line, widths)).rstrip()
             for line in [head, *body]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def bench_json(rows: Sequence[BenchRow]) -> str:
    return json.dumps({
        "format": "chiralatlas-bench",
        "version": 1,
        "tool_version": __version__,
        "rows": [dict(r.__dict__, speedup=r.speedup) for r in rows],
    }, indent=2)
