"""Timing harness: improvised pipeline versus traditional FP-growth."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from statistics import fmean
from typing import Callable

from .condensed_tree import build
from .mfi import MiningStats, mine
from .oracles import FPGrowthStats, fpgrowth_mine
from .txdb import TransactionDB, as_threshold


@dataclass
class AlgoRun:
    name: str
    durations_ms: list[float] = field(default_factory=list)
    itemset_counts: list[int] = field(default_factory=list)
    conditional_trees: list[int] = field(default_factory=list)

    @property
    def runs(self):
        return len(self.durations_ms)

    @property
    def mean_ms(self):
        return fmean(self.durations_ms) if self.durations_ms else 0.0

    @property
    def itemset_count(self):
        counts = set(self.itemset_counts)
        if len(counts) > 1:
            raise RuntimeError(f"{self.name}: itemset count changed across runs: {sorted(counts)}")
        return self.itemset_counts[0] if self.itemset_counts else 0


@dataclass
class BenchReport:
    n_transactions: int
    n_items: int
    minsup: str
    minsup_resolved: int
    algorithms: list[AlgoRun]
    source: dict = field(default_factory=dict)

    def as_dict(self, timings=True):
        algos = []
        for a in self.algorithms:
            entry = {
                "name": a.name,
                "runs": a.runs,
                "itemset_count": a.itemset_count,
                "conditional_trees": a.conditional_trees[0] if a.conditional_trees else 0,
            }
            if timings:
                entry["durations_ms"] = [round(d, 4) for d in a.durations_ms]
                entry["mean_ms"] = round(a.mean_ms, 4)
            algos.append(entry)
        return {
            "dataset": {
                "n_transactions": self.n_transactions,
                "n_items": self.n_items,
                "minsup": self.minsup,
                "minsup_resolved": self.minsup_resolved,
                "source": self.source,
            },
            "algorithms": algos,
        }


def _improvised(db, minsup):
    stats = MiningStats()
    result = mine(build(db, minsup), stats)
    return len(result), stats.conditional_trees


def _traditional(db, minsup):
    stats = FPGrowthStats()
    found = fpgrowth_mine(db, minsup, stats)
    return len(found), stats.conditional_trees


ALGORITHMS = {"improvised": _improvised, "fpgrowth": _traditional}


def run_bench(db: TransactionDB, minsup, repeat: int = 10,
              clock: Callable[[], float] = time.perf_counter, source=None) -> BenchReport:
    """Time each algorithm ``repeat`` times on the in-memory ``db``.

    Algorithms run sequentially, never interleaved; no warm-up run is discarded.
    """
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    threshold = as_threshold(minsup)
    runs = []
    for name, fn in ALGORITHMS.items():
        run = AlgoRun(name)
        for _ in range(repeat):
            start = clock()
            count, trees = fn(db, threshold)
            run.durations_ms.append((clock() - start) * 1000.0)
            run.itemset_counts.append(count)
            run.conditional_trees.append(trees)
        runs.append(run)
    return BenchReport(
        n_transactions=db.n_transactions,
        n_items=db.n_items,
        minsup=str(threshold),
        minsup_resolved=threshold.resolve(db.n_transactions),
        algorithms=runs,
        source=source or {},
    )
