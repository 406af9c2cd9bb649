"""
Empirical scaling harness for the membership test.

Each (n, M) cell draws seeded instances: a random x with exp(x) != 0 of about M/|c|
letters, a random exponent c in +-{1..4}, and y = x^c scrambled by relation moves. The
decision runs with instrumentation and one record per trial is kept. Log-log least squares
over the records estimates how cost grows with word length and braid index.
"""

from __future__ import annotations

import csv
import io
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import fuzz, power, random_word
from .exponent import exp_sum
from .gwp import gwp_with_stats

CSV_COLUMNS = ["n", "M", "L_min", "c", "verdict", "letters_scanned", "factor_ops",
               "wall_ns", "seed"]
EXPONENTS = (-4, -3, -2, -1, 1, 2, 3, 4)


@dataclass
class BenchRecord:
    n: int
    M: int              # max(|x|, |y|) actually generated
    L_min: int
    c: int
    verdict: str
    letters_scanned: int
    factor_ops: int
    wall_ns: int
    seed: int
    target_M: int = field(default=0, compare=False)

    def row(self) -> list:
        return [getattr(self, name) for name in CSV_COLUMNS]


def trial_seed(seed: int, n: int, target_M: int, trial: int) -> int:
    return random.Random(f"{seed}:{n}:{target_M}:{trial}").getrandbits(32)


def make_instance(n: int, target_M: int, seed: int):
    """(x, y, c) for one trial; a pure function of its arguments."""
    rng = random.Random(seed)
    c = rng.choice(EXPONENTS)
    m = max(1, target_M // abs(c))
    x = random_word(n, m, rng)
    while exp_sum(x) == 0:
        x = random_word(n, m, rng)
    y = fuzz(power(x, c), max(1, target_M // 8), rng)
    return x, y, c


def run_trial(n: int, target_M: int, seed: int) -> BenchRecord:
    x, y, c = make_instance(n, target_M, seed)
    result, stats = gwp_with_stats(x, y)
    return BenchRecord(
        n=n, M=max(len(x), len(y)), L_min=stats.l_min, c=c, verdict=result.verdict.value,
        letters_scanned=stats.letters_scanned, factor_ops=stats.factor_ops,
        wall_ns=stats.wall_ns, seed=seed, target_M=target_M)


def _run_task(task):
    return run_trial(*task)


@dataclass
class BenchReport:
    records: list[BenchRecord]
    slope_time_vs_M: float
    slope_time_vs_n: float
    slope_ops_vs_M: float
    slope_ops_vs_n: float

    def ops_slope_for(self, n: int) -> float:
        recs = [r for r in self.records if r.n == n]
        return fit_slopes(recs, "factor_ops")[0]

    def cell_means(self, n: int, key: str = "factor_ops") -> list[tuple[int, float]]:
        cells: dict[int, list[int]] = {}
        for r in self.records:
            if r.n == n:
                cells.setdefault(r.target_M, []).append(getattr(r, key))
        return [(m, sum(v) / len(v)) for m, v in sorted(cells.items())]

    def to_csv(self, wall_time: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            row = r.row()
            if not wall_time:
                row[CSV_COLUMNS.index("wall_ns")] = 0
            writer.writerow(row)
        return buf.getvalue()

    def summary(self) -> str:
        return "\n".join([
            f"# slope time vs M (n fixed): {self.slope_time_vs_M:.3f}",
            f"# slope time vs n (M fixed): {self.slope_time_vs_n:.3f}",
            f"# slope factor_ops vs M (n fixed): {self.slope_ops_vs_M:.3f}",
            f"# slope factor_ops vs n (M fixed): {self.slope_ops_vs_n:.3f}",
        ])


def fit_slopes(records: list[BenchRecord], key: str) -> tuple[float, float]:
    """Least-squares exponents (a, b) in key ~ M^a n^b; nan where a variable is constant."""
    recs = [r for r in records if getattr(r, key) > 0]
    if not recs:
        return math.nan, math.nan
    y = np.log([float(getattr(r, key)) for r in recs])
    cols = [np.ones(len(recs))]
    log_m = np.log([float(r.M) for r in recs])
    log_n = np.log([float(r.n) for r in recs])
    vary_m = np.ptp(log_m) > 0
    vary_n = np.ptp(log_n) > 0
    if vary_m:
        cols.append(log_m)
    if vary_n:
        cols.append(log_n)
    coef, *_ = np.linalg.lstsq(np.column_stack(cols), y, rcond=None)
    coef = list(coef[1:])
    a = coef.pop(0) if vary_m else math.nan
    b = coef.pop(0) if vary_n else math.nan
    return float(a), float(b)


def bench(ns, Ms, trials: int, seed: int, jobs: int = 1) -> BenchReport:
    ns, Ms = list(ns), list(Ms)
    if not ns or not Ms:
        raise ValueError("n and M ranges must be non-empty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if min(ns) < 2 or min(Ms) < 1:
        raise ValueError("need n >= 2 and M >= 1")
    tasks = [(n, m, trial_seed(seed, n, m, t)) for n in ns for m in Ms for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_task, tasks, chunksize=4))
    else:
        records = [run_trial(*task) for task in tasks]
    t_m, t_n = fit_slopes(records, "wall_ns")
    o_m, o_n = fit_slopes(records, "factor_ops")
    return BenchReport(records, t_m, t_n, o_m, o_n)
