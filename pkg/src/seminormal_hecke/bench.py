"""Term counts and timings of the stepwise and fast routes on fat hooks.

The family is lam = (lam2 + 1, lam2^k2): one long first row, k2 rows of
length lam2, and the target f_n has n at the end of the first row.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass

from .seminormal import ascent_path, f_via_stepwise, fat_hook_fn
from .specht import clear_caches
from .tableaux import Partition, james_murphy_tableau, partition_text

FAMILY = ((2, 2), (2, 3), (3, 2), (3, 3))
CSV_HEADER = ("shape", "method", "terms", "millis")


def fat_hook_shape(lam2: int, k2: int) -> Partition:
    return (lam2 + 1,) + (lam2,) * k2


def stepwise_prediction(lam2: int, k2: int) -> int:
    return 2 ** (lam2 * k2)


def fast_prediction(lam2: int, k2: int) -> int:
    """The closed form sum_{i=1}^{k2} (lam2 - 1)^i."""
    return sum((lam2 - 1) ** i for i in range(1, k2 + 1))


def fast_count(lam2: int, k2: int) -> int:
    """Terms of F when each R_i is multiplied out: sum_{p=1}^{k2} lam2^p."""
    return sum(lam2**p for p in range(1, k2 + 1))


@dataclass
class BenchRow:
    shape: Partition
    lam1: int
    lam2: int
    k2: int
    stepwise_terms: int
    fast_terms: int
    stepwise_predicted: int
    fast_predicted: int
    stepwise_ms: float
    fast_ms: float

    def to_json(self) -> dict:
        out = asdict(self)
        out["shape"] = list(self.shape)
        return out


def _timed(fn, repeats: int) -> tuple[object, float]:
    best, result = float("inf"), None
    for _ in range(repeats):
        clear_caches()
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best * 1000.0


def bench_fat_hook(lam2: int, k2: int, repeats: int = 3) -> BenchRow:
    lam = fat_hook_shape(lam2, k2)
    tn = james_murphy_tableau(lam, (1, lam2 + 1))
    assert len(ascent_path(tn)) == lam2 * k2
    step, step_ms = _timed(lambda: f_via_stepwise(tn, merge=False, straighten=False), repeats)
    fast, fast_ms = _timed(lambda: fat_hook_fn(lam), repeats)
    return BenchRow(
        lam, lam[0], lam2, k2,
        step.raw_terms, len(fast.F_terms),
        stepwise_prediction(lam2, k2), fast_prediction(lam2, k2),
        round(step_ms, 3), round(fast_ms, 3),
    )


def run_bench(pairs=FAMILY, repeats: int = 3) -> list[BenchRow]:
    rows = [bench_fat_hook(l2, k2, repeats) for l2, k2 in pairs]
    return sorted(rows, key=lambda r: (r.lam2, r.k2))


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([partition_text(r.shape), "stepwise", r.stepwise_terms, r.stepwise_ms])
        w.writerow([partition_text(r.shape), "fast", r.fast_terms, r.fast_ms])
    return buf.getvalue()
