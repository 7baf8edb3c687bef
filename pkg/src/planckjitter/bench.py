"""Wall-clock comparison of Planckian Jitter against the default colour jitter."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .jitter import JitterConfig, default_color_jitter, planckian_jitter

DEFAULT_RESOLUTIONS = (32, 64, 128, 224, 448)
DEFAULT_REPEATS = 40
ALGORITHMS = {"planckian": planckian_jitter, "default": default_color_jitter}


@dataclass(frozen=True)
class BenchResult:
    resolution: int
    algorithm: str
    times: tuple[float, ...]

    @property
    def repeats(self) -> int:
        return len(self.times)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.times)

    @property
    def stddev(self) -> float:
        return statistics.stdev(self.times) if len(self.times) > 1 else 0.0


def bench_image(resolution: int, seed: int) -> np.ndarray:
    """Square random test image; depends only on ``(resolution, seed)``."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, resolution]))
    return rng.uniform(0.0, 1.0, size=(resolution, resolution, 3))


def time_algorithm(fn, img, cfg, rng, repeats: int, warmup: int = 1) -> list[float]:
    for _ in range(warmup):
        fn(img, cfg, rng)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(img, cfg, rng)
        times.append(time.perf_counter() - t0)
    return times


def run_benchmark(
    resolutions=DEFAULT_RESOLUTIONS,
    repeats: int = DEFAULT_REPEATS,
    seed: int = 1234,
    cfg: JitterConfig | None = None,
) -> list[BenchResult]:
    """Time both full augmentation calls ``repeats`` times per resolution.

    Both algorithms see the same input image; one warm-up call each is
    excluded. Returns results ordered by resolution, then algorithm.
    """
    resolutions = list(resolutions)
    if not resolutions:
        raise ValueError("no resolutions given")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    cfg = cfg or JitterConfig(seed=seed)
    results = []
    with threadpool_limits(limits=1):
        for res in resolutions:
            img = bench_image(res, seed)
            for name, fn in ALGORITHMS.items():
                rng = np.random.default_rng(seed)
                times = time_algorithm(fn, img, cfg, rng, repeats)
                results.append(BenchResult(res, name, tuple(times)))
    return results


def to_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["resolution", "algorithm", "repeat", "seconds"])
    for r in results:
        for i, t in enumerate(r.times):
            w.writerow([r.resolution, r.algorithm, i, f"{t:.9f}"])
    return buf.getvalue()


def summarize(results) -> list[dict]:
    """One row per resolution with both means and whether Planckian was faster."""
    by_res: dict[int, dict[str, BenchResult]] = {}
    for r in results:
        by_res.setdefault(r.resolution, {})[r.algorithm] = r
    rows = []
    for res in sorted(by_res):
        pj, cj = by_res[res]["planckian"], by_res[res]["default"]
        rows.append(
            {
                "resolution": res,
                "planckian_mean": pj.mean,
                "planckian_std": pj.stddev,
                "default_mean": cj.mean,
                "default_std": cj.stddev,
                "planckian_faster": pj.mean < cj.mean,
            }
        )
    return rows


def summary_table(results) -> str:
    lines = [f"{'res':>5} {'planckian ms':>14} {'default ms':>14}  faster"]
    for row in summarize(results):
        lines.append(
            f"{row['resolution']:>5} {row['planckian_mean'] * 1e3:>14.3f} "
            f"{row['default_mean'] * 1e3:>14.3f}  {'PJ' if row['planckian_faster'] else 'CJ'}"
        )
    return "\n".join(lines)
