"""Benchmark harness: generate-and-aggregate timing, median of trials.

Each trial draws ``n`` variates and adds them into a running sum inside the
compiled kernel, so dead-code elimination cannot fake throughput.  Reported
time is the median over trials; speedups are modified over traditional for
the same distribution.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field

from .exponential import ExpSampler
from .normal import NormalSampler
from .traditional import TraditionalExpSampler, TraditionalNormalSampler
from .uniform import UniformSource

ALGORITHMS = ("modified", "traditional")


@dataclass
class BenchReport:
    algorithm: str
    distribution: str
    n: int
    trials: int
    median_seconds: float
    throughput: float = field(init=False)
    speedup_vs_baseline: float | None = None
    trial_seconds: list[float] = field(default_factory=list)

    def __post_init__(self):
        self.throughput = self.n / self.median_seconds if self.median_seconds else 0.0

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "distribution": self.distribution,
            "n": self.n,
            "trials": self.trials,
            "median_seconds": self.median_seconds,
            "throughput": self.throughput,
            "speedup_vs_baseline": self.speedup_vs_baseline,
            "trial_seconds": self.trial_seconds,
        }


def _make(algorithm: str, dist: str, seed: int | None):
    source = UniformSource(seed)
    if algorithm == "modified":
        return ExpSampler(source=source) if dist == "exp" else NormalSampler(source=source)
    if algorithm == "traditional":
        if dist == "exp":
            return TraditionalExpSampler(source=source)
        return TraditionalNormalSampler(source=source)
    raise ValueError(f"unknown algorithm: {algorithm!r}")


def run_bench(algorithms, dist: str, n: int, trials: int = 3,
              seed: int | None = None) -> list[BenchReport]:
    """Time each algorithm; at least 3 trials, median reported."""
    if dist not in ("exp", "normal"):
        raise ValueError(f"unknown distribution: {dist!r}")
    if trials < 3:
        raise ValueError("need at least 3 trials for a stable median")
    reports = []
    for algorithm in algorithms:
        sampler = _make(algorithm, dist, seed)
        sampler.aggregate(1000)  # warm the JIT before timing
        times = []
        for _ in range(trials):
            t0 = time.perf_counter()
            sampler.aggregate(n)
            times.append(time.perf_counter() - t0)
        reports.append(BenchReport(
            algorithm=algorithm,
            distribution=dist,
            n=n,
            trials=trials,
            median_seconds=statistics.median(times),
            trial_seconds=times,
        ))
    by_name = {r.algorithm: r for r in reports}
    if "modified" in by_name and "traditional" in by_name:
        base = by_name["traditional"].median_seconds
        by_name["modified"].speedup_vs_baseline = base / by_name["modified"].median_seconds
    return reports
