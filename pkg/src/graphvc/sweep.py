"""Random-graph experiment sweeps written as CSV."""

from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from graphvc.estimators import VCDimension
from graphvc.generators import gen_gnp, gen_powerlaw

SCHEMA_LINE = "# graphvc-sweep v1"
COLUMNS = ["model", "n", "param", "seed", "vcdim", "elapsed_ms"]
JOBS_ENV = "GRAPHVC_JOBS"


class SweepError(RuntimeError):
    pass


@dataclass(frozen=True)
class SampleResult:
    model: str
    n: int
    param: float
    seed: int
    vcdim: int
    elapsed_ms: float


def make_graph(model: str, n: int, param: float, seed: int):
    if model == "gnp":
        return gen_gnp(n, param, seed)
    if model == "powerlaw":
        return gen_powerlaw(n, param, seed)
    raise ValueError(f"unknown model {model!r}")


def run_sample(model: str, n: int, param: float, seed: int) -> SampleResult:
    start = time.perf_counter()
    g = make_graph(model, n, param, seed)
    d = VCDimension(collect_stats=False).fit(g).vcdim_ if g.n else 0
    return SampleResult(model, n, param, seed, d, (time.perf_counter() - start) * 1000)


def _run_packed(job):
    return run_sample(*job)


def default_jobs() -> int:
    return max(1, int(os.environ.get(JOBS_ENV, "1")))


def sweep(model: str, grid: Iterable[tuple[int, float]], samples: int = 20,
          seeds: Sequence[int] | None = None, jobs: int | None = None,
          out: TextIO | None = None) -> list[SampleResult]:
    """Run ``samples`` graphs per ``(n, param)`` point and stream CSV rows to ``out``.

    Sample ``s`` of every point uses ``seeds[s]`` (default ``0..samples-1``),
    so the output is reproducible. Each point ends with a ``mean`` row.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if model not in ("gnp", "powerlaw"):
        raise ValueError(f"unknown model {model!r}")
    seeds = list(range(samples)) if seeds is None else list(seeds)
    if len(seeds) != samples:
        raise ValueError("need exactly one seed per sample")
    grid = [(int(n), float(p)) for n, p in grid]
    jobs = default_jobs() if jobs is None else jobs
    writer = csv.writer(out, lineterminator="\n") if out is not None else None
    if writer:
        out.write(SCHEMA_LINE + "\n")
        writer.writerow(COLUMNS)
    results: list[SampleResult] = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for n, param in grid:
            batch = [(model, n, param, s) for s in seeds]
            try:
                rows = list(pool.map(_run_packed, batch)) if pool else [_run_packed(b) for b in batch]
            except Exception as exc:
                if writer:
                    writer.writerow(["#PARTIAL", n, param, "", "", ""])
                raise SweepError(f"sample failed at n={n}, param={param}: {exc}") from exc
            for r in rows:
                if writer:
                    writer.writerow([r.model, r.n, repr(r.param), r.seed, r.vcdim, f"{r.elapsed_ms:.3f}"])
            if writer:
                mean = sum(r.vcdim for r in rows) / len(rows)
                writer.writerow([model, n, repr(param), "mean", f"{mean:.4f}", ""])
            results.extend(rows)
    finally:
        if pool:
            pool.shutdown()
    return results


def mean_vcdim(results: Iterable[SampleResult], n: int, param: float) -> float:
    picked = [r.vcdim for r in results if r.n == n and r.param == param]
    if not picked:
        raise KeyError((n, param))
    return sum(picked) / len(picked)

