"""Traditional ziggurat baseline (layers contain the density).

Marsaglia/Tsang-style construction: bisection on the base abscissa ``r`` so
that equal-area strips (each strip area = base box + tail mass) stack to
exactly ``i_max`` layers reaching the density peak.  Sampling follows the
classic control flow: unconditional ``x = U1 * X_i``, fast accept when
``U1 < k_i``, tail fallback for the base strip, rejection test otherwise,
full restart on rejection.  Shares the uniform source and the
integer-word/low-byte tricks with the modified samplers so benchmarks isolate
the algorithmic difference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._packs import PathCounts
from .densities import DensitySpec, EXPONENTIAL, HALF_NORMAL, get
from .errors import NonConvergence
from .tables import _bisect_to_ulp
from .uniform import UniformSource

TWO_64 = 2.0 ** 64
TWO_63 = 2.0 ** 63
TWO_NEG_64 = 2.0 ** -64
TWO_NEG_63 = 2.0 ** -63


@dataclass(frozen=True)
class TraditionalTables:
    """Traditional layer stack plus the per-byte fast-accept ratio table."""

    distribution: str
    i_max: int
    r: float
    v: float  # area of every strip, tail included in strip 0
    x: np.ndarray  # x[0] = r, x[i] = inverse(f[i]); decreasing
    f: np.ndarray  # f[0] = density(r), f[i_max - 1] == 1
    k: np.ndarray  # fast-accept ratios per byte, in (0, 1]

    @property
    def edge(self) -> np.ndarray:
        """Per-byte proposal edge length: virtual base edge, then x[i-1]."""
        e = np.empty(self.i_max)
        e[0] = self.v / self.f[0]
        e[1:] = self.x[:-1]
        return e

    def fast_accept_probability(self) -> float:
        return float(self.k.mean())


def solve_traditional(spec: DensitySpec, i_max: int, tol: float = 1e-12) -> TraditionalTables:
    """Find r by bisection so the equal-area stack closes at the peak."""
    if i_max < 2 or i_max & (i_max - 1):
        raise ValueError(f"i_max must be a power of two >= 2, got {i_max}")

    def stack(r: float):
        f0 = spec.density(r)
        v = r * f0 + spec.cdf_complement(r)
        fs = np.empty(i_max)
        xs = np.empty(i_max)
        fs[0], xs[0] = f0, r
        for i in range(1, i_max):
            f = fs[i - 1] + v / xs[i - 1]
            if f >= 1.0 and i < i_max - 1:
                return None, None, v  # overshot the peak early: r too small
            fs[i] = f
            xs[i] = spec.inverse(f) if f < 1.0 else 0.0
        return fs, xs, v

    def resid(r: float) -> float:
        fs, _, _ = stack(r)
        return 1.0 if fs is None else fs[i_max - 1] - 1.0

    lo, hi = 1e-3, spec.inverse(1e-13)
    try:
        r = _bisect_to_ulp(resid, lo, hi)
    except NonConvergence as exc:
        raise NonConvergence(f"traditional base abscissa for {spec.kind!r}") from exc
    fs, xs, v = stack(r)
    if fs is None:
        raise NonConvergence("stack inconsistent at the converged base abscissa")
    fs[i_max - 1] = min(fs[i_max - 1], 1.0)

    k = np.empty(i_max)
    k[0] = r * fs[0] / v
    k[1:] = xs[1:] / xs[:-1]
    if np.any(k < 0.0) or np.any(k > 1.0):
        raise NonConvergence("fast-accept ratios out of range")
    return TraditionalTables(
        distribution=spec.kind, i_max=i_max, r=float(r), v=float(v),
        x=xs, f=fs, k=k,
    )


def _int_thresholds(tables: TraditionalTables, scale: float) -> np.ndarray:
    """floor(k * scale), nudged down so a fast accept can never overshoot."""
    edge = tables.edge
    bound = np.empty(tables.i_max)
    bound[0] = tables.r
    bound[1:] = tables.x[1:]
    kk = np.floor(tables.k * scale).astype(np.uint64)
    inv = 1.0 / scale
    for i in range(tables.i_max):
        while kk[i] > 0 and np.float64(kk[i]) * inv * edge[i] > bound[i]:
            kk[i] -= np.uint64(1)
    return kk


def _pack(tables: TraditionalTables, signed: bool):
    scale = TWO_63 if signed else TWO_64
    se = tables.edge * (1.0 / scale)
    kk = _int_thresholds(tables, scale)
    flo = np.zeros(tables.i_max)
    fh = np.zeros(tables.i_max)
    flo[1:] = tables.f[:-1]
    fh[1:] = tables.f[1:] - tables.f[:-1]
    return se, kk, flo, fh, float(tables.r)


class _TraditionalSampler:
    def __init__(self, kind: str, i_max: int, source: UniformSource | None,
                 tables: TraditionalTables | None):
        spec = get(kind)
        if tables is None:
            tables = solve_traditional(spec, i_max)
        if tables.distribution != kind:
            raise ValueError(f"tables are for {tables.distribution!r}, need {kind!r}")
        self.tables = tables
        self.source = source if source is not None else UniformSource()
        self.counters = np.zeros(6, dtype=np.int64)
        self._pack = _pack(tables, signed=(kind == HALF_NORMAL))

    @property
    def path_counts(self) -> PathCounts:
        return PathCounts.from_array(self.counters)

    def reset_counters(self) -> None:
        self.counters[:] = 0

    def fast_accept_fraction(self) -> float:
        c = self.counters
        return c[1] / c[0] if c[0] else 0.0


class TraditionalExpSampler(_TraditionalSampler):
    def __init__(self, tables: TraditionalTables | None = None,
                 source: UniformSource | None = None, i_max: int = 256):
        super().__init__(EXPONENTIAL, i_max, source, tables)

    def sample(self) -> float:
        return float(_kernels.trad_exp_one(self.source.state, self.source.gid, *self._pack))

    def sample_counted(self) -> float:
        return float(_kernels.trad_exp_one_counted(
            self.source.state, self.source.gid, *self._pack, self.counters))

    def fill(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_trad_exp(self.source.state, self.source.gid, *self._pack, out)
        return out

    def fill_counted(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_trad_exp_counted(
            self.source.state, self.source.gid, *self._pack, out, self.counters)
        return out

    def aggregate(self, n: int) -> float:
        return float(_kernels.bench_trad_exp(
            self.source.state, self.source.gid, *self._pack, n))


class TraditionalNormalSampler(_TraditionalSampler):
    def __init__(self, tables: TraditionalTables | None = None,
                 source: UniformSource | None = None, i_max: int = 256):
        super().__init__(HALF_NORMAL, i_max, source, tables)

    def sample(self) -> float:
        return float(_kernels.trad_normal_one(self.source.state, self.source.gid, *self._pack))

    def sample_counted(self) -> float:
        return float(_kernels.trad_normal_one_counted(
            self.source.state, self.source.gid, *self._pack, self.counters))

    def fill(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_trad_normal(self.source.state, self.source.gid, *self._pack, out)
        return out

    def fill_counted(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_trad_normal_counted(
            self.source.state, self.source.gid, *self._pack, out, self.counters)
        return out

    def aggregate(self, n: int) -> float:
        return float(_kernels.bench_trad_normal(
            self.source.state, self.source.gid, *self._pack, n))
