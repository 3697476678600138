"""Exponential variates via the under-the-curve ziggurat.

Fast path: one 64-bit word supplies both the layer byte and the magnitude;
if the byte selects a full layer the draw is a single multiply.  Exceptional
draws pick an overhang slot from the alias table; the tail restarts the whole
draw shifted right by ``X[1]`` (memorylessness), and bounded boxes use the
three-region decomposition: reflect the never-accept triangle, accept without
a density evaluation below the chord minus the rejection band, and only test
``y < exp(-x)`` inside the band.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from ._packs import PathCounts, exp_pack, make_alias
from .densities import EXPONENTIAL
from .tables import ZigguratTables, default_tables
from .uniform import UniformSource


class ExpSampler:
    """Single-owner sampler: owns its uniform source, shares its tables."""

    def __init__(self, tables: ZigguratTables | None = None,
                 source: UniformSource | None = None):
        if tables is None:
            tables = default_tables(EXPONENTIAL)
        if tables.distribution != EXPONENTIAL:
            raise ValueError(f"need exponential tables, got {tables.distribution!r}")
        self.tables = tables
        self.alias = make_alias(tables)
        self.source = source if source is not None else UniformSource()
        self.counters = np.zeros(6, dtype=np.int64)
        self._pack = exp_pack(tables, self.alias)

    def sample(self) -> float:
        return float(_kernels.exp_one(self.source.state, self.source.gid, *self._pack))

    def sample_counted(self) -> float:
        return float(_kernels.exp_one_counted(
            self.source.state, self.source.gid, *self._pack, self.counters))

    def fill(self, out) -> np.ndarray:
        """Fill ``out`` (or a fresh length-``out`` buffer) with draws."""
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_exp(self.source.state, self.source.gid, *self._pack, out)
        return out

    def fill_counted(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_exp_counted(
            self.source.state, self.source.gid, *self._pack, out, self.counters)
        return out

    def aggregate(self, n: int) -> float:
        """Sum of ``n`` fresh draws without materializing them (bench loop)."""
        return float(_kernels.bench_exp(self.source.state, self.source.gid, *self._pack, n))

    @property
    def path_counts(self) -> PathCounts:
        return PathCounts.from_array(self.counters)

    def reset_counters(self) -> None:
        self.counters[:] = 0

    def overhang_attempt(self, j: int, ux: float, uy: float):
        """One bounded-box attempt from explicit unit-square coordinates.

        Mirrors the kernel arithmetic exactly; returns
        ``(accepted, x, density_evaluated)`` with ``x`` None on rejection.
        Used by tests to probe the decomposition without a random stream.
        """
        if not 1 <= j <= self.tables.l_max:
            raise IndexError(f"bounded slot out of range: {j}")
        _, _, xlo, xw, flo, fh, eps, _, _, _ = self._pack
        if ux > 1.0 - uy:
            ux, uy = 1.0 - uy, 1.0 - ux
        if uy < 1.0 - ux - eps:
            return True, xlo[j] + ux * xw[j], False
        x = xlo[j] + ux * xw[j]
        y = flo[j] + uy * fh[j]
        if y < np.exp(-x):
            return True, x, True
        return False, None, True
