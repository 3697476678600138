"""Standard-normal variates: half-normal ziggurat magnitude plus a sign bit.

The signed 64-bit word supplies the layer byte, the sign, and the magnitude
in one draw.  Overhang boxes use plain rejection (the half-normal changes
curvature at x = 1, so the chord decomposition is unsound there); the tail
uses the exponential-transform rejection scheme, fed by the exponential
sampler running on the same uniform stream.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from ._packs import PathCounts, exp_pack, make_alias, normal_pack
from .densities import EXPONENTIAL, HALF_NORMAL
from .tables import ZigguratTables, default_tables
from .uniform import UniformSource


class NormalSampler:
    """Single-owner sampler; shares immutable tables, owns its source."""

    def __init__(self, tables: ZigguratTables | None = None,
                 source: UniformSource | None = None,
                 exp_tables: ZigguratTables | None = None):
        if tables is None:
            tables = default_tables(HALF_NORMAL)
        if tables.distribution != HALF_NORMAL:
            raise ValueError(f"need half-normal tables, got {tables.distribution!r}")
        if exp_tables is None:
            exp_tables = default_tables(EXPONENTIAL)
        self.tables = tables
        self.alias = make_alias(tables)
        self.source = source if source is not None else UniformSource()
        self.counters = np.zeros(6, dtype=np.int64)
        self._pack = normal_pack(tables, self.alias)
        self._exp_pack = exp_pack(exp_tables, make_alias(exp_tables))

    @property
    def tail_start(self) -> float:
        return float(self.tables.x[1])

    def sample(self) -> float:
        return float(_kernels.normal_one(
            self.source.state, self.source.gid, *self._pack, *self._exp_pack))

    def sample_counted(self) -> float:
        return float(_kernels.normal_one_counted(
            self.source.state, self.source.gid, *self._pack, *self._exp_pack,
            self.counters))

    def fill(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_normal(
            self.source.state, self.source.gid, *self._pack, *self._exp_pack, out)
        return out

    def fill_counted(self, out) -> np.ndarray:
        if isinstance(out, int):
            out = np.empty(out, dtype=np.float64)
        _kernels.fill_normal_counted(
            self.source.state, self.source.gid, *self._pack, *self._exp_pack,
            out, self.counters)
        return out

    def aggregate(self, n: int) -> float:
        return float(_kernels.bench_normal(
            self.source.state, self.source.gid, *self._pack, *self._exp_pack, n))

    @property
    def path_counts(self) -> PathCounts:
        return PathCounts.from_array(self.counters)

    def reset_counters(self) -> None:
        self.counters[:] = 0

    def overhang_attempt(self, j: int, ux: float, uy: float):
        """One plain-rejection box attempt from explicit unit coordinates."""
        if not 1 <= j <= self.tables.l_max:
            raise IndexError(f"bounded slot out of range: {j}")
        _, _, xlo, xw, flo, fh, _, _, _ = self._pack
        x = xlo[j] + ux * xw[j]
        y = flo[j] + uy * fh[j]
        if y < np.exp(-0.5 * x * x):
            return True, x, True
        return False, None, True
