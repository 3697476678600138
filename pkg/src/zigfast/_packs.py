"""Shared glue turning table objects into the flat tuples the kernels take."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alias import build_alias
from .tables import ZigguratTables

TWO_NEG_63 = 2.0 ** -63


def overhang_arrays(tables: ZigguratTables):
    """Per-slot box geometry (index 0 unused; slots 1..l_max incl. the cap)."""
    xe, fe = tables.x_ext, tables.f_ext
    n = tables.l_max + 1
    xlo = np.zeros(n)
    xw = np.zeros(n)
    flo = np.zeros(n)
    fh = np.zeros(n)
    for j in range(1, n):
        xlo[j] = xe[j + 1]
        xw[j] = xe[j] - xe[j + 1]
        flo[j] = fe[j]
        fh[j] = fe[j + 1] - fe[j]
    return xlo, xw, flo, fh


def exp_pack(tables: ZigguratTables, alias_table):
    xlo, xw, flo, fh = overhang_arrays(tables)
    return (
        tables.l_max,
        tables.scaled_x,
        xlo,
        xw,
        flo,
        fh,
        float(tables.epsilon_max),
        alias_table.prob,
        alias_table.alias,
        float(tables.x[1]),
    )


def normal_pack(tables: ZigguratTables, alias_table):
    xlo, xw, flo, fh = overhang_arrays(tables)
    # signed fast path: magnitude word spans [-2^63, 2^63), so scale by 2^-63
    return (
        tables.l_max,
        tables.x * TWO_NEG_63,
        xlo,
        xw,
        flo,
        fh,
        alias_table.prob,
        alias_table.alias,
        float(tables.x[1]),
    )


def make_alias(tables: ZigguratTables):
    return build_alias(tables.a)


@dataclass(frozen=True)
class PathCounts:
    """Per-path hit counts accumulated by the counted kernels."""

    byte_draws: int
    common: int
    overhang_fast: int
    band_evals: int
    tail: int
    box_attempts: int

    @classmethod
    def from_array(cls, arr) -> "PathCounts":
        return cls(*(int(v) for v in arr))

    @property
    def common_fraction(self) -> float:
        return self.common / self.byte_draws if self.byte_draws else 0.0

    @property
    def tail_fraction(self) -> float:
        return self.tail / self.byte_draws if self.byte_draws else 0.0

    @property
    def band_eval_fraction(self) -> float:
        """Fraction of overhang box attempts that needed a density evaluation."""
        return self.band_evals / self.box_attempts if self.box_attempts else 0.0
