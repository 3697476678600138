"""The two monotone decreasing densities the samplers support.

Both densities are kept unnormalized with peak value 1 at the origin, so the
table builder works directly with geometric areas.  ``cdf_complement`` is the
exact integral of the density on ``[x, inf)`` and doubles as the closed form
the overhang-area computation relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

SQRT_HALF_PI = math.sqrt(math.pi / 2.0)

EXPONENTIAL = "exponential"
HALF_NORMAL = "halfnormal"


@dataclass(frozen=True)
class DensitySpec:
    """A monotone density on [0, inf) together with its exact integrals.

    ``density`` must be strictly decreasing with density(0) == 1, and
    ``inverse`` is its inverse on (0, 1].  ``convex`` marks densities whose
    chords lie above the curve everywhere, which is what the three-region
    overhang decomposition requires.
    """

    kind: str
    density: Callable[[float], float]
    cdf_complement: Callable[[float], float]
    inverse: Callable[[float], float]
    total_mass: float
    convex: bool
    # array-accepting twin of ``density`` for dense-grid checks; math.exp is
    # kept for the scalar path because it is several times faster per call
    density_vec: Callable[[np.ndarray], np.ndarray] = None


def exponential() -> DensitySpec:
    """exp(-x) on [0, inf); mass 1; convex everywhere."""
    return DensitySpec(
        kind=EXPONENTIAL,
        density=lambda x: math.exp(-x),
        cdf_complement=lambda x: math.exp(-x),
        inverse=lambda f: -math.log(f),
        total_mass=1.0,
        convex=True,
        density_vec=lambda x: np.exp(-x),
    )


def half_normal() -> DensitySpec:
    """exp(-x^2/2) on [0, inf); mass sqrt(pi/2); changes curvature at x = 1."""
    return DensitySpec(
        kind=HALF_NORMAL,
        density=lambda x: math.exp(-0.5 * x * x),
        cdf_complement=lambda x: SQRT_HALF_PI * math.erfc(x / math.sqrt(2.0)),
        inverse=lambda f: math.sqrt(-2.0 * math.log(f)),
        total_mass=SQRT_HALF_PI,
        convex=False,
        density_vec=lambda x: np.exp(-0.5 * x * x),
    )


_BY_KIND = {EXPONENTIAL: exponential, HALF_NORMAL: half_normal}


def get(kind: str) -> DensitySpec:
    try:
        return _BY_KIND[kind]()
    except KeyError:
        raise ValueError(f"unknown density kind: {kind!r}") from None
