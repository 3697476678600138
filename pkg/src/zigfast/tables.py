"""Layer geometry for the under-the-curve ziggurat.

Layers are solved bottom-up: layer k is the rectangle
``[0, X[k]] x [F[k-1], F[k]]`` whose upper-right corner sits on the density,
and every layer has area ``total_mass / i_max`` exactly.  Construction stops
when no further full layer fits; whatever mass remains is split into the tail
(right of ``X[1]``), one bounded overhang box per layer boundary, and the cap
above the top layer.

Slot convention used throughout (``l_max + 1`` slots):

* slot 0        -- unbounded tail, ``x >= X[1]``
* slot j        -- bounded box ``[X[j+1], X[j]] x [F[j], F[j+1]]`` for
                   ``1 <= j <= l_max - 1``
* slot ``l_max``-- cap box ``[0, X[l_max]] x [F[l_max], 1]``

The cap reuses the bounded-box machinery by extending the X/F arrays with a
virtual right edge at 0 and a virtual height of ``density(0) == 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, optimize

from .densities import DensitySpec, EXPONENTIAL, get
from .errors import CurvatureViolation, InvalidSpec, NonConvergence, QuadratureFailure

TWO_NEG_64 = 2.0 ** -64

# X[0] is conceptually +inf and is never read by any sampling path; a finite
# sentinel keeps the array strictly decreasing and serializable.
_SENTINEL_FACTOR = 2.0


@dataclass(frozen=True)
class ZigguratTables:
    """Precomputed geometry for one distribution.

    ``x``/``f`` have length ``l_max + 1`` (index 0 is the sentinel / zero
    height), ``a`` holds the ``l_max + 1`` slot masses normalized to sum to 1.
    ``scaled_x``/``scaled_f`` are the same tables pre-multiplied by 2**-64 for
    the integer-word fast path.
    """

    distribution: str
    i_max: int
    l_max: int
    total_mass: float
    x: np.ndarray
    f: np.ndarray
    a: np.ndarray
    epsilon_max: float
    scaled_x: np.ndarray = field(init=False, repr=False)
    scaled_f: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=np.float64))
        object.__setattr__(self, "f", np.asarray(self.f, dtype=np.float64))
        object.__setattr__(self, "a", np.asarray(self.a, dtype=np.float64))
        object.__setattr__(self, "scaled_x", self.x * TWO_NEG_64)
        object.__setattr__(self, "scaled_f", self.f * TWO_NEG_64)

    # Extended arrays with the virtual cap edge appended, so bounded box j
    # always spans [x_ext[j+1], x_ext[j]] x [f_ext[j], f_ext[j+1]].
    @property
    def x_ext(self) -> np.ndarray:
        return np.append(self.x, 0.0)

    @property
    def f_ext(self) -> np.ndarray:
        return np.append(self.f, 1.0)

    @property
    def slot_area(self) -> float:
        return self.total_mass / self.i_max

    def box_bounds(self, j: int) -> tuple[float, float, float, float]:
        """(x_left, x_right, f_bottom, f_top) of bounded overhang box j."""
        if not 1 <= j <= self.l_max:
            raise IndexError(f"bounded box index out of range: {j}")
        xe, fe = self.x_ext, self.f_ext
        return xe[j + 1], xe[j], fe[j], fe[j + 1]

    def box_area(self, j: int) -> float:
        xl, xr, fb, ft = self.box_bounds(j)
        return (xr - xl) * (ft - fb)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZigguratTables):
            return NotImplemented
        return (
            self.distribution == other.distribution
            and self.i_max == other.i_max
            and self.l_max == other.l_max
            and self.total_mass == other.total_mass
            and self.epsilon_max == other.epsilon_max
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.f, other.f)
            and np.array_equal(self.a, other.a)
        )


def _bisect_to_ulp(fn, lo: float, hi: float) -> float:
    """Bisection run until the bracket has no representable midpoint."""
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NonConvergence(f"no sign change on [{lo!r}, {hi!r}]")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return hi if abs(fhi) < abs(flo) else lo
        fmid = fn(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid


def _largest_root(gap, hi: float) -> float | None:
    """Largest root of ``gap`` in (0, hi), or None if gap never goes positive.

    ``gap`` is unimodal on (0, hi) with gap(0) < 0 and gap(hi) < 0; ternary
    search locates the peak, then bisection takes the right branch so layers
    come out long and thin.
    """
    lo = 0.0
    a, b = lo, hi
    for _ in range(200):
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        if gap(m1) < gap(m2):
            a = m1
        else:
            b = m2
        if b - a <= 1e-14 * max(1.0, b):
            break
    peak = 0.5 * (a + b)
    if gap(peak) <= 0.0:
        return None
    return _bisect_to_ulp(gap, peak, hi)


def _check_monotone(spec: DensitySpec) -> None:
    hi = spec.inverse(1e-12)
    xs = np.linspace(0.0, hi, 1024)
    ps = np.array([spec.density(x) for x in xs])
    if ps[0] != 1.0 or np.any(np.diff(ps) >= 0.0):
        raise InvalidSpec(f"density for {spec.kind!r} is not strictly decreasing from 1")


def solve_layers(spec: DensitySpec, i_max: int, tol: float = 1e-12) -> ZigguratTables:
    """Solve the full layer stack and return complete tables.

    Each layer solves ``x * (P(x) - f_prev) = total_mass / i_max`` for the
    larger root by bisection; construction stops when the equation has no
    root.  Overhang masses and (for convex densities) the rejection band are
    filled in via :func:`overhang_areas` and :func:`compute_epsilon`.
    """
    if i_max < 2 or i_max & (i_max - 1):
        raise ValueError(f"i_max must be a power of two >= 2, got {i_max}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    _check_monotone(spec)

    slot = spec.total_mass / i_max
    xs = [math.nan]  # sentinel placeholder, patched below
    fs = [0.0]
    upper = spec.inverse(min(slot, 0.5))  # any point right of the first root
    while True:
        f_prev = fs[-1]
        if f_prev >= 1.0:
            break
        gap = lambda x, c=f_prev: x * (spec.density(x) - c) - slot
        hi = spec.inverse(f_prev) if f_prev > 0.0 else max(upper, 4.0 * abs(math.log(slot)))
        root = _largest_root(gap, hi)
        if root is None:
            break
        xs.append(root)
        fs.append(spec.density(root))

    l_max = len(xs) - 1
    if l_max < 1:
        raise NonConvergence("no layers fit under the density")
    xs[0] = _SENTINEL_FACTOR * xs[1]

    x = np.array(xs)
    f = np.array(fs)
    areas = x[1:] * np.diff(f)
    if np.max(np.abs(areas - slot)) > tol * max(1.0, slot):
        raise NonConvergence("layer areas drifted beyond tolerance")

    partial = ZigguratTables(
        distribution=spec.kind,
        i_max=i_max,
        l_max=l_max,
        total_mass=spec.total_mass,
        x=x,
        f=f,
        a=np.zeros(l_max + 1),
        epsilon_max=0.0,
    )
    raw = overhang_areas(spec, partial)
    eps = compute_epsilon(spec, partial) if spec.convex else 0.0
    return ZigguratTables(
        distribution=spec.kind,
        i_max=i_max,
        l_max=l_max,
        total_mass=spec.total_mass,
        x=x,
        f=f,
        a=raw / raw.sum(),
        epsilon_max=eps,
    )


def overhang_areas(spec: DensitySpec, tables: ZigguratTables) -> np.ndarray:
    """Unnormalized slot masses: tail, bounded boxes, cap.

    Uses the density's exact complementary integral; every mass is the curve
    area above the slot's floor height.
    """
    comp = spec.cdf_complement
    xe = tables.x_ext
    fe = tables.f_ext
    out = np.empty(tables.l_max + 1)
    out[0] = comp(xe[1])
    for j in range(1, tables.l_max + 1):
        out[j] = (comp(xe[j + 1]) - comp(xe[j])) - (xe[j] - xe[j + 1]) * fe[j]
    if np.any(out < -1e-15 * spec.total_mass):
        raise QuadratureFailure("negative overhang mass; tables inconsistent with density")
    return np.maximum(out, 0.0)


def quadrature_overhang_areas(spec: DensitySpec, tables: ZigguratTables,
                              tol: float = 1e-9) -> np.ndarray:
    """Adaptive-quadrature oracle for :func:`overhang_areas`.

    ``tol`` bounds the quadrature's own reported error estimate, which is
    conservative; the closed-form masses agree with these values far more
    tightly than the estimate suggests.
    """
    xe = tables.x_ext
    fe = tables.f_ext
    out = np.empty(tables.l_max + 1)
    val, err = integrate.quad(spec.density, xe[1], np.inf,
                              epsabs=1e-13, epsrel=1e-13)
    if err > tol:
        raise QuadratureFailure(f"tail integral error {err:g} exceeds {tol:g}")
    out[0] = val
    for j in range(1, tables.l_max + 1):
        val, err = integrate.quad(lambda x: spec.density(x) - fe[j], xe[j + 1], xe[j],
                                  epsabs=1e-13, epsrel=1e-13)
        if err > tol:
            raise QuadratureFailure(f"box {j} integral error {err:g} exceeds {tol:g}")
        out[j] = val
    return out


def box_epsilon(pdf, xl: float, xr: float, fb: float, ft: float,
                pdf_vec=None) -> float:
    """Max vertical gap, in box-normalized units, between the chord and the curve.

    The chord joins (xl, ft) to (xr, fb); in unit coordinates it is the
    anti-diagonal ``1 - t``.  Raises CurvatureViolation if the curve pokes
    above the chord anywhere (the decomposition then has no sound fast-accept
    region).
    """
    width = xr - xl
    height = ft - fb

    def gap(t: float) -> float:
        return (1.0 - t) - (pdf(xl + t * width) - fb) / height

    res = optimize.minimize_scalar(
        lambda t: -gap(t), bounds=(0.0, 1.0), method="bounded",
        options={"xatol": 1e-13},
    )
    eps = max(gap(0.0), gap(1.0), gap(res.x))
    grid = np.linspace(0.0, 1.0, 4097)
    if pdf_vec is None:
        curve = np.array([pdf(xl + t * width) for t in grid])
    else:
        curve = pdf_vec(xl + grid * width)
    gaps = (1.0 - grid) - (curve - fb) / height
    if gaps.min() < -1e-9:
        raise CurvatureViolation("chord dips below the density inside an overhang box")
    return max(eps, float(gaps.max()))


def compute_epsilon(spec: DensitySpec, tables: ZigguratTables) -> float:
    """Widest rejection band over all bounded boxes, including the cap."""
    worst = 0.0
    for j in range(1, tables.l_max + 1):
        xl, xr, fb, ft = tables.box_bounds(j)
        worst = max(worst, box_epsilon(spec.density, xl, xr, fb, ft,
                                       pdf_vec=spec.density_vec))
    if not 0.0 < worst < 1.0:
        raise CurvatureViolation(f"epsilon out of range: {worst!r}")
    return float(worst)


def verify_tables(tables: ZigguratTables, tol: float = 1e-9) -> list[str]:
    """Re-derive every stored quantity from the density; return violations."""
    spec = get(tables.distribution)
    problems: list[str] = []
    slot = tables.slot_area

    if np.any(np.diff(tables.x) >= 0.0):
        problems.append("x is not strictly decreasing")
    if np.any(np.diff(tables.f) <= 0.0):
        problems.append("f is not strictly increasing")
    if tables.f[-1] >= 1.0:
        problems.append("top layer height reaches the density peak")

    areas = tables.x[1:] * np.diff(tables.f)
    bad = np.abs(areas - slot) > tol * max(1.0, slot)
    if bad.any():
        problems.append(f"{bad.sum()} layer(s) deviate from slot area {slot:g}")

    for k in range(1, tables.l_max + 1):
        if abs(spec.density(tables.x[k]) - tables.f[k]) > tol:
            problems.append(f"f[{k}] does not equal density(x[{k}])")
            break

    raw = quadrature_overhang_areas(spec, tables)
    total = tables.l_max * slot + raw.sum()
    if abs(total - tables.total_mass) > 1e-9 * tables.total_mass:
        problems.append(f"mass not conserved: {total!r} vs {tables.total_mass!r}")
    norm = raw / raw.sum()
    if np.max(np.abs(norm - tables.a)) > 1e-9:
        problems.append("stored slot masses disagree with quadrature")

    if spec.convex:
        eps = compute_epsilon(spec, tables)
        if abs(eps - tables.epsilon_max) > 1e-9:
            problems.append(f"epsilon_max mismatch: {eps!r} vs {tables.epsilon_max!r}")
    return problems


def build_tables(kind: str, i_max: int = 256, tol: float = 1e-12) -> ZigguratTables:
    """Convenience wrapper: solve tables for a named distribution."""
    return solve_layers(get(kind), i_max, tol)


_DEFAULT_CACHE: dict[str, ZigguratTables] = {}


def default_tables(kind: str) -> ZigguratTables:
    """The shipped i_max=256 fixture for ``kind`` (built on demand if absent)."""
    if kind not in _DEFAULT_CACHE:
        from importlib import resources

        from . import tableio

        name = f"{kind}_256.json"
        try:
            data = resources.files("zigfast.data").joinpath(name).read_bytes()
            _DEFAULT_CACHE[kind] = tableio.from_json_bytes(data)
        except FileNotFoundError:
            _DEFAULT_CACHE[kind] = build_tables(kind)
    return _DEFAULT_CACHE[kind]
