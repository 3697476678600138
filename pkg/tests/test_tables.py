"""Layer-solver geometry, overhang masses, and the epsilon band."""

import math

import mpmath
import numpy as np
import pytest

from zigfast import (
    CurvatureViolation,
    build_tables,
    compute_epsilon,
    default_tables,
    overhang_areas,
    solve_layers,
    verify_tables,
)
from zigfast.densities import EXPONENTIAL, HALF_NORMAL, exponential, get, half_normal
from zigfast.tables import ZigguratTables, box_epsilon, quadrature_overhang_areas


@pytest.mark.parametrize("kind,l_max", [(EXPONENTIAL, 252), (HALF_NORMAL, 253)])
def test_layer_counts_256(kind, l_max):
    assert default_tables(kind).l_max == l_max


@pytest.mark.parametrize("kind", [EXPONENTIAL, HALF_NORMAL])
def test_layer_geometry_invariants(kind):
    t = default_tables(kind)
    spec = get(kind)
    slot = t.slot_area

    assert np.all(np.diff(t.x) < 0.0)
    assert np.all(np.diff(t.f) > 0.0)
    assert t.f[0] == 0.0 and t.f[-1] < 1.0
    # every layer is exactly one slot of area
    areas = t.x[1:] * np.diff(t.f)
    np.testing.assert_allclose(areas, slot, rtol=1e-12)
    # corners sit on the density
    for k in range(1, t.l_max + 1):
        assert spec.density(t.x[k]) == pytest.approx(t.f[k], abs=1e-13)


@pytest.mark.parametrize("kind", [EXPONENTIAL, HALF_NORMAL])
def test_slot_masses_match_quadrature(kind):
    t = default_tables(kind)
    spec = get(kind)
    closed = overhang_areas(spec, t)
    quad = quadrature_overhang_areas(spec, t)
    np.testing.assert_allclose(closed, quad, rtol=0, atol=1e-12)
    np.testing.assert_allclose(t.a, closed / closed.sum(), rtol=0, atol=1e-15)
    assert t.a.sum() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("kind", [EXPONENTIAL, HALF_NORMAL])
def test_mass_conservation(kind):
    t = default_tables(kind)
    raw = overhang_areas(get(kind), t)
    total = t.l_max * t.slot_area + raw.sum()
    assert total == pytest.approx(t.total_mass, rel=1e-12)


@pytest.mark.parametrize("kind", [EXPONENTIAL, HALF_NORMAL])
@pytest.mark.parametrize("i_max", [16, 64, 256])
def test_verify_clean_at_multiple_sizes(kind, i_max):
    t = build_tables(kind, i_max)
    assert verify_tables(t) == []


def test_verify_catches_tampering(exp_tables):
    x = exp_tables.x.copy()
    x[40] *= 1.0 + 1e-6
    bad = ZigguratTables(
        distribution=exp_tables.distribution,
        i_max=exp_tables.i_max,
        l_max=exp_tables.l_max,
        total_mass=exp_tables.total_mass,
        x=x,
        f=exp_tables.f,
        a=exp_tables.a,
        epsilon_max=exp_tables.epsilon_max,
    )
    assert verify_tables(bad)


def test_imax_validation():
    with pytest.raises(ValueError):
        build_tables(EXPONENTIAL, 100)
    with pytest.raises(ValueError):
        build_tables(EXPONENTIAL, 1)
    with pytest.raises(ValueError):
        solve_layers(exponential(), 256, tol=0.0)


def test_unknown_kind():
    with pytest.raises(ValueError):
        build_tables("cauchy")


def test_sentinel_never_touches_sampling(exp_tables):
    # x[0] is a finite stand-in for +inf; it only needs to keep the array
    # strictly decreasing
    assert exp_tables.x[0] > exp_tables.x[1]


def test_box_bounds_and_area(exp_tables):
    t = exp_tables
    xl, xr, fb, ft = t.box_bounds(1)
    assert (xl, xr) == (t.x[2], t.x[1])
    assert (fb, ft) == (t.f[1], t.f[2])
    assert t.box_area(1) == (xr - xl) * (ft - fb)
    # cap box reaches the peak
    xl, xr, fb, ft = t.box_bounds(t.l_max)
    assert xl == 0.0 and ft == 1.0
    with pytest.raises(IndexError):
        t.box_bounds(0)
    with pytest.raises(IndexError):
        t.box_bounds(t.l_max + 1)


def test_epsilon_exponential_value(exp_tables):
    # high-precision oracle for the worst box, via mpmath maximization of
    # (1 - t) - (exp(-(xl + t w)) - fb)/h over each box
    spec = exponential()
    worst = mpmath.mpf(0)
    for j in range(1, exp_tables.l_max + 1):
        xl, xr, fb, ft = (mpmath.mpf(v) for v in exp_tables.box_bounds(j))
        w, h = xr - xl, ft - fb
        gap = lambda t: (1 - t) - (mpmath.exp(-(xl + t * w)) - fb) / h
        # stationary point: exp(-(xl+tw)) * w/h = 1
        t_star = (-mpmath.log(h / w) - xl) / w
        cand = [gap(mpmath.mpf(0)), gap(mpmath.mpf(1))]
        if 0 < t_star < 1:
            cand.append(gap(t_star))
        worst = max(worst, max(cand))
    assert exp_tables.epsilon_max == pytest.approx(float(worst), abs=1e-12)
    assert compute_epsilon(spec, exp_tables) == exp_tables.epsilon_max


def test_epsilon_zero_for_half_normal(hn_tables):
    # half-normal boxes use plain rejection; no band is stored
    assert hn_tables.epsilon_max == 0.0


def test_box_epsilon_rejects_concave_curve():
    # a curve bulging above its chord has no sound fast-accept region
    bulge = lambda x: 1.0 - x * x
    with pytest.raises(CurvatureViolation):
        box_epsilon(bulge, 0.0, 1.0, 0.0, 1.0)


def test_compute_epsilon_requires_convexity(hn_tables):
    with pytest.raises(CurvatureViolation):
        compute_epsilon(half_normal(), hn_tables)


def test_default_tables_cached():
    assert default_tables(EXPONENTIAL) is default_tables(EXPONENTIAL)


def test_density_specs_consistent():
    for spec in (exponential(), half_normal()):
        assert spec.density(0.0) == 1.0
        assert spec.cdf_complement(0.0) == pytest.approx(spec.total_mass)
        for f in (0.9, 0.5, 0.1, 1e-6):
            assert spec.density(spec.inverse(f)) == pytest.approx(f, rel=1e-12)
        xs = np.linspace(0.0, 3.0, 7)
        np.testing.assert_allclose(spec.density_vec(xs), [spec.density(x) for x in xs])
    assert half_normal().total_mass == pytest.approx(math.sqrt(math.pi / 2))
