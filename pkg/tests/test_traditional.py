"""Traditional equal-area ziggurat baseline."""

import numpy as np
import pytest
from scipy import stats

from zigfast import (
    TraditionalExpSampler,
    TraditionalNormalSampler,
    solve_traditional,
)
from zigfast.densities import exponential, half_normal
from zigfast.uniform import UniformSource

GOLDEN_EXP_SEED7 = [
    0.15251242197550072,
    0.72345693135302247,
    1.3292620703893605,
    1.1865778989015741,
    1.7335432749258897,
]

GOLDEN_NORMAL_SEED7 = [
    0.22743262333957229,
    0.89875818955456432,
    -0.9216075305818846,
    1.7633235223206458,
    -0.11656456605859367,
]


@pytest.mark.parametrize("spec_fn", [exponential, half_normal])
def test_stack_closes_at_peak(spec_fn):
    spec = spec_fn()
    t = solve_traditional(spec, 256)
    assert t.f[-1] == 1.0
    assert t.x[-1] == 0.0
    assert np.all(np.diff(t.x) < 0.0)
    assert np.all(np.diff(t.f) > 0.0)
    # every strip has area v: base strip counts its tail mass
    assert t.r * t.f[0] + spec.cdf_complement(t.r) == pytest.approx(t.v, rel=1e-12)
    strips = t.x[:-1] * np.diff(t.f)
    np.testing.assert_allclose(strips, t.v, rtol=1e-9)
    # total coverage is exactly i_max strips
    assert t.i_max * t.v >= spec.total_mass


@pytest.mark.parametrize("spec_fn", [exponential, half_normal])
def test_fast_accept_ratios(spec_fn):
    t = solve_traditional(spec_fn(), 256)
    # top layer's inner edge is 0, so its ratio is 0; all others positive
    assert np.all(t.k[:-1] > 0.0) and np.all(t.k <= 1.0)
    assert t.k[-1] == 0.0
    assert 0.97 < t.fast_accept_probability() < 0.99
    edge = t.edge
    assert edge[0] == t.v / t.f[0]
    np.testing.assert_array_equal(edge[1:], t.x[:-1])


def test_imax_validation():
    with pytest.raises(ValueError):
        solve_traditional(exponential(), 100)


def test_golden_first_draws(trad_exp_sampler, trad_normal_sampler):
    assert [trad_exp_sampler.sample() for _ in range(5)] == GOLDEN_EXP_SEED7
    assert [trad_normal_sampler.sample() for _ in range(5)] == GOLDEN_NORMAL_SEED7


@pytest.mark.parametrize("cls", [TraditionalExpSampler, TraditionalNormalSampler])
def test_fill_matches_scalar_draws(cls):
    a = cls(source=UniformSource(7))
    b = cls(source=UniformSource(7))
    c = cls(source=UniformSource(7))
    n = 3000
    block = a.fill(n)
    counted = b.fill_counted(n)
    singles = np.array([c.sample_counted() for _ in range(n)])
    np.testing.assert_array_equal(block, singles)
    np.testing.assert_array_equal(block, counted)
    assert b.counters.tolist() == c.counters.tolist()


@pytest.mark.parametrize("cls", [TraditionalExpSampler, TraditionalNormalSampler])
def test_aggregate_equals_sequential_sum(cls):
    a = cls(source=UniformSource(11))
    b = cls(source=UniformSource(11))
    total = a.aggregate(20000)
    acc = 0.0
    for v in b.fill(20000):
        acc += v
    assert total == acc


def test_fast_accept_fraction_matches_tables():
    s = TraditionalExpSampler(source=UniformSource(9))
    s.fill_counted(1_000_000)
    want = s.tables.fast_accept_probability()
    got = s.fast_accept_fraction()
    se = (want * (1.0 - want) / s.counters[0]) ** 0.5
    assert abs(got - want) < 4.0 * se


def test_one_sample_ks_against_true_cdf():
    vals = TraditionalExpSampler(source=UniformSource(2024)).fill(200_000)
    assert stats.kstest(vals, "expon").pvalue > 0.001
    vals = TraditionalNormalSampler(source=UniformSource(2024)).fill(200_000)
    assert stats.kstest(vals, "norm").pvalue > 0.001


def test_normal_sign_symmetry():
    vals = TraditionalNormalSampler(source=UniformSource(21)).fill(400_000)
    assert (vals < 0.0).mean() == pytest.approx(0.5, abs=0.005)


def test_rejects_mismatched_tables():
    t = solve_traditional(half_normal(), 256)
    with pytest.raises(ValueError):
        TraditionalExpSampler(tables=t)
