"""Normal sampler: sign handling, determinism, tail, and distribution checks."""

import numpy as np
import pytest
from scipy import stats

from zigfast import NormalSampler
from zigfast.uniform import UniformSource

GOLDEN_SEED7 = [
    0.22612838171099861,
    0.88945758308515721,
    -0.91723712988337558,
    1.7531374769622967,
    -0.11601284545578643,
]


def test_golden_first_draws(normal_sampler):
    assert [normal_sampler.sample() for _ in range(5)] == GOLDEN_SEED7


def test_fill_matches_scalar_draws(hn_tables):
    a = NormalSampler(tables=hn_tables, source=UniformSource(7))
    b = NormalSampler(tables=hn_tables, source=UniformSource(7))
    block = a.fill(3000)
    singles = np.array([b.sample() for _ in range(3000)])
    np.testing.assert_array_equal(block, singles)


def test_counted_paths_are_bit_identical(hn_tables):
    a = NormalSampler(tables=hn_tables, source=UniformSource(7))
    b = NormalSampler(tables=hn_tables, source=UniformSource(7))
    c = NormalSampler(tables=hn_tables, source=UniformSource(7))
    n = 3000
    plain = a.fill(n)
    counted = b.fill_counted(n)
    singles = np.array([c.sample_counted() for _ in range(n)])
    np.testing.assert_array_equal(plain, counted)
    np.testing.assert_array_equal(plain, singles)
    assert b.counters.tolist() == c.counters.tolist()


def test_aggregate_equals_sequential_sum(hn_tables):
    a = NormalSampler(tables=hn_tables, source=UniformSource(11))
    b = NormalSampler(tables=hn_tables, source=UniformSource(11))
    total = a.aggregate(20000)
    acc = 0.0
    for v in b.fill(20000):
        acc += v
    assert total == acc


def test_replay_common_path_and_sign(hn_tables):
    # signed word: bit 63 is the sign, the same word is the magnitude at
    # scale 2^-63; low byte 0 selects the bottom layer
    word = 123456789 << 8
    s = NormalSampler(tables=hn_tables, source=UniformSource.replay([word]))
    want = np.float64(word) * hn_tables.x[1] * 2.0 ** -63
    assert s.sample() == want
    neg = (1 << 63) | word
    s = NormalSampler(tables=hn_tables, source=UniformSource.replay([neg]))
    got = s.sample()
    assert got < 0.0
    assert got == np.float64(np.int64(np.uint64(neg))) * hn_tables.x[1] * 2.0 ** -63


def test_sign_symmetry(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(21))
    vals = s.fill(400_000)
    frac_neg = (vals < 0.0).mean()
    assert frac_neg == pytest.approx(0.5, abs=0.005)


def test_counter_bookkeeping(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(3))
    n = 200_000
    s.fill_counted(n)
    c = s.path_counts
    assert c.byte_draws == n
    assert c.box_attempts >= c.band_evals
    assert 0.98 < c.common_fraction < 0.995
    assert c.tail > 0


def test_tail_fraction_matches_tables(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(5))
    n = 2_000_000
    s.fill_counted(n)
    c = s.path_counts
    want = (hn_tables.i_max - hn_tables.l_max) / hn_tables.i_max * float(hn_tables.a[0])
    se = (want * (1.0 - want) / n) ** 0.5
    assert abs(c.tail_fraction - want) < 4.0 * se


def test_tail_values_exceed_tail_start(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(17))
    vals = s.fill(2_000_000)
    extreme = np.abs(vals) > s.tail_start
    # Marsaglia tail transform only ever lands right of X[1]
    assert extreme.sum() > 0
    assert np.abs(vals).max() > s.tail_start


def test_overhang_attempt_plain_rejection(normal_sampler):
    t = normal_sampler.tables
    j = 20
    xl, xr, fb, ft = t.box_bounds(j)
    ok, x, evaluated = normal_sampler.overhang_attempt(j, 0.2, 0.01)
    assert evaluated  # plain rejection always evaluates
    xx = xl + 0.2 * (xr - xl)
    assert ok == (fb + 0.01 * (ft - fb) < np.exp(-0.5 * xx * xx))
    if ok:
        assert x == xx
    ok, x, _ = normal_sampler.overhang_attempt(j, 0.99, 0.999)
    assert not ok and x is None
    with pytest.raises(IndexError):
        normal_sampler.overhang_attempt(0, 0.5, 0.5)


def test_one_sample_ks_against_true_cdf(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(2024))
    vals = s.fill(200_000)
    res = stats.kstest(vals, "norm")
    assert res.pvalue > 0.001


def test_moments_sane(hn_tables):
    s = NormalSampler(tables=hn_tables, source=UniformSource(8))
    vals = s.fill(500_000)
    assert vals.mean() == pytest.approx(0.0, abs=0.01)
    assert (vals ** 2).mean() == pytest.approx(1.0, abs=0.01)
    assert (vals ** 3).mean() == pytest.approx(0.0, abs=0.05)


def test_rejects_wrong_tables(exp_tables):
    with pytest.raises(ValueError):
        NormalSampler(tables=exp_tables)
