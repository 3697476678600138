"""Alias table construction and exactness."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zigfast import EmptyWeights, build_alias


def test_uniform_weights_are_trivial():
    t = build_alias([1.0] * 8)
    assert t.size == 8
    assert np.all(t.prob == 1.0)


def test_exact_probabilities_recover_weights():
    w = np.array([0.5, 0.2, 0.2, 0.05, 0.05])
    t = build_alias(w)
    np.testing.assert_allclose(t.exact_probabilities(), w, rtol=0, atol=1e-15)


def test_sample_matches_exact_probabilities():
    w = [3.0, 1.0, 0.0, 4.0]
    t = build_alias(w)
    # enumerate a fine grid of the two uniforms; empirical law must converge
    # to exact_probabilities without any randomness
    m = 400
    counts = np.zeros(4)
    for ui in (np.arange(m) + 0.5) / m:
        for up in (np.arange(m) + 0.5) / m:
            counts[t.sample(ui, up)] += 1
    np.testing.assert_allclose(counts / counts.sum(), t.exact_probabilities(), atol=3e-3)


def test_zero_weight_never_drawn():
    t = build_alias([1.0, 0.0, 1.0])
    assert t.exact_probabilities()[1] == 0.0


@given(st.lists(st.floats(min_value=0.0, max_value=1e6), min_size=1, max_size=64)
       .filter(lambda w: sum(w) > 1e-6))
def test_exactness_property(w):
    t = build_alias(w)
    assert np.all(t.prob >= 0.0) and np.all(t.prob <= 1.0)
    assert np.all(t.alias >= 0) and np.all(t.alias < len(w))
    want = np.asarray(w) / sum(w)
    np.testing.assert_allclose(t.exact_probabilities(), want, rtol=0, atol=1e-10)


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        build_alias([])
    with pytest.raises(ValueError):
        build_alias([[1.0, 2.0]])
    with pytest.raises(ValueError):
        build_alias([1.0, -0.5])
    with pytest.raises(ValueError):
        build_alias([1.0, float("nan")])
    with pytest.raises(EmptyWeights):
        build_alias([0.0, 0.0])
