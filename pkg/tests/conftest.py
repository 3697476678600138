import numpy as np
import pytest

from zigfast import (
    ExpSampler,
    NormalSampler,
    TraditionalExpSampler,
    TraditionalNormalSampler,
    default_tables,
)
from zigfast.densities import EXPONENTIAL, HALF_NORMAL
from zigfast.uniform import UniformSource


@pytest.fixture(scope="session")
def exp_tables():
    return default_tables(EXPONENTIAL)


@pytest.fixture(scope="session")
def hn_tables():
    return default_tables(HALF_NORMAL)


@pytest.fixture
def exp_sampler(exp_tables):
    return ExpSampler(tables=exp_tables, source=UniformSource(7))


@pytest.fixture
def normal_sampler(hn_tables):
    return NormalSampler(tables=hn_tables, source=UniformSource(7))


@pytest.fixture
def trad_exp_sampler():
    return TraditionalExpSampler(source=UniformSource(7))


@pytest.fixture
def trad_normal_sampler():
    return TraditionalNormalSampler(source=UniformSource(7))


def assert_stream_equal(a: np.ndarray, b: np.ndarray):
    __tracebackhide__ = True
    assert a.shape == b.shape
    if not np.array_equal(a, b):
        idx = int(np.flatnonzero(a != b)[0])
        pytest.fail(f"streams diverge at index {idx}: {a[idx]!r} vs {b[idx]!r}")
