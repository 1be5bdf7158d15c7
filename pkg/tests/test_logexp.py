import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from borsuk_lab.algebra import SampledFunction, pointwise_exp, principal_log
from borsuk_lab.errors import NoBranchError


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), angle=st.floats(-np.pi, np.pi))
def test_log_roundtrip_on_hull_avoiding_zero(seed, angle):
    rng = np.random.default_rng(seed)
    # values clustered in a disc not containing 0, rotated to any direction (including across the negative axis)
    vals = np.exp(1j * angle) * (3 + rng.uniform(-1, 1, 30) + 1j * rng.uniform(-1, 1, 30))
    f = SampledFunction(vals)
    h = principal_log(f)
    assert np.max(np.abs(pointwise_exp(h).values - vals)) < 1e-12 * (1 + f.sup_norm())


def test_log_is_continuous_across_negative_axis():
    vals = -2 + 1j * np.linspace(-0.5, 0.5, 11)
    h = principal_log(SampledFunction(vals))
    assert np.max(np.abs(np.diff(h.values.imag))) < 0.2


def test_log_refused_when_hull_contains_zero():
    with pytest.raises(NoBranchError):
        principal_log(SampledFunction([1, -1, 1j]))
