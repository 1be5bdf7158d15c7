import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from borsuk_lab.algebra import (IndexAction, SampledFunction, apply_grading_operator, check_product_grading,
                                check_root, decompose, eigen_residual, permutation_order, project_component,
                                root_of_unity, root_order)
from borsuk_lab.errors import DimensionError, IncompatibilityError, InvalidRootError


def cyclic_action(m_orbits: int, n: int) -> IndexAction:
    # m_orbits disjoint n-cycles
    perm = np.arange(m_orbits * n).reshape(m_orbits, n)
    return IndexAction(np.roll(perm, -1, axis=1).reshape(-1))


def random_function(rng, size):
    return SampledFunction(rng.normal(size=size) + 1j * rng.normal(size=size))


def test_permutation_order_lcm():
    perm = np.array([1, 2, 0, 4, 3, 5])
    assert permutation_order(perm) == 6


def test_index_action_rejects_non_bijection():
    with pytest.raises(ValueError):
        IndexAction([0, 0, 1])


def test_index_action_declared_order_checked():
    with pytest.raises(ValueError):
        IndexAction([1, 0], order=4)


def test_grading_operator_is_composition():
    f = SampledFunction([10, 20, 30])
    act = IndexAction([1, 2, 0])
    assert np.array_equal(apply_grading_operator(f, act).values, [20, 30, 10])
    assert np.array_equal(apply_grading_operator(f, act, times=3).values, f.values)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        apply_grading_operator(SampledFunction([1, 2]), IndexAction([1, 2, 0]))


@pytest.mark.parametrize("lam, n", [(1.0, 2), (1j, 3), (2.0, 2)])
def test_invalid_roots(lam, n):
    with pytest.raises(InvalidRootError):
        check_root(lam, n)


def test_root_of_unity_snaps_axis_roots():
    assert root_of_unity(1, 2) == -1
    assert root_of_unity(1, 4) == 1j
    assert root_order(root_of_unity(2, 6), 6) == 3


def test_non_primitive_root_rejected_by_decompose():
    act = cyclic_action(3, 4)
    f = SampledFunction(np.arange(12.0))
    with pytest.raises(InvalidRootError):
        decompose(f, act, -1)
    # the single projection is still well defined
    g = project_component(f, act, 1, -1)
    assert eigen_residual(g, act, -1) < 1e-12


def test_dense_projection_oracle(rng):
    """Projections agree with spectral projectors of the explicit permutation matrix."""
    n = 4
    act = cyclic_action(5, n)
    m = act.size
    tmat = np.zeros((m, m))
    tmat[np.arange(m), act.permutation] = 1.0          # (T f)[i] = f[perm[i]]
    lam = root_of_unity(1, n)
    evals, evecs = np.linalg.eig(tmat)
    f = random_function(rng, m)
    dec = decompose(f, act, lam)
    for j in range(n):
        mask = np.abs(evals - lam**j) < 1e-8
        v = evecs[:, mask]
        # oblique projector from the eigenbasis: coefficients of f in the full basis
        coef = np.linalg.solve(evecs, f.values)
        oracle = v @ coef[mask]
        assert np.max(np.abs(dec.components[j].values - oracle)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([2, 3, 4, 6]), orbits=st.integers(1, 6), seed=st.integers(0, 2**32 - 1))
def test_projection_properties(n, orbits, seed):
    rng = np.random.default_rng(seed)
    act = cyclic_action(orbits, n)
    lam = root_of_unity(1, n)
    f = random_function(rng, act.size)
    scale = 1 + f.sup_norm()
    dec = decompose(f, act, lam)
    assert dec.reconstruction_residual(f) < 1e-12 * scale
    for j, c in enumerate(dec.components):
        again = project_component(c, act, j, lam)
        assert np.max(np.abs(again.values - c.values)) < 1e-12 * scale
        assert eigen_residual(c, act, lam**j) < 1e-10 * scale
        for i in range(n):
            if i != j:
                assert project_component(c, act, i, lam).sup_norm() < 1e-12 * scale


@settings(max_examples=25, deadline=None)
@given(n=st.sampled_from([2, 4]), seed=st.integers(0, 2**32 - 1))
def test_product_grading_property(n, seed):
    rng = np.random.default_rng(seed)
    act = cyclic_action(7, n)
    lam = root_of_unity(1, n)
    d1 = decompose(random_function(rng, act.size), act, lam)
    d2 = decompose(random_function(rng, act.size), act, lam)
    rep = check_product_grading(d1, d2, act)
    assert rep.passed and rep.max_residual < 1e-10


def test_product_grading_incompatible():
    a4, a2 = cyclic_action(2, 4), cyclic_action(4, 2)
    f = SampledFunction(np.arange(8.0))
    with pytest.raises(IncompatibilityError):
        check_product_grading(decompose(f, a4, 1j), decompose(f, a2, -1), a4)


def test_sampled_function_rejects_nan():
    with pytest.raises(ValueError):
        SampledFunction([1.0, np.nan])


def test_sampled_function_is_read_only():
    f = SampledFunction([1, 2])
    with pytest.raises(ValueError):
        f.values[0] = 5
