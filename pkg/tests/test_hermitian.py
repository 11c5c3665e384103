import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from catdamp.hermitian import (EigenConvergenceError, eig_hermitian, eigvals_hermitian,
                               singular_values, sqrt_psd)


def random_hermitian(rng, count, n=4):
    a = rng.normal(size=(count, n, n)) + 1j * rng.normal(size=(count, n, n))
    return 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))


def test_thousand_random_matrices():
    rng = np.random.default_rng(7)
    h = random_hermitian(rng, 1000)
    res = eig_hermitian(h)
    v, lam = res.eigenvectors, res.eigenvalues
    scale = np.linalg.norm(h, axis=(-1, -2))
    resid = np.linalg.norm(h @ v - v * lam[:, None, :], axis=(-1, -2)) / scale
    assert resid.max() < 1e-12
    unit = np.conj(np.swapaxes(v, -1, -2)) @ v - np.eye(4)
    assert np.abs(unit).max() < 1e-12
    # trace and determinant survive
    assert np.allclose(lam.sum(axis=1), np.trace(h, axis1=1, axis2=2).real, atol=1e-12)
    assert np.allclose(lam.prod(axis=1), np.linalg.det(h).real, rtol=1e-10, atol=1e-12)
    # matches numpy, which is the independent side here
    assert np.abs(lam - np.linalg.eigvalsh(h)[:, ::-1]).max() < 1e-12


def test_sorted_descending_and_off_norm_falls():
    rng = np.random.default_rng(1)
    res = eig_hermitian(random_hermitian(rng, 50))
    assert np.all(np.diff(res.eigenvalues, axis=-1) <= 0)
    hist = np.array(res.off_history)
    assert np.all(np.diff(hist, axis=0) <= 1e-13)


def test_diagonal_input_needs_no_sweep():
    res = eig_hermitian(np.diag([3.0, -1.0, 2.0, 0.5]))
    assert res.sweeps == 0
    assert np.allclose(res.eigenvalues, [3.0, 2.0, 0.5, -1.0])


def test_degenerate_spectrum():
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    h = q @ np.diag([1.0, 1.0, 1.0, -2.0]) @ q.conj().T
    assert np.allclose(eigvals_hermitian(h), [1, 1, 1, -2], atol=1e-13)


def test_batch_composition_does_not_change_results():
    rng = np.random.default_rng(11)
    h = random_hermitian(rng, 20)
    alone = eig_hermitian(h[5]).eigenvalues
    together = eig_hermitian(h).eigenvalues[5]
    assert np.array_equal(alone, together)


def test_rejects_non_hermitian():
    with pytest.raises(ValueError, match="not Hermitian"):
        eig_hermitian(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        eig_hermitian(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eig_hermitian(np.array([[np.nan, 0], [0, 1.0]]))


def test_sweep_limit():
    rng = np.random.default_rng(2)
    with pytest.raises(EigenConvergenceError) as info:
        eig_hermitian(random_hermitian(rng, 1)[0], max_sweeps=1)
    assert info.value.sweeps == 1


def test_sqrt_psd_squares_back():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
    rho = a @ a.conj().T
    root = sqrt_psd(rho)
    assert np.abs(root @ root - rho).max() < 1e-12
    with pytest.raises(ValueError, match="not PSD"):
        sqrt_psd(np.diag([1.0, -0.1]))


def test_singular_values_small_ones_stay_accurate():
    m = np.diag([1.0, 1e-12, 0.0, 3.0]).astype(complex)
    sv = np.sort(singular_values(m))
    assert np.allclose(sv, [0.0, 1e-12, 1.0, 3.0], atol=1e-15, rtol=0)


finite = st.floats(-10, 10, allow_nan=False)


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, (3, 3), elements=finite), arrays(np.float64, (3, 3), elements=finite))
def test_eigen_decomposition_property(re, im):
    h = (re + re.T) + 1j * (im - im.T)
    res = eig_hermitian(h)
    v, lam = res.eigenvectors, res.eigenvalues
    scale = max(1.0, np.linalg.norm(h))
    assert np.abs(h @ v - v * lam).max() <= 1e-12 * scale
    assert np.abs(v.conj().T @ v - np.eye(3)).max() <= 1e-12
