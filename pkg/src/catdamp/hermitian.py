"""Small dense Hermitian eigen-solver built on cyclic complex Jacobi rotations.

Every routine accepts a single ``(n, n)`` matrix or a stack ``(..., n, n)``.
Stacks are processed together, but each matrix is rotated only while it is
still unconverged, so a result never depends on what else is in the batch.
"""
from dataclasses import dataclass, field

import numpy as np

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
# sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1)
SIGMA_YY = np.real(np.kron(SIGMA_Y, SIGMA_Y))

HERMITIAN_TOL = 1e-10


class EigenConvergenceError(ArithmeticError):
    """Raised when Jacobi sweeps fail to reach the off-diagonal threshold."""

    def __init__(self, message, off_norm=None, sweeps=None):
        super().__init__(message)
        self.off_norm = off_norm
        self.sweeps = sweeps


@dataclass
class EigenResult:
    """Eigenvalues in descending order and matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0
    off_history: list = field(default_factory=list, repr=False)


def adjoint(a):
    return np.conj(np.swapaxes(a, -1, -2))


def conjugate(a):
    return np.conj(a)


def matmul(a, b):
    return np.matmul(a, b)


def _off_norm(a):
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=-1))


def eig_hermitian(h, tol=1e-14, max_sweeps=100):
    """Diagonalise Hermitian matrices with cyclic-by-rows Jacobi sweeps.

    Parameters
    ----------
    h : array_like, shape (..., n, n)
        Hermitian input; deviations up to ``1e-10`` are symmetrised away.
    tol : float
        Relative stopping threshold on the off-diagonal Frobenius norm.
    max_sweeps : int
        Hard bound on the number of full sweeps.

    Returns
    -------
    EigenResult
        ``eigenvalues`` sorted descending along the last axis and
        ``eigenvectors`` with ``h @ V = V @ diag(eigenvalues)``.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("matrix has non-finite entries")
    batch_shape = h.shape[:-2]
    n = h.shape[-1]
    a = h.reshape((-1, n, n)).copy()
    skew = np.abs(a - adjoint(a)).max(axis=(-1, -2)) if a.size else np.zeros(0)
    scale = np.linalg.norm(a, axis=(-1, -2))
    if np.any(skew > HERMITIAN_TOL * np.maximum(1.0, scale)):
        raise ValueError(f"matrix is not Hermitian (max skew {skew.max():.3e})")
    a = 0.5 * (a + adjoint(a))
    v = np.broadcast_to(np.eye(n, dtype=complex), a.shape).copy()

    threshold = tol * scale
    off = _off_norm(a)
    history = [off.copy()]
    active = off > threshold
    sweeps = 0
    while active.any():
        if sweeps >= max_sweeps:
            raise EigenConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off[active].max():.3e}, "
                f"threshold {threshold[active].max():.3e})",
                off_norm=off, sweeps=sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                mag = np.abs(a[:, p, q])
                idx = np.nonzero(active & (mag > 0.0))[0]
                if idx.size == 0:
                    continue
                _rotate(a, v, idx, p, q, mag[idx])
        sweeps += 1
        off = _off_norm(a)
        history.append(off.copy())
        active = off > threshold

    w = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    order = np.argsort(-w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return EigenResult(w.reshape(batch_shape + (n,)),
                       v.reshape(batch_shape + (n, n)),
                       sweeps, history)


def _rotate(a, v, idx, p, q, mag):
    sub = a[idx]
    app = sub[:, p, p].real
    aqq = sub[:, q, q].real
    phase = np.exp(1j * np.angle(sub[:, p, q]))
    tau = (aqq - app) / (2.0 * mag)
    sign = np.where(tau >= 0.0, 1.0, -1.0)
    with np.errstate(over="ignore"):
        # huge tau means a negligible rotation; t then rounds to 0
        t = sign / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    # G = diag(1, e^{-i phi}) @ [[c, s], [-s, c]] acting on the (p, q) plane
    g00 = c
    g01 = s
    g10 = -s * np.conj(phase)
    g11 = c * np.conj(phase)

    colp = sub[:, :, p].copy()
    colq = sub[:, :, q].copy()
    sub[:, :, p] = colp * g00[:, None] + colq * g10[:, None]
    sub[:, :, q] = colp * g01[:, None] + colq * g11[:, None]
    rowp = sub[:, p, :].copy()
    rowq = sub[:, q, :].copy()
    sub[:, p, :] = np.conj(g00)[:, None] * rowp + np.conj(g10)[:, None] * rowq
    sub[:, q, :] = np.conj(g01)[:, None] * rowp + np.conj(g11)[:, None] * rowq
    sub[:, p, q] = 0.0
    sub[:, q, p] = 0.0
    sub[:, p, p] = sub[:, p, p].real
    sub[:, q, q] = sub[:, q, q].real
    a[idx] = sub

    vs = v[idx]
    colp = vs[:, :, p].copy()
    colq = vs[:, :, q].copy()
    vs[:, :, p] = colp * g00[:, None] + colq * g10[:, None]
    vs[:, :, q] = colp * g01[:, None] + colq * g11[:, None]
    v[idx] = vs


def eigvals_hermitian(h, **kwargs):
    return eig_hermitian(h, **kwargs).eigenvalues


def sqrt_psd(rho, neg_tol=1e-10):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-neg_tol, 0)`` are clamped to zero; anything more
    negative means the input is not PSD and raises ``ValueError``.
    """
    res = eig_hermitian(rho)
    lam = res.eigenvalues
    if np.any(lam < -neg_tol):
        raise ValueError(f"matrix is not PSD (min eigenvalue {lam.min():.3e})")
    root = np.sqrt(np.clip(lam, 0.0, None))
    vecs = res.eigenvectors
    return matmul(vecs * root[..., None, :], adjoint(vecs))


def singular_values(m):
    """Singular values of square matrices via the Hermitian dilation.

    The eigenvalues of ``[[0, M], [M^H, 0]]`` are ``+/- sigma_i``; reading the
    top half avoids squaring, so small singular values keep absolute accuracy
    of order ``eps * ||M||`` instead of ``sqrt(eps)``.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[-1]
    dil = np.zeros(m.shape[:-2] + (2 * n, 2 * n), dtype=complex)
    dil[..., :n, n:] = m
    dil[..., n:, :n] = adjoint(m)
    lam = eig_hermitian(dil).eigenvalues
    return np.clip(lam[..., :n], 0.0, None)
