"""Wootters concurrence for two-qubit densities, plus the X-state shortcut."""
from dataclasses import dataclass

import numpy as np

from .coherent import TwoModeCatState
from .hermitian import SIGMA_YY, eig_hermitian, singular_values

# eigenvalues of rho this small are rounding noise around an exact zero
RANK_FLOOR = 32 * np.finfo(float).eps
SPECTRUM_CLAMP = 1e-12

_X_MASK = np.zeros((4, 4), dtype=bool)
_X_MASK[np.arange(4), np.arange(4)] = True
_X_MASK[np.arange(4), np.arange(3, -1, -1)] = True


@dataclass(frozen=True)
class XMatrix:
    """Two-qubit density with support on the diagonal and anti-diagonal.

    ``corner_f`` sits at (uu, vv) and ``inner_z`` at (uv, vu); their
    conjugates fill the transposed positions.
    """

    diag_a: float
    diag_b: float
    diag_c: float
    diag_d: float
    corner_f: complex
    inner_z: complex

    def __post_init__(self):
        diag = (self.diag_a, self.diag_b, self.diag_c, self.diag_d)
        if min(diag) < -1e-12:
            raise ValueError(f"negative diagonal entry in {diag}")
        if abs(sum(diag) - 1.0) > 1e-10:
            raise ValueError(f"X matrix trace is {sum(diag)!r}")
        if abs(self.corner_f) ** 2 > self.diag_a * self.diag_d + 1e-12:
            raise ValueError("|f|^2 > a d: X matrix is not positive")
        if abs(self.inner_z) ** 2 > self.diag_b * self.diag_c + 1e-12:
            raise ValueError("|z|^2 > b c: X matrix is not positive")

    def dense(self):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.diag_a, self.diag_b, self.diag_c, self.diag_d
        m[0, 3], m[3, 0] = self.corner_f, np.conj(self.corner_f)
        m[1, 2], m[2, 1] = self.inner_z, np.conj(self.inner_z)
        return m

    @classmethod
    def from_dense(cls, rho, tol=1e-12):
        rho = np.asarray(rho)
        off = np.abs(rho[~_X_MASK]).max()
        if off > tol:
            raise ValueError(f"matrix is not X-shaped (largest off-X entry {off:.3e})")
        return cls(rho[0, 0].real, rho[1, 1].real, rho[2, 2].real, rho[3, 3].real,
                   complex(rho[0, 3]), complex(rho[1, 2]))


def is_x_shaped(rho, tol=1e-12):
    return bool(np.abs(np.asarray(rho)[..., ~_X_MASK]).max() <= tol)


def spin_flip(rho):
    """Time-reversed density (sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    return SIGMA_YY @ np.conj(rho) @ SIGMA_YY


def _root_spectrum(rho):
    # sqrt(lambda_i) of rho rho~ are the singular values of tau = A^T S A with
    # rho = A A^H; this skips the square root of near-zero eigenvalues.
    rho = np.asarray(rho, dtype=complex)
    res = eig_hermitian(rho)
    lam = res.eigenvalues
    if np.any(lam < -1e-10):
        raise ValueError(f"density is not PSD (min eigenvalue {lam.min():.3e})")
    lam = np.where(lam > RANK_FLOOR * np.maximum(1.0, lam[..., :1]), lam, 0.0)
    a = res.eigenvectors * np.sqrt(lam)[..., None, :]
    tau = np.swapaxes(a, -1, -2) @ SIGMA_YY @ a
    return singular_values(tau)


def wootters_spectrum(rho):
    """Eigenvalues of rho rho~ in decreasing order."""
    roots = _root_spectrum(rho)
    return roots * roots


def concurrence(rho):
    """Wootters concurrence ``max(0, r1 - r2 - r3 - r4)``.

    ``rho`` may be a single 4x4 density or a stack of them.  The ``r_i`` are
    the square roots of the eigenvalues of ``rho rho~`` in decreasing order.
    """
    roots = _root_spectrum(rho)
    c = roots[..., 0] - roots[..., 1] - roots[..., 2] - roots[..., 3]
    c = np.clip(c, 0.0, 1.0)
    return float(c) if np.ndim(c) == 0 else c


def concurrence_x(x):
    """Closed form ``2 max(0, |z| - sqrt(a d), |f| - sqrt(b c))``."""
    return float(2.0 * max(0.0,
                           abs(x.inner_z) - np.sqrt(x.diag_a * x.diag_d),
                           abs(x.corner_f) - np.sqrt(x.diag_b * x.diag_c)))


def initial_concurrence(s: TwoModeCatState) -> float:
    """Concurrence of the pure cat state with equal amplitudes.

    ``2 (1 - e^{-4a^2}) sqrt(w(1-w)) / (1 + 2 sqrt(w(1-w)) e^{-4a^2} cos theta)``.
    Zero at ``alpha = 0`` where both branches collapse onto the vacuum.
    """
    if s.alpha1 != s.alpha2:
        raise ValueError("initial_concurrence needs alpha1 == alpha2")
    if s.alpha1 == 0.0:
        return 0.0
    root = np.sqrt(s.w * (1.0 - s.w))
    decay = np.exp(-4.0 * s.alpha1 ** 2)
    return float(-2.0 * np.expm1(-4.0 * s.alpha1 ** 2) * root
                 / (1.0 + 2.0 * root * decay * np.cos(s.theta)))
