"""Coherent-state qubits and two-mode cat states in an orthonormal basis.

Logical states follow the (-, +) encoding: ``|0>_L = |-alpha>`` and
``|1>_L = |alpha>``.  Each mode is expanded in the even/odd cat basis

    |+alpha> = mu |u> + nu |v>,    |-alpha> = mu |u> - nu |v>,

and two-mode matrices use the product order ``(uu, uv, vu, vv)``.  Amplitudes
are real and non-negative.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

NORM_FLOOR = 1e-14
UNIT_TOL = 1e-12


class DegenerateStateError(ValueError):
    """The requested superposition has (numerically) zero norm."""


class OrthoCoeffs(NamedTuple):
    mu: float
    nu: float


def _check_amplitude(alpha, name="alpha"):
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha < 0:
        raise ValueError(f"{name} must be finite and >= 0, got {alpha!r}")
    return alpha


def overlap(alpha, beta):
    """Overlap <beta|alpha> of two coherent states with real amplitudes.

    Signed amplitudes are allowed, so ``overlap(a, -a) == exp(-2 a**2)``.
    """
    return np.exp(-0.5 * (np.asarray(alpha, float) - np.asarray(beta, float)) ** 2)


def ortho_coeffs(alpha):
    alpha = _check_amplitude(alpha)
    x = 2.0 * alpha * alpha
    mu = np.sqrt(0.5 * (1.0 + np.exp(-x)))
    nu = np.sqrt(-0.5 * np.expm1(-x))
    return OrthoCoeffs(float(mu), float(nu))


def coherent_coords(alpha, sign=1):
    """Coordinates of ``|sign * alpha>`` in the ``(u, v)`` basis."""
    mu, nu = ortho_coeffs(alpha)
    return np.array([mu, sign * nu])


@dataclass(frozen=True)
class CatQubit:
    """Single-mode logical qubit ``(a|-alpha> + b|alpha>) / sqrt(N)``."""

    a: complex
    b: complex
    alpha: float

    def __post_init__(self):
        _check_amplitude(self.alpha)
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"|a|^2 + |b|^2 must be 1, got {norm!r}")

    def vector(self):
        """Normalised state in the ``(u, v)`` basis at this amplitude."""
        vec = self.a * coherent_coords(self.alpha, -1) + self.b * coherent_coords(self.alpha, 1)
        return vec / np.sqrt(qubit_norm(self))

    def density(self):
        vec = self.vector()
        return np.outer(vec, vec.conj())


def qubit_norm(q):
    """N(alpha) = 1 + exp(-2 alpha^2) (a b* + a* b)."""
    cross = 2.0 * np.real(q.a * np.conj(q.b))
    norm = 1.0 + np.exp(-2.0 * q.alpha ** 2) * cross
    if norm <= NORM_FLOOR:
        raise DegenerateStateError(
            f"qubit a={q.a!r}, b={q.b!r} at alpha={q.alpha} has zero norm")
    return float(norm)


@dataclass(frozen=True)
class TwoModeCatState:
    """``sqrt(w)|alpha1, alpha2> + e^{i theta} sqrt(1-w)|-alpha1, -alpha2>``."""

    alpha1: float
    alpha2: float
    w: float
    theta: float

    def __post_init__(self):
        _check_amplitude(self.alpha1, "alpha1")
        _check_amplitude(self.alpha2, "alpha2")
        if not 0.0 <= self.w <= 1.0:
            raise ValueError(f"w must lie in [0, 1], got {self.w!r}")
        if not 0.0 <= self.theta < 2.0 * np.pi:
            raise ValueError(f"theta must lie in [0, 2pi), got {self.theta!r}")

    @property
    def coupling(self):
        """cos(theta) sqrt(w (1 - w)), the weight of the branch cross term."""
        return float(np.cos(self.theta) * np.sqrt(self.w * (1.0 - self.w)))

    def branches(self):
        """Coefficients of ``|+alpha1, +alpha2>`` and ``|-alpha1, -alpha2>``."""
        return complex(np.sqrt(self.w)), np.exp(1j * self.theta) * np.sqrt(1.0 - self.w)

    def with_amplitudes(self, alpha1, alpha2):
        return TwoModeCatState(alpha1, alpha2, self.w, self.theta)


def flip_branches(c_plus, c_minus):
    """Logical Z on mode 2: ``|alpha2> -> -|alpha2>``, ``|-alpha2>`` unchanged."""
    return -c_plus, c_minus


def cat_norm(s, flipped=False):
    """Squared norm of the unnormalised two-branch superposition.

    ``flipped=False`` gives 1 + 2 cos(theta) sqrt(w(1-w)) e^{-2 a1^2 - 2 a2^2};
    the phase-flipped state has the opposite sign on the cross term.
    """
    sign = -1.0 if flipped else 1.0
    norm = 1.0 + sign * 2.0 * s.coupling * np.exp(-2.0 * s.alpha1 ** 2 - 2.0 * s.alpha2 ** 2)
    if norm <= NORM_FLOOR:
        raise DegenerateStateError(f"cat state {s} has zero norm (flipped={flipped})")
    return float(norm)


def branch_vector(alpha1, alpha2, c_plus, c_minus):
    """Unnormalised ``c_plus|a1, a2> + c_minus|-a1, -a2>`` in the product basis."""
    plus = np.outer(coherent_coords(alpha1, 1), coherent_coords(alpha2, 1)).ravel()
    minus = np.outer(coherent_coords(alpha1, -1), coherent_coords(alpha2, -1)).ravel()
    return c_plus * plus + c_minus * minus


def chi_vector(s, flipped=False):
    c_plus, c_minus = s.branches()
    if flipped:
        c_plus, c_minus = flip_branches(c_plus, c_minus)
    vec = branch_vector(s.alpha1, s.alpha2, c_plus, c_minus)
    return vec / np.sqrt(cat_norm(s, flipped))


def chi_density(s):
    """Pure-state projector of the two-mode cat state in ``(uu, uv, vu, vv)``."""
    vec = chi_vector(s)
    return np.outer(vec, vec.conj())


def chi_flipped_density(s):
    """Projector onto the state after a logical phase flip on mode 2."""
    vec = chi_vector(s, flipped=True)
    return np.outer(vec, vec.conj())


def check_density(rho, herm_tol=1e-12, trace_tol=1e-10, psd_tol=1e-10):
    """Raise ``ValueError`` unless ``rho`` is Hermitian, unit trace and PSD."""
    rho = np.asarray(rho)
    skew = np.abs(rho - rho.conj().T).max()
    if skew > herm_tol:
        raise ValueError(f"density is not Hermitian (skew {skew:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density trace is {tr!r}")
    lam_min = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()
    if lam_min < -psd_tol:
        raise ValueError(f"density is not PSD (min eigenvalue {lam_min:.3e})")
    return rho
