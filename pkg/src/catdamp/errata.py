"""Printed forms known to be wrong, kept so they can be checked, never used.

Each check evaluates the printed expression next to the corrected one and an
independent reference.  The expected outcome is that the printed form
disagrees with the reference while the corrected form agrees.
"""
from dataclasses import dataclass

import numpy as np

from .channel import bell_xmatrix
from .coherent import TwoModeCatState, chi_density, ortho_coeffs
from .concurrence import concurrence, initial_concurrence
from .oracle import bell_span_state, fock_coherent, gram_channel_density

EXPECTED = "expected-discrepancy"


@dataclass(frozen=True)
class Erratum:
    name: str
    description: str
    printed_residual: float
    corrected_residual: float
    tolerance: float

    @property
    def status(self):
        if self.corrected_residual > self.tolerance:
            return "fail"
        if self.printed_residual <= self.tolerance:
            return "unexpected-agreement"
        return EXPECTED


def printed_bell_coefficients(alpha, eta):
    """Bell X-matrix entries exactly as printed, a..d, f, z."""
    mu, nu = ortho_coeffs(alpha)
    mu_t, nu_t = ortho_coeffs(alpha * np.sqrt(eta))
    e = np.exp(-2.0 * alpha ** 2 * (1.0 - eta))
    return {
        "a": (1 + e) * mu_t ** 2 / (4 * mu ** 2),
        "b": -(-1 + e) * nu_t ** 2 / (4 * mu ** 2),
        "c": -(-1 + e) * mu_t ** 2 / (4 * mu ** 2),
        "d": (-1 + e) * mu_t * nu_t / (4 * mu * nu),
        "f": -(1 + e) * mu_t * nu_t / (4 * mu * nu),
        "z": (-1 + e) * mu_t * nu_t / (4 * mu * nu),
    }


def printed_bell_dense(alpha, eta):
    p = printed_bell_coefficients(alpha, eta)
    m = np.diag([p["a"], p["b"], p["c"], p["d"]]).astype(complex)
    m[0, 3] = m[3, 0] = p["f"]
    m[1, 2] = m[2, 1] = p["z"]
    return m


def printed_initial_concurrence(s):
    """The printed closed form with radicand w(w - 1); complex for 0 < w < 1."""
    root = np.emath.sqrt(s.w * (s.w - 1.0))
    decay = np.exp(-4.0 * s.alpha1 ** 2)
    return 2.0 * (1.0 - decay) * root / (1.0 + 2.0 * root * decay * np.cos(s.theta))


def printed_fock_coherent(alpha, cutoff):
    """Fock amplitudes with the printed prefactor exp(-alpha^2)."""
    return fock_coherent(alpha, cutoff) * np.exp(-0.5 * alpha * alpha)


def bell_xmatrix_erratum(alpha=1.0, eta=0.9, tol=1e-10):
    reference = gram_channel_density(bell_span_state(alpha), eta)
    printed = printed_bell_dense(alpha, eta)
    corrected = bell_xmatrix(alpha, eta).dense()
    return Erratum(
        "bell-xmatrix-coefficients",
        "printed c and d entries (and signs of f, z) of the channel-applied Bell X matrix",
        float(max(np.abs(printed - reference).max(), abs(np.trace(printed).real - 1.0))),
        float(np.abs(corrected - reference).max()),
        tol)


def concurrence_radicand_erratum(alpha=1.0, w=0.3, theta=0.0, tol=1e-10):
    s = TwoModeCatState(alpha, alpha, w, theta)
    reference = concurrence(chi_density(s))
    return Erratum(
        "initial-concurrence-radicand",
        "closed-form pure-state concurrence printed with sqrt(w(w-1))",
        float(abs(printed_initial_concurrence(s) - reference)),
        float(abs(initial_concurrence(s) - reference)),
        tol)


def fock_normalisation_erratum(alpha=1.0, cutoff=60, tol=1e-12):
    return Erratum(
        "fock-normalisation",
        "coherent-state Fock expansion printed with prefactor exp(-|alpha|^2)",
        float(abs(np.sum(printed_fock_coherent(alpha, cutoff) ** 2) - 1.0)),
        float(abs(np.sum(fock_coherent(alpha, cutoff) ** 2) - 1.0)),
        tol)


def check_errata():
    return [bell_xmatrix_erratum(), concurrence_radicand_erratum(), fock_normalisation_erratum()]
