"""Photon loss on coherent-state qubits.

Loss is a beam splitter of transmissivity ``eta`` against vacuum.  Each
coherent branch shrinks from ``alpha`` to ``alpha sqrt(eta)`` and the two
branches lose mutual coherence by ``D = exp(-2 (1 - eta) alpha^2)``, the
overlap of the two states left in the loss mode.  Equivalently the qubit is
phase-flipped: unnormalised branches carry weights ``(1 + D)/2`` and
``(1 - D)/2``.  Once each branch is renormalised, the flip weight depends on
the state through the branch norms.
"""
from dataclasses import dataclass

import numpy as np

from .coherent import (CatQubit, TwoModeCatState, _check_amplitude, cat_norm,
                       chi_density, chi_flipped_density, ortho_coeffs, qubit_norm)
from .concurrence import XMatrix


def check_eta(eta):
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity eta must lie in [0, 1], got {eta!r}")
    return eta


def branch_coherence(alpha, eta):
    """D = <-alpha sqrt(1-eta)|alpha sqrt(1-eta)>."""
    return float(np.exp(-2.0 * (1.0 - check_eta(eta)) * _check_amplitude(alpha) ** 2))


def flip_prob_single(alpha, eta):
    """p_e = (1 - exp(-2 (1 - eta) alpha^2)) / 2."""
    alpha = _check_amplitude(alpha)
    eta = check_eta(eta)
    return float(-0.5 * np.expm1(-2.0 * (1.0 - eta) * alpha * alpha))


def flip_prob_pair(alpha, eta):
    """Flip probability P_e of a two-mode Bell-type pair after loss on mode 2.

    Evaluated after scaling numerator and denominator by ``exp(-4 alpha^2)``:

        P_e = (1 - D)(1 + e^{-2(1+eta) alpha^2}) / (2 (1 - e^{-4 alpha^2}))

    which stays finite for any ``alpha``.  At ``alpha = 0`` the continuous
    limit ``(1 - eta)/2`` is returned.
    """
    alpha = _check_amplitude(alpha)
    eta = check_eta(eta)
    x = alpha * alpha
    if x == 0.0:
        return 0.5 * (1.0 - eta)
    lost = -np.expm1(-2.0 * (1.0 - eta) * x)
    return float(lost * (1.0 + np.exp(-2.0 * (1.0 + eta) * x)) / (-2.0 * np.expm1(-4.0 * x)))


def flip_prob_state(s: TwoModeCatState, eta) -> float:
    """Normalised flip weight for a specific cat state after loss on mode 2.

    ``(1 - D) N'(alpha, alpha sqrt(eta)) / (2 N(alpha, alpha))``.  Equal to
    :func:`flip_prob_pair` for the odd Bell cat (w = 1/2, theta = pi).
    """
    _require_equal_amplitudes(s)
    eta = check_eta(eta)
    if s.alpha1 == 0.0:
        return 0.0
    lost = -np.expm1(-2.0 * (1.0 - eta) * s.alpha1 ** 2)
    damped = s.with_amplitudes(s.alpha1, s.alpha1 * np.sqrt(eta))
    return float(0.5 * lost * cat_norm(damped, flipped=True) / cat_norm(s))


def _require_equal_amplitudes(s):
    if s.alpha1 != s.alpha2:
        raise ValueError(f"expected alpha1 == alpha2, got {s.alpha1} and {s.alpha2}")


def flip_mixture(s, weight):
    """(1 - weight) |chi><chi| + weight Z|chi><chi|Z for a (damped) state."""
    rho = (1.0 - weight) * chi_density(s)
    if weight > 0.0:
        rho = rho + weight * chi_flipped_density(s)
    return rho


def transmit_direct(s: TwoModeCatState, eta):
    """Density after sending mode 2 of ``s`` through the loss channel.

    Mode 1 stays in its ``(u, v)`` basis at ``alpha``; mode 2 is expressed in
    the basis at ``alpha sqrt(eta)``.
    """
    q = flip_prob_state(s, eta)
    damped = s.with_amplitudes(s.alpha1, s.alpha1 * np.sqrt(eta))
    return flip_mixture(damped, q)


@dataclass(frozen=True)
class SingleQubitMixture:
    """Damped qubit: ``(1 - weight) |Q><Q| + weight Z|Q><Q|Z``.

    ``p_flip`` is the channel flip probability ``p_e`` (at most 1/2);
    ``weight`` is the flip weight after each branch is renormalised.
    """

    p_flip: float
    weight: float
    unflipped: CatQubit
    flipped: CatQubit

    def density(self):
        rho = (1.0 - self.weight) * self.unflipped.density()
        if self.weight > 0.0:
            rho = rho + self.weight * self.flipped.density()
        return rho


def damp_single_qubit(q: CatQubit, eta) -> SingleQubitMixture:
    eta = check_eta(eta)
    p_e = flip_prob_single(q.alpha, eta)
    alpha_t = q.alpha * np.sqrt(eta)
    unflipped = CatQubit(q.a, q.b, alpha_t)
    flipped = CatQubit(q.a, -q.b, alpha_t)
    weight = 0.0
    if p_e > 0.0:
        weight = p_e * qubit_norm(flipped) / qubit_norm(q)
    return SingleQubitMixture(p_e, weight, unflipped, flipped)


def bell_xmatrix(alpha, eta, flip_weight=None):
    """Channel applied to mode 2 of ``(|u u> + |v v>)/sqrt(2)``.

    The output mixes the contracted Bell state ``~ (mu'/mu)|uu'> + (nu'/nu)|vv'>``
    with its phase-flipped partner ``~ (nu'/mu)|uv'> + (mu'/nu)|vu'>``
    (primes mark amplitude ``alpha sqrt(eta)``).  The default flip weight is
    :func:`flip_prob_pair`, which reproduces the channel exactly; a code
    supplies ``1 - P_success`` instead.
    """
    alpha = _check_amplitude(alpha)
    eta = check_eta(eta)
    if alpha == 0.0:
        raise ValueError("bell_xmatrix needs alpha > 0 (the odd basis vector is undefined)")
    if flip_weight is None:
        flip_weight = flip_prob_pair(alpha, eta)
    if not 0.0 <= flip_weight <= 1.0:
        raise ValueError(f"flip weight must lie in [0, 1], got {flip_weight!r}")
    mu, nu = ortho_coeffs(alpha)
    mu_t, nu_t = ortho_coeffs(alpha * np.sqrt(eta))
    keep = 1.0 - flip_weight

    outer = np.array([mu_t / mu, nu_t / nu])
    inner = np.array([nu_t / mu, mu_t / nu])
    outer_norm = outer @ outer
    inner_norm = inner @ inner
    return XMatrix(
        diag_a=keep * outer[0] ** 2 / outer_norm,
        diag_b=flip_weight * inner[0] ** 2 / inner_norm,
        diag_c=flip_weight * inner[1] ** 2 / inner_norm,
        diag_d=keep * outer[1] ** 2 / outer_norm,
        corner_f=complex(keep * outer[0] * outer[1] / outer_norm),
        inner_z=complex(flip_weight * inner[0] * inner[1] / inner_norm),
    )
