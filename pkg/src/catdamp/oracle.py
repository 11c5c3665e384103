"""Reference engines for checking the closed forms.

Nothing here uses the mu/nu closed forms, the flip-probability formulas or
the Jacobi kernel.  The two-mode states are built directly from coherent
overlaps (Gram route) or from truncated Fock vectors with a numerical beam
splitter (Fock route), and both are orthonormalised with ``numpy.linalg.eigh``.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lgamma

import numpy as np

# Maps Lowdin coordinates (closest to |+a>, |-a>) onto the even/odd pair (u, v).
_EVEN_ODD = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
GRAM_FLOOR = 1e-6
MAX_ENUMERATION = 15


class DegenerateBasisError(ValueError):
    pass


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class CoherentSpanState:
    """Unnormalised ``sum c[s1, s2] |s1 alpha>|s2 alpha>`` with s = 0 for +, 1 for -."""

    coefficients: np.ndarray
    alpha: float

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex).reshape(2, 2)
        if not np.any(np.abs(c) > 0):
            raise ValueError("at least one coefficient must be nonzero")
        object.__setattr__(self, "coefficients", c)


def cat_span_state(alpha, w, theta):
    c = np.zeros((2, 2), dtype=complex)
    c[0, 0] = np.sqrt(w)
    c[1, 1] = np.exp(1j * theta) * np.sqrt(1.0 - w)
    return CoherentSpanState(c, alpha)


def gram_matrix(alpha):
    """2x2 Gram matrix of (|alpha>, |-alpha>)."""
    e = np.exp(-2.0 * alpha * alpha)
    return np.array([[1.0, e], [e, 1.0]])


def product_gram(alpha1, alpha2):
    return np.kron(gram_matrix(alpha1), gram_matrix(alpha2))


def _psd_power(g, power):
    lam, vec = np.linalg.eigh(g)
    lam = np.clip(lam, 0.0, None)
    return (vec * lam ** power) @ vec.conj().T


def lowdin_transform(g):
    """Symmetric orthonormaliser G^{-1/2}."""
    lam = np.linalg.eigvalsh(g)
    if lam.min() < GRAM_FLOOR ** 2:
        raise DegenerateBasisError(f"Gram matrix is singular (min eigenvalue {lam.min():.3e})")
    return _psd_power(g, -0.5)


def coherent_coordinates(alpha):
    """Columns: coordinates of |alpha>, |-alpha> in the even/odd basis.

    G^{1/2} gives coordinates in the Lowdin basis; it stays defined when G is
    singular (alpha = 0), where only the even vector is populated.
    """
    return _EVEN_ODD @ _psd_power(gram_matrix(alpha), 0.5)


def bell_span_state(alpha):
    """(|uu> + |vv>)/sqrt(2) re-expressed over the coherent products."""
    if alpha < GRAM_FLOOR:
        raise DegenerateBasisError("the odd basis vector is undefined at alpha = 0")
    k = coherent_coordinates(alpha)
    target = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    return CoherentSpanState(np.linalg.solve(np.kron(k, k), target), alpha)


def _channel_parts(state, eta):
    alpha = float(state.alpha)
    if alpha < GRAM_FLOOR:
        raise DegenerateBasisError(f"Gram matrix is singular at alpha={alpha}")
    k1 = coherent_coordinates(alpha)
    k2 = coherent_coordinates(alpha * np.sqrt(eta))
    # columns: |s1 alpha> (x) |s2 alpha sqrt(eta)> for (s1, s2) in ++, +-, -+, --
    basis = np.einsum("is,jt->ijst", k1, k2).reshape(4, 4)
    loss_overlap = np.exp(-2.0 * (1.0 - eta) * alpha * alpha)
    c = state.coefficients.reshape(4)
    input_norm = np.real(c.conj() @ product_gram(alpha, alpha) @ c)
    return basis, c, loss_overlap, input_norm


def gram_channel_density(state, eta):
    """Exact loss-channel output from pairwise coherent overlaps.

    Element (s, t) of the coherent-product representation picks up the loss
    mode overlap, 1 when the mode-2 signs agree and exp(-2(1-eta)alpha^2)
    otherwise.
    """
    basis, c, d, _ = _channel_parts(state, eta)
    sign2 = np.array([0, 1, 0, 1])
    factor = np.where(sign2[:, None] == sign2[None, :], 1.0, d)
    rho = basis @ (np.outer(c, c.conj()) * factor) @ basis.conj().T
    return rho / np.trace(rho).real


def gram_channel_branches(state, eta):
    """Split the channel output into unflipped and flipped pure branches.

    Returns ``(flip_weight, unflipped_projector, flipped_projector)``.
    """
    basis, c, d, input_norm = _channel_parts(state, eta)
    flip = np.array([-1.0, 1.0, -1.0, 1.0])
    psi0 = basis @ c
    psi1 = basis @ (flip * c)
    n0 = np.real(np.vdot(psi0, psi0))
    n1 = np.real(np.vdot(psi1, psi1))
    w1 = 0.5 * (1.0 - d) * n1 / input_norm
    p0 = np.outer(psi0, psi0.conj()) / n0
    p1 = np.outer(psi1, psi1.conj()) / n1 if n1 > 0 else np.zeros((4, 4), complex)
    return w1, p0, p1


def gram_encoded_density(state, eta, n):
    """Encoded transmission: enumerated majority-vote weight on the Gram branches."""
    q, p0, p1 = gram_channel_branches(state, eta)
    success = majority_vote_success(n, q)
    return success * p0 + (1.0 - success) * p1


def fock_coherent(alpha, cutoff):
    """Truncated Fock amplitudes exp(-alpha^2/2) alpha^n / sqrt(n!)."""
    n = np.arange(cutoff)
    if alpha == 0.0:
        vec = np.zeros(cutoff)
        vec[0] = 1.0
        return vec
    log_mag = -0.5 * alpha * alpha + n * np.log(abs(alpha)) - 0.5 * np.array([lgamma(k + 1) for k in n])
    return np.sign(alpha) ** n * np.exp(log_mag)


def _fock_even_odd(alpha, cutoff):
    """Even/odd orthonormal pair in Fock space from the truncated coherent vectors."""
    vecs = np.stack([fock_coherent(alpha, cutoff), fock_coherent(-alpha, cutoff)], axis=1)
    gram = vecs.T @ vecs
    if alpha < GRAM_FLOOR:
        return np.stack([vecs[:, 0], np.zeros(cutoff)], axis=1)
    return vecs @ lowdin_transform(gram) @ _EVEN_ODD.T


@lru_cache(maxsize=32)
def loss_amplitudes(eta, cutoff):
    """B[m, k, l]: amplitude of |k>|l>_loss from |m>|0> on a beam splitter.

    Cached; the returned array is read-only.
    """
    b = np.zeros((cutoff, cutoff, cutoff))
    t, r = np.sqrt(eta), np.sqrt(1.0 - eta)
    for m in range(cutoff):
        for k in range(m + 1):
            l = m - k
            b[m, k, l] = np.exp(0.5 * (lgamma(m + 1) - lgamma(k + 1) - lgamma(l + 1))) * t ** k * r ** l
    b.flags.writeable = False
    return b


@dataclass(frozen=True)
class FockResult:
    density: np.ndarray
    truncation_error: float
    leakage: float


def fock_channel_density(state, eta, cutoff=40, tol=1e-10):
    """Loss channel evaluated in truncated Fock space, projected on the qubit span.

    ``truncation_error`` is the norm deficit 1 - sum |c_n|^2 of the input
    coherent vectors; ``leakage`` is the output weight outside the span.
    """
    alpha = float(state.alpha)
    deficit = 1.0 - np.sum(fock_coherent(alpha, cutoff) ** 2)
    if deficit > tol:
        raise TruncationError(f"cutoff {cutoff} loses {deficit:.3e} of the norm at alpha={alpha}; "
                              f"tolerance is {tol:.1e}")
    plus, minus = fock_coherent(alpha, cutoff), fock_coherent(-alpha, cutoff)
    modes = [plus, minus]
    psi = sum(state.coefficients[s1, s2] * np.outer(modes[s1], modes[s2])
              for s1, s2 in product((0, 1), repeat=2))
    psi = psi / np.linalg.norm(psi)
    out = (psi @ loss_amplitudes(eta, cutoff).reshape(cutoff, -1)).reshape(cutoff, cutoff, cutoff)
    b1 = _fock_even_odd(alpha, cutoff)
    b2 = _fock_even_odd(alpha * np.sqrt(eta), cutoff)
    half = np.tensordot(b1.conj(), out, axes=(0, 0))
    proj = np.tensordot(b2.conj(), half, axes=(0, 1)).transpose(1, 0, 2).reshape(4, cutoff)
    rho = proj @ proj.conj().T
    inside = np.trace(rho).real
    leakage = float(np.sum(np.abs(out) ** 2) - inside)
    return FockResult(rho / inside, float(max(deficit, 0.0)), leakage)


def majority_vote_success(n, p):
    """Exact success probability by enumerating all 2^n flip patterns."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"repetition count must be odd and positive, got {n}")
    if n > MAX_ENUMERATION:
        raise ValueError(f"enumeration refused for n={n} > {MAX_ENUMERATION}; use the closed form")
    patterns = np.array(list(product((0, 1), repeat=n)), dtype=bool)
    p = np.asarray(p, dtype=float)
    probs = np.prod(np.where(patterns[..., None], p, 1.0 - p), axis=1)
    ok = patterns.sum(axis=1) <= (n - 1) // 2
    total = probs[ok].sum(axis=0)
    return float(total) if total.ndim == 0 else total
