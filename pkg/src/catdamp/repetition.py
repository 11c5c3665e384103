"""n-fold repetition code against phase flips, at the logical level."""
import numpy as np

from .channel import _require_equal_amplitudes, check_eta, flip_mixture, flip_prob_state
from .coherent import TwoModeCatState

MAX_REPETITIONS = 101


class InvalidCodeError(ValueError):
    pass


def check_code(n):
    if isinstance(n, bool) or int(n) != n:
        raise InvalidCodeError(f"repetition count must be an integer, got {n!r}")
    n = int(n)
    if n < 1 or n % 2 == 0 or n > MAX_REPETITIONS:
        raise InvalidCodeError(f"repetition count must be odd and in [1, {MAX_REPETITIONS}], got {n}")
    return n


def binomial(n, k):
    """C(n, k) as a float via the multiplicative recurrence."""
    k = min(k, n - k)
    value = 1.0
    for i in range(1, k + 1):
        value = value * (n - k + i) / i
    return value


def success_prob(n, p):
    """Probability that majority vote over ``n`` rails undoes all flips.

    Sum over k <= (n-1)/2 of C(n, k) (1-p)^(n-k) p^k.  Accepts scalar or
    array ``p``.
    """
    n = check_code(n)
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr < 0.0) | (p_arr > 1.0)):
        raise ValueError("flip probability must lie in [0, 1]")
    total = np.zeros_like(p_arr)
    for k in range((n - 1) // 2 + 1):
        total = total + binomial(n, k) * (1.0 - p_arr) ** (n - k) * p_arr ** k
    return float(total) if total.ndim == 0 else total


def failure_prob(n, p):
    """Complement of :func:`success_prob`, summed directly so it never dips below 0."""
    n = check_code(n)
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr < 0.0) | (p_arr > 1.0)):
        raise ValueError("flip probability must lie in [0, 1]")
    total = np.zeros_like(p_arr)
    for k in range((n + 1) // 2, n + 1):
        total = total + binomial(n, k) * (1.0 - p_arr) ** (n - k) * p_arr ** k
    return float(total) if total.ndim == 0 else total


def encoded_flip_weight(s: TwoModeCatState, eta, n) -> float:
    """Residual flip weight ``1 - P_success,n`` at the state's own flip weight."""
    return failure_prob(n, flip_prob_state(s, eta))


def transmit_encoded(s: TwoModeCatState, eta, n):
    """Density shared after encoded transmission of mode 2.

    ``P |chi'><chi'| + (1 - P) Z|chi'><chi'|Z`` with ``chi'`` the state at
    amplitudes ``(alpha, alpha sqrt(eta))`` and ``P = P_success,n(q)``, where
    ``q`` is the normalised single-transmission flip weight of this state.
    ``n = 1`` reproduces :func:`~catdamp.channel.transmit_direct`.
    """
    _require_equal_amplitudes(s)
    eta = check_eta(eta)
    n = check_code(n)
    damped = s.with_amplitudes(s.alpha1, s.alpha1 * np.sqrt(eta))
    weight = flip_prob_state(s, eta)
    if n > 1:
        weight = failure_prob(n, weight)
    return flip_mixture(damped, weight)
