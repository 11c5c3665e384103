"""Concurrence through the factorisation

    C[(1 x $) |chi><chi|] = C[(1 x $) |phi+><phi+|] * C[|chi>]

where ``$`` is the (possibly encoded) loss channel on mode 2.
"""
from .channel import bell_xmatrix, flip_prob_pair
from .concurrence import concurrence_x, initial_concurrence
from .repetition import check_code, failure_prob


def channel_concurrence(alpha, eta, n=1, pe_offset=0.0):
    """Concurrence of the Bell state after the channel, X-matrix route.

    ``pe_offset`` shifts P_e before the code is applied.  It exists for
    fault-injection checks only.
    """
    n = check_code(n)
    p = min(max(flip_prob_pair(alpha, eta) + pe_offset, 0.0), 1.0)
    weight = p if n == 1 else failure_prob(n, p)
    return concurrence_x(bell_xmatrix(alpha, eta, flip_weight=weight))


def evolved_concurrence(alpha, eta, n, s, pe_offset=0.0):
    if s.alpha1 != alpha or s.alpha2 != alpha:
        raise ValueError("state amplitudes must both equal alpha")
    if alpha == 0.0:
        return 0.0
    return channel_concurrence(alpha, eta, n, pe_offset) * initial_concurrence(s)
