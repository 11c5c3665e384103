import numpy as np

SIGMA_YY = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])

ACCEPTANCE_LINES = []


def numpy_concurrence(rho):
    """Wootters concurrence straight from numpy eigenvalues of rho rho~."""
    tilde = SIGMA_YY @ rho.conj() @ SIGMA_YY
    lam = np.sort(np.abs(np.linalg.eigvals(rho @ tilde).real))[::-1]
    r = np.sqrt(lam)
    return max(0.0, r[0] - r[1] - r[2] - r[3])


def random_density(rng, rank=4):
    a = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
