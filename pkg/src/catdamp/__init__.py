"""Coherent-state (cat) qubits sent through photon loss, protected by repetition codes."""
from .channel import (SingleQubitMixture, bell_xmatrix, branch_coherence, damp_single_qubit,
                      flip_prob_pair, flip_prob_single, flip_prob_state, transmit_direct)
from .coherent import (CatQubit, DegenerateStateError, OrthoCoeffs, TwoModeCatState, cat_norm,
                       chi_density, chi_flipped_density, check_density, ortho_coeffs, overlap,
                       qubit_norm)
from .concurrence import (XMatrix, concurrence, concurrence_x, initial_concurrence, is_x_shaped,
                          spin_flip, wootters_spectrum)
from .evolution import channel_concurrence, evolved_concurrence
from .hermitian import EigenConvergenceError, eig_hermitian, eigvals_hermitian, sqrt_psd
from .repetition import InvalidCodeError, failure_prob, success_prob, transmit_encoded
from .sweep import ConfigError, ResultRow, SweepConfig, figure_csv, run_sweep, sweep_csv
from .verify import format_report, run_checks

__version__ = "0.1.0"
