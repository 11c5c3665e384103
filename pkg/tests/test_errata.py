import numpy as np

from catdamp.coherent import TwoModeCatState
from catdamp.errata import (EXPECTED, Erratum, bell_xmatrix_erratum, check_errata,
                            concurrence_radicand_erratum, fock_normalisation_erratum,
                            printed_bell_dense, printed_initial_concurrence)


def test_printed_bell_coefficients_are_reported():
    e = bell_xmatrix_erratum()
    assert e.corrected_residual < 1e-10
    assert e.printed_residual > 1e-3
    assert e.status == EXPECTED
    # printed form does not even have unit trace
    assert abs(np.trace(printed_bell_dense(1.0, 0.9)).real - 1.0) > 1e-3


def test_printed_radicand_is_not_real():
    s = TwoModeCatState(1.0, 1.0, 0.3, 0.0)
    assert np.iscomplexobj(printed_initial_concurrence(s))
    e = concurrence_radicand_erratum()
    assert e.status == EXPECTED and e.corrected_residual < 1e-10


def test_printed_fock_prefactor():
    e = fock_normalisation_erratum()
    assert e.status == EXPECTED
    assert e.printed_residual > 0.5


def test_status_logic():
    assert Erratum("x", "", 1.0, 0.0, 1e-10).status == EXPECTED
    assert Erratum("x", "", 0.0, 0.0, 1e-10).status == "unexpected-agreement"
    assert Erratum("x", "", 1.0, 1.0, 1e-10).status == "fail"


def test_all_errata():
    assert [e.status for e in check_errata()] == [EXPECTED] * 3
