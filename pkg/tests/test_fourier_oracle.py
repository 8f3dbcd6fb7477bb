import math

import numpy as np
import pytest

from relaxed_green import fourier_oracle as fo
from relaxed_green.special_functions import bessel_k


def test_solution_satisfies_system(fig4_params):
    for load in ("force", "couple"):
        st = fo.solve(fig4_params, (0.7, -1.3), load)
        np.testing.assert_allclose(st.A @ st.u_hat, st.rhs, atol=1e-12)


def test_matrix_symmetry(fig4_params):
    # complex symmetric, and xi -> -xi conjugates it (real fields)
    A = fo.assemble(fig4_params, (0.4, 2.1)).A
    np.testing.assert_array_equal(A, A.T)
    np.testing.assert_array_equal(fo.assemble(fig4_params, (-0.4, -2.1)).A, A.conj())


def test_determinant_positive(fig4_params):
    for k in np.geomspace(1e-2, 1e2, 9):
        assert fo.determinant_closed_form(fig4_params, k) > 0


def test_hankel_inverse_of_phi_hat():
    ell = 0.8
    for r in (0.3, 1.0, 2.5):
        val = fo.hankel_invert_radial(r, ell)
        assert val == pytest.approx(bessel_k(0, r / ell) / (2 * math.pi), rel=1e-7)
