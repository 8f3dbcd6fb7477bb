import math

import numpy as np
import pytest

from oracles import k0_quadrature
from relaxed_green.errors import DomainError
from relaxed_green.special_functions import (EULER_GAMMA, bessel_k, capital_phi,
                                             capital_psi, kernel_table)


@pytest.mark.parametrize("z", [1e-3, 0.5, 1.0, 1.99, 2.01, 7.0, 24.9, 25.1, 60.0])
def test_k0_matches_quadrature(z):
    assert bessel_k(0, z) == pytest.approx(k0_quadrature(z), rel=1e-12)


def test_regime_seams_are_continuous():
    # across each switch point K0 changes by -K1 dz and nothing more
    for seam in (2.0, 25.0):
        z = seam * (1 + np.array([-1e-9, 1e-9]))
        a, b = bessel_k(0, z)
        expected = -bessel_k(1, seam) * (z[1] - z[0])
        assert abs((b - a) - expected) / a < 1e-12


def test_recurrence_over_wide_range():
    z = np.geomspace(1e-5, 200, 500)
    k0, k1, k2 = (bessel_k(n, z) for n in (0, 1, 2))
    np.testing.assert_allclose(k2, k0 + 2 * k1 / z, rtol=1e-12)


def test_small_argument_behaviour():
    assert bessel_k(0, 1e-10) == pytest.approx(-math.log(0.5e-10) - EULER_GAMMA, rel=1e-12)
    assert 1e-6 * bessel_k(1, 1e-6) == pytest.approx(1.0, rel=1e-10)


def test_no_overflow_for_huge_arguments():
    assert bessel_k(0, 800.0) == 0.0 or bessel_k(0, 800.0) > 0
    assert kernel_table(800.0)["underflow"]


def test_scalar_in_scalar_out():
    assert isinstance(bessel_k(1, 2.0), float)
    assert bessel_k(1, np.array([2.0, 3.0])).shape == (2,)


@pytest.mark.parametrize("z", [0.0, -1.0, math.nan])
def test_domain(z):
    with pytest.raises(DomainError):
        bessel_k(0, z)


def test_bad_order():
    with pytest.raises(DomainError):
        bessel_k(3, 1.0)


def test_phi_psi_limits():
    assert capital_phi(1e-9, 1.0) == pytest.approx(0.5, abs=1e-6)
    assert np.isfinite(capital_psi(1e-9, 1.0))
    assert kernel_table(1e-6)["phi"] == pytest.approx(0.5, abs=1e-5)
