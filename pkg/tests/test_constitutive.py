import math

import numpy as np
import pytest

from relaxed_green.constitutive import (Moduli, default_step, effective_moduli,
                                        evaluate_fields, gradient_u, stress_state, stresses)
from relaxed_green.errors import ContractError


def test_stress_is_linear_and_symmetric_without_mu_c(fig4_params):
    mod = Moduli.from_params(fig4_params, mu_c=0.0)
    rng = np.random.default_rng(0)
    Du = rng.normal(size=(2, 2))
    st = stresses(mod, Du, np.zeros((2, 2)), np.zeros(2))
    assert st.sigma[0, 1] == pytest.approx(st.sigma[1, 0])
    st2 = stresses(mod, 2 * Du, np.zeros((2, 2)), np.zeros(2))
    np.testing.assert_allclose(st2.sigma, 2 * st.sigma)


def test_skew_stress_from_mu_c(fig4_params):
    W = np.array([[0.0, 1.0], [-1.0, 0.0]])
    st = stresses(fig4_params, W, np.zeros((2, 2)), np.zeros(2))
    assert st.sigma[0, 1] == pytest.approx(2 * fig4_params.mu_c)
    assert st.sigma[0, 0] == 0


def test_moment_stress(fig4_params):
    st = stresses(fig4_params, np.zeros((2, 2)), np.zeros((2, 2)), np.array([1.0, -2.0]))
    c = fig4_params.curvature
    assert (st.m13, st.m23) == pytest.approx((c, -2 * c))
    assert st.m31 == 0  # a1 == a2


def test_limit_moduli(fig4_params):
    p = fig4_params
    assert effective_moduli(p, "Micropolar").mu_e == pytest.approx(p.mu_M)
    assert math.isinf(effective_moduli(p, "CoupleStress").mu_c)
    assert effective_moduli(p, "ClassicalMacro").curvature == 0
    assert effective_moduli(p, "PureRelaxed").mu_c == 0


def test_gauge_needs_couple(fig4_params):
    with pytest.raises(ContractError):
        evaluate_fields(fig4_params, "GaugeDislocation", "force", 1.0, 0.0)


def test_step_shrinks_near_origin(fig4_params):
    h = default_step(fig4_params, np.array([1e-3, 1.0]), "RelaxedMicromorphic")
    assert h[0] <= 1e-3 / 50
    assert h[1] <= 1e-4 * max(1.0, fig4_params.ell_2) + 1e-18


def test_gradient_insensitive_to_step(fig4_params):
    x = (np.array([0.5]), np.array([0.3]))
    g = gradient_u(fig4_params, "ClassicalMacro", "force", x)
    g2 = gradient_u(fig4_params, "ClassicalMacro", "force", x, h=1e-3)
    np.testing.assert_allclose(g, g2, rtol=1e-8)


def test_step_too_large(fig4_params):
    with pytest.raises(ContractError):
        gradient_u(fig4_params, "ClassicalMacro", "force", (0.01, 0.0), h=0.01)


def test_classical_micro_has_no_moment_stress(fig4_params):
    st = stress_state(fig4_params, "ClassicalMicro", "force", (0.5, 0.2))
    assert np.isnan(st.m13)
    assert np.all(np.isfinite(st.sigma))
