import numpy as np
import pytest

from relaxed_green.fd import StencilSampler, central_weights, richardson_gradient


def test_central_weights_known():
    np.testing.assert_allclose(central_weights(1, 1), [-0.5, 0, 0.5], atol=1e-15)
    np.testing.assert_allclose(central_weights(2, 1), [1, -2, 1], atol=1e-14)
    np.testing.assert_allclose(central_weights(1, 2), np.array([1, -8, 0, 8, -1]) / 12,
                               atol=1e-15)


def test_stencil_too_narrow():
    with pytest.raises(ValueError):
        central_weights(3, 1)


def _field(a, b):
    return {"f": np.sin(a) * np.exp(0.5 * b)}


def test_stencil_mixed_partial():
    s = StencilSampler(_field, np.array([0.3]), np.array([0.2]), 1e-2, half_width=2)
    exact = np.cos(0.3) * 0.5 * np.exp(0.1)
    assert s.d("f", 1, 1)[0] == pytest.approx(exact, rel=1e-8)


def test_richardson_order():
    x1, x2 = np.array([0.3]), np.array([0.2])
    exact = np.cos(0.3) * np.exp(0.1)
    errs = [abs(richardson_gradient(_field, x1, x2, h, ("f",), 2)["f"][0][0] - exact)
            for h in (0.1, 0.05)]
    assert errs[0] / errs[1] == pytest.approx(16, rel=0.1)
