"""Independent reference values computed without the package."""

import math

import numpy as np


def k0_quadrature(x, t_max=None, n=4001):
    """K0(x) from the integral of exp(-x cosh t) over t >= 0.

    The integrand decays doubly exponentially, so the trapezoid rule on a
    truncated interval converges geometrically.
    """
    if t_max is None:
        t_max = math.acosh(1.0 + 750.0 / x)
    t = np.linspace(0.0, t_max, n)
    f = np.exp(-x * np.cosh(t))
    h = t[1] - t[0]
    return float(h * (f.sum() - 0.5 * (f[0] + f[-1])))


def kelvin_plane_strain(mu, lam, x1, x2):
    """Planar Kelvin solution for a unit force along +x2 (``u2`` up to a constant)."""
    r2 = x1**2 + x2**2
    nu = lam / (2 * (lam + mu))
    c = 1.0 / (8 * math.pi * mu * (1 - nu))
    u1 = c * x1 * x2 / r2
    u2 = c * (-(3 - 4 * nu) * 0.5 * math.log(r2) + x2**2 / r2)
    return u1, u2


K0_AT_1 = 0.42102443824070834
