"""Gauge-invariant incompatible elasticity: the concentrated-couple distortion.

The model has no micro stiffness, so the only unknown is the incompatible
elastic distortion ``e``. Its characteristic length is the relaxed model's
``ell_2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .fd import StencilSampler
from .models import field_point
from .special_functions import kernel_table

__all__ = ["DistortionState", "eval_gauge_couple", "gauge_fields", "gauge_residual"]


@dataclass(frozen=True)
class DistortionState:
    e11: np.ndarray
    e12: np.ndarray
    e21: np.ndarray
    e22: np.ndarray

    @property
    def e(self):
        return np.stack([np.stack([self.e11, self.e12]), np.stack([self.e21, self.e22])])

    @property
    def trace(self):
        return self.e11 + self.e22


def _require_mu_c(p):
    if not p.mu_c > 0:
        raise ContractError("the gauge couple solution is unbounded for mu_c = 0")


def gauge_fields(p, x1, x2):
    """Distortion components as a dict of arrays."""
    _require_mu_c(p)
    x1, x2, r = field_point((x1, x2))
    ell = p.ell_2
    t = kernel_table(r / ell)
    base = 8 * math.pi * (p.mu_c + p.mu_e) * ell**2
    e11 = -2 * x1 * x2 * t["k2"] / (base * r**2)
    iso = p.mu_e * t["k0"] / (p.mu_c * base)
    dev = (x1**2 - x2**2) * t["k2"] / (base * r**2)
    return dict(e11=e11, e12=iso + dev, e21=-iso + dev, e22=-e11)


def eval_gauge_couple(p, x):
    """Incompatible distortion ``e`` of a unit couple at the origin."""
    return DistortionState(**gauge_fields(p, x[0], x[1]))


def gauge_equations(p, D):
    """Terms of the four component equations (``M = 0`` away from the origin).

    ``D(name, i, j)`` returns the mixed partial of a distortion component.
    Each equation is returned as a list of additive terms.
    """
    c = p.curvature
    le, me, mc = p.lambda_e, p.mu_e, p.mu_c
    return [
        [-c * D("e11", 0, 2), c * D("e12", 1, 1), (le + 2 * me) * D("e11"), le * D("e22")],
        [c * D("e11", 1, 1), -c * D("e12", 2, 0), (mc + me) * D("e12"), (me - mc) * D("e21")],
        [-c * D("e21", 0, 2), c * D("e22", 1, 1), (me - mc) * D("e12"), (mc + me) * D("e21")],
        [c * D("e21", 1, 1), -c * D("e22", 2, 0), le * D("e11"), (le + 2 * me) * D("e22")],
    ]


def gauge_residual(p, x, h, *, half_width=1):
    """Residuals of the four component equations by central differences.

    The default three-point stencil is second order in ``h``.
    """
    _require_mu_c(p)
    x1, x2, r = field_point(x)
    if np.any(r <= 10 * h):
        raise ContractError("step too large: need r > 10 h")
    s = StencilSampler(lambda a, b: gauge_fields(p, a, b), x1, x2, h, half_width)
    return np.array([sum(eq) for eq in gauge_equations(p, s.d)])
