"""Fundamental solution for a unit concentrated force (Kelvin problem).

Every model is a separate closed-form path. The formulas are written for a
force along ``x2``; a force along ``x1`` is obtained by interchanging the
indices 1 and 2 of the position and of every output component.

Displacements are defined up to rigid motions and are returned exactly as
the closed forms print them (no additive constants).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ContractError, DomainError
from .models import KinematicState, ModelKind, field_point
from .special_functions import kernel_table

__all__ = [
    "eval_force",
    "micro_rotation_force",
    "grad_phi1",
    "force_fields",
    "stretch_lengths",
    "micropolar_length",
    "couple_stress_length",
    "FORCE_MODELS",
]

FOUR_PI = 4.0 * math.pi
TWO_PI = 2.0 * math.pi

FORCE_MODELS = (
    ModelKind.RelaxedMicromorphic,
    ModelKind.ZeroPoissonRelaxed,
    ModelKind.PureRelaxed,
    ModelKind.MicroStretch,
    ModelKind.Micropolar,
    ModelKind.CoupleStress,
    ModelKind.ClassicalMacro,
    ModelKind.ClassicalMicro,
)


class _Kernels:
    """Radial kernels Phi, Psi, dPhi/dr and K0 for one characteristic length.

    With ``ell = inf`` every kernel is reported as zero; callers only use
    that case where the accompanying coefficient vanishes as well.
    """

    def __init__(self, r, ell):
        if math.isinf(ell):
            zero = np.zeros_like(r)
            self.phi = self.psi = self.dphi = self.k0 = self.c1 = zero
            self.k1z = np.ones_like(r)
            return
        if not ell > 0:
            raise DomainError(f"characteristic length must be positive, got {ell}")
        t = kernel_table(r / ell)
        self.phi = t["phi"]
        self.psi = t["c1"] / r
        self.dphi = t["dphi"] / ell
        self.k0 = t["k0"]
        self.c1 = t["c1"]                 # 1 - z K1(z)
        self.k1z = 1.0 - t["c1"]


def stretch_lengths(p):
    """``(ell_1, ell_2)`` of the micro-stretch limit."""
    mM, kM = p.mu_M, p.kappa_M
    ell_1 = p.L_c * math.sqrt(p.a_tilde * mM * (p.kappa_e + mM)
                              / (4 * (kM + mM) * (p.kappa_e + p.kappa_m)))
    return ell_1, micropolar_length(p)


def micropolar_length(p):
    """Cosserat length ``L_c sqrt(a (mu_M + mu_c) / (4 mu_c))``; inf at ``mu_c = 0``."""
    if p.mu_c == 0:
        return math.inf
    return p.L_c * math.sqrt(p.a_tilde * (p.mu_M + p.mu_c) / (4 * p.mu_c))


def couple_stress_length(p):
    """Couple-stress length ``L_c sqrt(a / 4)``."""
    return p.L_c * math.sqrt(p.a_tilde / 4)


def _relaxed(p, x1, x2, r, mu_c):
    kM, mM, me = p.kappa_M, p.mu_M, p.mu_e
    km, mm = p.kappa_m, p.mu_m
    zeta, eps, beta = p.zeta, p.epsilon, p.beta
    ell_2 = p.ell_2 if mu_c > 0 else math.inf
    k1 = _Kernels(r, p.ell_1)
    k2 = _Kernels(r, ell_2)
    r2 = r * r
    r4 = r2 * r2
    d = x1 * x1 - x2 * x2
    g1 = k1.dphi * x1 / r
    g2 = k1.dphi * x2 / r
    cs = mu_c / (me * (mu_c + me))

    u1 = (kM * x1 * x2 / (FOUR_PI * mM * (kM + mM) * r2)
          + zeta**2 * x1 * x2 / (TWO_PI * beta * (kM + mM) * r2) * k1.phi
          - cs * x1 * x2 / (TWO_PI * r2) * k2.phi)
    u2 = (kM * x2**2 / (FOUR_PI * mM * (kM + mM) * r2)
          - (kM + 2 * mM) / (FOUR_PI * mM * (kM + mM)) * np.log(r)
          - zeta**2 / (FOUR_PI * beta * (kM + mM)) * (d / r2 * k1.phi + k1.k0)
          + cs / FOUR_PI * (d / r2 * k2.phi - k2.k0))

    a = kM / (FOUR_PI * mm * (kM + mM))
    zc = zeta * eps / (TWO_PI * (km + mm) * beta)
    P11 = (-a * x2 * d / r4 + zeta * x2 / (FOUR_PI * (kM + mM) * r) * k1.psi
           - zc * x2 * d / r4 * k1.phi + zc * x1 * x2 / r2 * g1)
    shared = a * x1 * d / r4 + zc * x1 * d / r4 * k1.phi + zc * x1 * x2 / r2 * g2
    psi2 = x1 / (FOUR_PI * me * r) * k2.psi
    P12 = shared + psi2
    P21 = shared - psi2 - x1 / (TWO_PI * mm * r2)
    P22 = (-x2 / (TWO_PI * (km + mm) * r2) + a * x2 * d / r4
           - zeta * (km - mm) * x2 / (FOUR_PI * (kM + mM) * (km + mm) * r) * k1.psi
           + zc * x2 * d / r4 * k1.phi - zc * x1 * x2 / r2 * g1)
    return dict(u1=u1, u2=u2, P11=P11, P12=P12, P21=P21, P22=P22)


def _zero_poisson(p, x1, x2, r):
    if abs(p.lambda_e) > 1e-14 * p.mu_e or abs(p.lambda_m) > 1e-14 * p.mu_m:
        raise ContractError("ZeroPoissonRelaxed requires lambda_e = lambda_m = 0")
    mM, me, mm, mc = p.mu_M, p.mu_e, p.mu_m, p.mu_c
    k2 = _Kernels(r, p.ell_2)
    r2 = r * r
    r4 = r2 * r2
    d = x1 * x1 - x2 * x2
    cs = mc / (me * (me + mc))
    psi2 = x1 / (FOUR_PI * me * r) * k2.psi
    return dict(
        u1=x1 * x2 / (8 * math.pi * r2) * (1 / mM - 4 * cs * k2.phi),
        u2=(x2**2 / (8 * math.pi * mM * r2) - 3 / (8 * math.pi * mM) * np.log(r)
            + cs / FOUR_PI * (d / r2 * k2.phi - k2.k0)),
        P11=-x2 * d / (8 * math.pi * mm * r4),
        P12=x1 * d / (8 * math.pi * mm * r4) + psi2,
        P21=-x1 * (3 * x1**2 + 5 * x2**2) / (8 * math.pi * mm * r4) - psi2,
        P22=-x2 * (x1**2 + 3 * x2**2) / (8 * math.pi * mm * r4),
    )


def _micro_stretch(p, x1, x2, r):
    mM, kM, ke, mc = p.mu_M, p.kappa_M, p.kappa_e, p.mu_c
    ell_1, ell_2 = stretch_lengths(p)
    k1 = _Kernels(r, ell_1)
    k2 = _Kernels(r, ell_2)
    r2 = r * r
    d = x1 * x1 - x2 * x2
    s = (ke - kM) / ((ke + mM) * (kM + mM))
    cs = mc / (mM * (mc + mM))
    diag = -(ke - kM) * x2 / (FOUR_PI * ke * (kM + mM) * r) * k1.psi
    skew = x1 / (FOUR_PI * mM * r) * k2.psi
    return dict(
        u1=(kM * x1 * x2 / (FOUR_PI * mM * (kM + mM) * r2) + s / TWO_PI * x1 * x2 / r2 * k1.phi
            - cs / TWO_PI * x1 * x2 / r2 * k2.phi),
        u2=(kM * x2**2 / (FOUR_PI * mM * (kM + mM) * r2)
            - (kM + 2 * mM) / (FOUR_PI * mM * (kM + mM)) * np.log(r)
            + cs / FOUR_PI * (d / r2 * k2.phi - k2.k0)
            - s / FOUR_PI * (d / r2 * k1.phi + k1.k0)),
        P11=diag, P22=diag.copy(), P12=skew, P21=-skew,
    )


def _cosserat_like(p, x1, x2, r, weight, ell):
    """Shared micropolar / couple-stress block; ``weight`` is alpha/(mu_M+alpha)."""
    lM, mM = p.lambda_M, p.mu_M
    k = _Kernels(r, ell)
    r2 = r * r
    d = x1 * x1 - x2 * x2
    c0 = (lM + mM) / (FOUR_PI * mM * (lM + 2 * mM))
    skew = x1 / (FOUR_PI * mM * r2) * k.c1
    zero = np.zeros_like(r)
    return dict(
        u1=c0 * x1 * x2 / r2 - weight / (TWO_PI * mM) * x1 * x2 / r2 * k.phi,
        u2=(c0 * x2**2 / r2 - (lM + 3 * mM) / (FOUR_PI * mM * (lM + 2 * mM)) * np.log(r)
            - weight / (FOUR_PI * mM) * k.k0 + weight / (FOUR_PI * mM) * d / r2 * k.phi),
        P11=zero, P22=zero.copy(), P12=skew, P21=-skew,
    )


def _micropolar(p, x1, x2, r):
    if not p.mu_c > 0:
        raise ContractError("Micropolar requires mu_c > 0")
    return _cosserat_like(p, x1, x2, r, p.mu_c / (p.mu_M + p.mu_c), micropolar_length(p))


def _couple_stress(p, x1, x2, r):
    return _cosserat_like(p, x1, x2, r, 1.0, couple_stress_length(p))


def _kelvin(lam, mu, x1, x2, r):
    c0 = (lam + mu) / (FOUR_PI * mu * (lam + 2 * mu))
    return (c0 * x1 * x2 / r**2,
            c0 * x2**2 / r**2 - (lam + 3 * mu) / (FOUR_PI * mu * (lam + 2 * mu)) * np.log(r))


def _classical_macro(p, x1, x2, r):
    lM, mM, me, mm, lm = p.lambda_M, p.mu_M, p.mu_e, p.mu_m, p.lambda_m
    zeta = p.zeta
    u1, u2 = _kelvin(lM, mM, x1, x2, r)
    r2 = r * r
    r4 = r2 * r2
    d = x1 * x1 - x2 * x2
    c = (lM + mM) / (FOUR_PI * mm * (lM + 2 * mM))
    return dict(
        u1=u1, u2=u2,
        P11=zeta * x2 / (FOUR_PI * (lM + 2 * mM) * r2) - c * x2 * d / r4,
        P12=x1 / (FOUR_PI * me * r2) + c * x1 * d / r4,
        P21=-x1 / (FOUR_PI * me * r2) - x1 / (TWO_PI * mm * r2) + c * x1 * d / r4,
        P22=(-(zeta * lm + 2 * (lM + 2 * mM)) * x2
             / (FOUR_PI * (lm + 2 * mm) * (lM + 2 * mM) * r2) + c * x2 * d / r4),
    )


def _classical_micro(p, x1, x2, r):
    lm, mm, km = p.lambda_m, p.mu_m, p.kappa_m
    ke, me, mc = p.kappa_e, p.mu_e, p.mu_c
    v1, v2 = _kelvin(lm, mm, x1, x2, r)
    r2 = r * r
    r4 = r2 * r2
    extra = (ke - mc) / (FOUR_PI * (mc + me) * (ke + me))
    q = FOUR_PI * mm * (km + mm) * r4
    return dict(
        u1=v1 + extra * x1 * x2 / r2,
        u2=(v2 + extra * x2**2 / r2
            - (mc + ke + 2 * me) / (FOUR_PI * (mc + me) * (ke + me)) * np.log(r)),
        P11=km * x2 * (x2**2 - x1**2) / q,
        P12=-km * x1 * (x2**2 - x1**2) / q,
        P21=-x1 * (x1**2 * (km + 2 * mm) + x2**2 * (3 * km + 2 * mm)) / q,
        P22=x2 * (x1**2 * (km - 2 * mm) - x2**2 * (km + 2 * mm)) / q,
    )


_DISPATCH = {
    ModelKind.RelaxedMicromorphic: lambda p, x1, x2, r: _relaxed(p, x1, x2, r, p.mu_c),
    ModelKind.PureRelaxed: lambda p, x1, x2, r: _relaxed(p, x1, x2, r, 0.0),
    ModelKind.ZeroPoissonRelaxed: _zero_poisson,
    ModelKind.MicroStretch: _micro_stretch,
    ModelKind.Micropolar: _micropolar,
    ModelKind.CoupleStress: _couple_stress,
    ModelKind.ClassicalMacro: _classical_macro,
    ModelKind.ClassicalMicro: _classical_micro,
}

_SWAP = {"u1": "u2", "u2": "u1", "P11": "P22", "P22": "P11", "P12": "P21", "P21": "P12"}


def _direction(direction):
    d = str(direction).lower().lstrip("x")
    if d not in ("1", "2"):
        raise ContractError(f"direction must be 'x1' or 'x2', got {direction!r}")
    return int(d)


def force_fields(p, model, x1, x2, direction="x2"):
    """Field components as a dict of arrays (no theta3)."""
    model = ModelKind(model)
    if model not in _DISPATCH:
        raise ContractError(f"{model.value} has no concentrated-force solution")
    swap = _direction(direction) == 1
    if swap:
        x1, x2 = x2, x1
    x1, x2, r = field_point((x1, x2))
    out = _DISPATCH[model](p, x1, x2, r)
    if swap:
        out = {_SWAP[k]: v for k, v in out.items()}
    return out


def eval_force(p, model, x, direction="x2"):
    """Kinematic fields of a unit force at the origin, evaluated at ``x``.

    Parameters
    ----------
    p : MaterialParams
    model : ModelKind
    x : array_like, shape (2, ...)
        Field point(s).
    direction : {'x1', 'x2'}
        Direction of the force.
    """
    f = force_fields(p, model, x[0], x[1], direction)
    return KinematicState(theta3=0.5 * (f["P21"] - f["P12"]), **f)


def micro_rotation_force(p, model, x, direction="x2"):
    """Micro-rotation from its own closed form (independent of the P block)."""
    model = ModelKind(model)
    sign = 1.0
    x1, x2 = x[0], x[1]
    if _direction(direction) == 1:
        x1, x2 = x2, x1
        sign = -1.0
    x1, x2, r = field_point((x1, x2))
    r2 = r * r
    if model in (ModelKind.RelaxedMicromorphic, ModelKind.ZeroPoissonRelaxed):
        k = _Kernels(r, p.ell_2)
        val = -x1 / (FOUR_PI * r2) * (1 / p.mu_M - k.k1z / p.mu_e) if p.mu_c > 0 else \
            -x1 / (FOUR_PI * p.mu_m * r2)
    elif model is ModelKind.PureRelaxed:
        val = -x1 / (FOUR_PI * p.mu_m * r2)
    elif model in (ModelKind.MicroStretch, ModelKind.Micropolar, ModelKind.CoupleStress):
        if model is ModelKind.Micropolar and not p.mu_c > 0:
            raise ContractError("Micropolar requires mu_c > 0")
        ell = couple_stress_length(p) if model is ModelKind.CoupleStress else micropolar_length(p)
        val = -x1 / (FOUR_PI * p.mu_M * r2) * _Kernels(r, ell).c1 if math.isfinite(ell) \
            else np.zeros_like(r)
    elif model is ModelKind.ClassicalMacro:
        val = -x1 / (FOUR_PI * p.mu_M * r2)
    elif model is ModelKind.ClassicalMicro:
        val = -x1 / (FOUR_PI * p.mu_m * r2)
    else:
        raise ContractError(f"{model.value} has no concentrated-force solution")
    return sign * val


def grad_phi1(p, x):
    """Analytic gradient ``(dPhi_1/dx1, dPhi_1/dx2)``."""
    x1, x2, r = field_point(x)
    if not math.isfinite(p.ell_1):
        raise DomainError("ell_1 must be finite")
    dphi = _Kernels(r, p.ell_1).dphi
    return np.stack([dphi * x1 / r, dphi * x2 / r])
