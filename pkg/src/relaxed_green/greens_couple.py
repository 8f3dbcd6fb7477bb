"""Fundamental solution for a unit concentrated couple.

The couple enters through the skew part of the micro-load,
``M12 - M21 = delta``. None of the fields depend on ``lambda_e`` or
``lambda_m``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ContractError
from .greens_force import _Kernels, couple_stress_length, micropolar_length
from .models import KinematicState, ModelKind, field_point
from .special_functions import EULER_GAMMA

__all__ = ["eval_couple", "micro_rotation_couple", "couple_fields", "COUPLE_MODELS"]

FOUR_PI = 4.0 * math.pi
TWO_PI = 2.0 * math.pi

COUPLE_MODELS = (
    ModelKind.RelaxedMicromorphic,
    ModelKind.ZeroPoissonRelaxed,
    ModelKind.PureRelaxed,
    ModelKind.MicroStretch,
    ModelKind.Micropolar,
    ModelKind.CoupleStress,
    ModelKind.ClassicalMacro,
    ModelKind.ClassicalMicro,
)


def _micro_block(p, x1, x2, r):
    """The ``mu_m`` part of P shared by several models."""
    r4 = r**4
    P11 = x1 * x2 / (TWO_PI * p.mu_m * r4)
    sym = (x2**2 - x1**2) / (FOUR_PI * p.mu_m * r4)
    return P11, sym


def _relaxed(p, x1, x2, r):
    if not p.mu_c > 0:
        return _pure(p, x1, x2, r, False)
    k = _Kernels(r, p.ell_2)
    bracket = 1.0 - p.mu_M / p.mu_e * k.k1z
    P11, sym = _micro_block(p, x1, x2, r)
    rot = k.k0 / (TWO_PI * p.curvature)
    return dict(
        u1=-x2 / (FOUR_PI * p.mu_M * r**2) * bracket,
        u2=x1 / (FOUR_PI * p.mu_M * r**2) * bracket,
        P11=P11, P12=sym - rot, P21=sym + rot, P22=-P11,
    )


def _pure(p, x1, x2, r, drop_rigid_rotation):
    P11, sym = _micro_block(p, x1, x2, r)
    log = np.log(r) if drop_rigid_rotation else np.log(r) + EULER_GAMMA
    rot = log / (TWO_PI * p.curvature)
    return dict(
        u1=-x2 / (FOUR_PI * p.mu_m * r**2),
        u2=x1 / (FOUR_PI * p.mu_m * r**2),
        P11=P11, P12=sym + rot, P21=sym - rot, P22=-P11,
    )


def _cosserat_like(p, x1, x2, r, ell, weight):
    k = _Kernels(r, ell)
    skew = -weight / (8 * math.pi * p.mu_M * ell**2) * k.k0
    zero = np.zeros_like(r)
    return dict(
        u1=-x2 / (FOUR_PI * p.mu_M * r**2) * k.c1,
        u2=x1 / (FOUR_PI * p.mu_M * r**2) * k.c1,
        P11=zero, P12=skew, P21=-skew, P22=zero.copy(),
    )


def _stretch_family(p, x1, x2, r, model):
    if model is ModelKind.CoupleStress:
        return _cosserat_like(p, x1, x2, r, couple_stress_length(p), 1.0)
    if not p.mu_c > 0:
        raise ContractError(f"{model.value} couple solution requires mu_c > 0")
    weight = (p.mu_c + p.mu_M) / p.mu_c
    return _cosserat_like(p, x1, x2, r, micropolar_length(p), weight)


def _classical(p, x1, x2, r, mu):
    P11, sym = _micro_block(p, x1, x2, r)
    return dict(
        u1=-x2 / (FOUR_PI * mu * r**2),
        u2=x1 / (FOUR_PI * mu * r**2),
        P11=P11, P12=sym, P21=sym.copy(), P22=-P11,
    )


def couple_fields(p, model, x1, x2, *, drop_rigid_rotation=False):
    """Field components as a dict of arrays (no theta3)."""
    model = ModelKind(model)
    x1, x2, r = field_point((x1, x2))
    if model in (ModelKind.RelaxedMicromorphic, ModelKind.ZeroPoissonRelaxed):
        if model is ModelKind.ZeroPoissonRelaxed and (p.lambda_e != 0 or p.lambda_m != 0):
            raise ContractError("ZeroPoissonRelaxed requires lambda_e = lambda_m = 0")
        if p.mu_c > 0:
            return _relaxed(p, x1, x2, r)
        return _pure(p, x1, x2, r, drop_rigid_rotation)
    if model is ModelKind.PureRelaxed:
        return _pure(p, x1, x2, r, drop_rigid_rotation)
    if model in (ModelKind.MicroStretch, ModelKind.Micropolar, ModelKind.CoupleStress):
        return _stretch_family(p, x1, x2, r, model)
    if model is ModelKind.ClassicalMacro:
        return _classical(p, x1, x2, r, p.mu_M)
    if model is ModelKind.ClassicalMicro:
        return _classical(p, x1, x2, r, p.mu_m)
    raise ContractError(f"{model.value} couple fields live in gauge_dislocation")


def eval_couple(p, model, x, *, drop_rigid_rotation=False):
    """Kinematic fields of a unit couple at the origin, evaluated at ``x``.

    ``drop_rigid_rotation`` removes the Euler-constant rigid micro-rotation
    of the pure model (it does not affect any stress).
    """
    f = couple_fields(p, model, x[0], x[1], drop_rigid_rotation=drop_rigid_rotation)
    return KinematicState(theta3=0.5 * (f["P21"] - f["P12"]), **f)


def micro_rotation_couple(p, model, x, *, drop_rigid_rotation=False):
    """Micro-rotation from its own closed form."""
    model = ModelKind(model)
    x1, x2, r = field_point(x)
    pure = model is ModelKind.PureRelaxed or (
        model in (ModelKind.RelaxedMicromorphic, ModelKind.ZeroPoissonRelaxed) and p.mu_c == 0)
    if pure:
        log = np.log(r) if drop_rigid_rotation else np.log(r) + EULER_GAMMA
        return -log / (TWO_PI * p.curvature)
    if model in (ModelKind.RelaxedMicromorphic, ModelKind.ZeroPoissonRelaxed,
                 ModelKind.MicroStretch, ModelKind.Micropolar):
        if not p.mu_c > 0:
            raise ContractError(f"{model.value} couple solution requires mu_c > 0")
        ell = p.ell_2 if model in (ModelKind.RelaxedMicromorphic,
                                   ModelKind.ZeroPoissonRelaxed) else micropolar_length(p)
        return _Kernels(r, ell).k0 / (TWO_PI * p.curvature)
    if model is ModelKind.CoupleStress:
        ell = couple_stress_length(p)
        return _Kernels(r, ell).k0 / (8 * math.pi * p.mu_M * ell**2)
    if model in (ModelKind.ClassicalMacro, ModelKind.ClassicalMicro):
        return np.zeros_like(r)
    raise ContractError(f"{model.value} couple fields live in gauge_dislocation")
