"""Stresses, micro stresses, moment stresses and the elastic distortion."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .fd import StencilSampler, richardson_gradient
from .gauge_dislocation import gauge_fields
from .greens_couple import couple_fields
from .greens_force import force_fields
from .models import LoadCase, ModelKind, field_point

__all__ = [
    "Moduli",
    "StressState",
    "effective_moduli",
    "evaluate_fields",
    "default_step",
    "gradient_u",
    "curl_P",
    "stresses",
    "elastic_distortion",
    "stress_state",
]

_P_NAMES = ("P11", "P12", "P21", "P22")


@dataclass(frozen=True)
class Moduli:
    """The constants entering the constitutive law of one model."""

    mu_e: float
    lambda_e: float
    mu_c: float
    mu_m: float
    lambda_m: float
    curvature: float
    a1: float = 1.0
    a2: float = 1.0

    @classmethod
    def from_params(cls, p, **changes):
        base = dict(mu_e=p.mu_e, lambda_e=p.lambda_e, mu_c=p.mu_c, mu_m=p.mu_m,
                    lambda_m=p.lambda_m, curvature=p.curvature, a1=p.a1, a2=p.a2)
        base.update(changes)
        return cls(**base)


def effective_moduli(p, model):
    """Constitutive constants of ``model`` built from the relaxed parameters."""
    model = ModelKind(model)
    if model in (ModelKind.RelaxedMicromorphic, ModelKind.ZeroPoissonRelaxed,
                 ModelKind.GaugeDislocation, ModelKind.ClassicalMicro):
        return Moduli.from_params(p)
    if model is ModelKind.PureRelaxed:
        return Moduli.from_params(p, mu_c=0.0)
    if model is ModelKind.MicroStretch:
        return Moduli.from_params(p, mu_e=p.mu_M, lambda_e=p.kappa_e - p.mu_M,
                                  mu_m=math.inf, lambda_m=math.nan)
    if model is ModelKind.Micropolar:
        return Moduli.from_params(p, mu_e=p.mu_M, lambda_e=p.lambda_M,
                                  mu_m=math.inf, lambda_m=math.nan)
    if model is ModelKind.CoupleStress:
        return Moduli.from_params(p, mu_e=p.mu_M, lambda_e=p.lambda_M, mu_c=math.inf,
                                  mu_m=math.inf, lambda_m=math.nan)
    if model is ModelKind.ClassicalMacro:
        return Moduli.from_params(p, curvature=0.0)
    raise ContractError(f"no constitutive law for {model}")


def evaluate_fields(p, model, load, x1, x2, direction="x2", **kw):
    """Closed-form fields as a dict; the gauge model returns ``e11..e22``."""
    model = ModelKind(model)
    load = LoadCase(load)
    if model is ModelKind.GaugeDislocation:
        if load is not LoadCase.couple:
            raise ContractError("GaugeDislocation is solved for the couple load only")
        return gauge_fields(p, x1, x2)
    if load is LoadCase.force:
        return force_fields(p, model, x1, x2, direction)
    return couple_fields(p, model, x1, x2, **kw)


def _field_scale(p, model):
    """Smallest finite length on which the fields of ``model`` vary."""
    from .greens_force import couple_stress_length, micropolar_length, stretch_lengths

    model = ModelKind(model)
    if model is ModelKind.MicroStretch:
        lengths = stretch_lengths(p)
    elif model is ModelKind.Micropolar:
        lengths = (micropolar_length(p),)
    elif model is ModelKind.CoupleStress:
        lengths = (couple_stress_length(p),)
    elif model in (ModelKind.ClassicalMacro, ModelKind.ClassicalMicro):
        lengths = ()
    elif model is ModelKind.PureRelaxed:
        lengths = (p.ell_1,)
    else:
        lengths = (p.ell_1, p.ell_2)
    return min([l for l in lengths if math.isfinite(l) and l > 0], default=math.inf)


def default_step(p, r, model=None):
    """``1e-4 max(r, ell_2)``, capped at ``r/50`` and at the model's smallest length.

    Near the origin ``Du`` and ``P`` are both singular while ``Du - P`` is not,
    so the step has to shrink with ``r`` to keep the difference accurate.
    """
    r = np.asarray(r, dtype=float)
    ell = p.ell_2 if math.isfinite(p.ell_2) else 0.0
    h = 1e-4 * np.maximum(r, ell)
    h = np.minimum(h, r / 50)
    if model is not None:
        h = np.minimum(h, 1e-2 * _field_scale(p, model))
    return h


def gradient_u(p, model, load, x, h=None, *, direction="x2", levels=2):
    """Displacement gradient ``Du[i, j] = du_i/dx_j`` by Richardson extrapolation.

    Two step sizes (``h`` and ``h/2``) give fourth-order accuracy.
    """
    x1, x2, r = field_point(x)
    h = default_step(p, r, model) if h is None else np.asarray(h, dtype=float)
    if np.any(r <= 10 * h):
        raise ContractError("step too large: need r > 10 h")
    f = lambda a, b: evaluate_fields(p, model, load, a, b, direction)
    g = richardson_gradient(f, x1, x2, h, ("u1", "u2"), levels)
    return np.array([[g["u1"][0], g["u1"][1]], [g["u2"][0], g["u2"][1]]])


def curl_P(p, model, load, x, h=None, *, direction="x2", levels=2):
    """In-plane curl ``(P12,1 - P11,2, P22,1 - P21,2)`` with the same machinery."""
    x1, x2, r = field_point(x)
    h = default_step(p, r, model) if h is None else np.asarray(h, dtype=float)
    if np.any(r <= 10 * h):
        raise ContractError("step too large: need r > 10 h")
    f = lambda a, b: evaluate_fields(p, model, load, a, b, direction)
    g = richardson_gradient(f, x1, x2, h, _P_NAMES, levels)
    return np.array([g["P12"][0] - g["P11"][1], g["P22"][0] - g["P21"][1]])


@dataclass(frozen=True)
class StressState:
    sigma: np.ndarray
    sigma33: np.ndarray
    sigma_micro: np.ndarray
    m13: np.ndarray
    m23: np.ndarray
    m31: np.ndarray
    m32: np.ndarray
    e: np.ndarray


def elastic_distortion(Du, P):
    """``e = Du - P``."""
    return np.asarray(Du) - np.asarray(P)


def stresses(p, Du, P, curl2d_P):
    """Constitutive law of the relaxed continuum.

    ``p`` is a :class:`MaterialParams` or :class:`Moduli`; ``Du`` and ``P``
    have shape ``(2, 2, ...)`` and ``curl2d_P`` shape ``(2, ...)``.
    """
    mod = p if isinstance(p, Moduli) else Moduli.from_params(p)
    Du = np.asarray(Du, dtype=float)
    P = np.asarray(P, dtype=float)
    curl = np.asarray(curl2d_P, dtype=float)
    e = Du - P
    le, me, mc = mod.lambda_e, mod.mu_e, mod.mu_c
    s11 = (le + 2 * me) * e[0, 0] + le * e[1, 1]
    s22 = (le + 2 * me) * e[1, 1] + le * e[0, 0]
    s12 = (me + mc) * e[0, 1] + (me - mc) * e[1, 0]
    s21 = (me + mc) * e[1, 0] + (me - mc) * e[0, 1]
    sigma = np.array([[s11, s12], [s21, s22]])
    sigma33 = le / (2 * (le + me)) * (s11 + s22)
    with np.errstate(invalid="ignore"):
        trP = P[0, 0] + P[1, 1]
        symP12 = 0.5 * (P[0, 1] + P[1, 0])
        mm, lm = mod.mu_m, mod.lambda_m
        sigma_micro = np.array([[2 * mm * P[0, 0] + lm * trP, 2 * mm * symP12],
                                [2 * mm * symP12, 2 * mm * P[1, 1] + lm * trP]])
        if not (math.isfinite(mm) and math.isfinite(lm)):
            sigma_micro = np.full_like(sigma, np.nan)
        c = mod.curvature
        m13 = c * curl[0] if c else np.zeros_like(curl[0])
        m23 = c * curl[1] if c else np.zeros_like(curl[1])
    ratio = (mod.a1 - mod.a2) / (mod.a1 + mod.a2)
    return StressState(sigma=sigma, sigma33=sigma33, sigma_micro=sigma_micro,
                       m13=m13, m23=m23, m31=ratio * m13, m32=ratio * m23, e=e)


def stress_state(p, model, load, x, h=None, *, direction="x2", levels=3):
    """Stresses of ``model`` at ``x`` with derivatives taken numerically.

    The couple-stress model has an indeterminate skew stress in its local
    law; it is recovered from the moment balance as ``-div(m)/2``.
    The gauge model uses ``P = -e`` and ``Du = 0``. The classical
    micro-scale limit has no finite moment stress (reported as NaN).
    """
    model = ModelKind(model)
    load = LoadCase(load)
    x1, x2, r = field_point(x)
    h = default_step(p, r, model) if h is None else np.asarray(h, dtype=float)
    mod = effective_moduli(p, model)
    f = lambda a, b: evaluate_fields(p, model, load, a, b, direction)
    here = f(x1, x2)

    if model is ModelKind.GaugeDislocation:
        g = richardson_gradient(f, x1, x2, h, ("e11", "e12", "e21", "e22"), levels)
        P = -np.array([[here["e11"], here["e12"]], [here["e21"], here["e22"]]])
        Du = np.zeros_like(P)
        curl = -np.array([g["e12"][0] - g["e11"][1], g["e22"][0] - g["e21"][1]])
        return stresses(mod, Du, P, curl)

    g = richardson_gradient(f, x1, x2, h, ("u1", "u2") + _P_NAMES, levels)
    Du = np.array([[g["u1"][0], g["u1"][1]], [g["u2"][0], g["u2"][1]]])
    P = np.array([[here["P11"], here["P12"]], [here["P21"], here["P22"]]])
    curl = np.array([g["P12"][0] - g["P11"][1], g["P22"][0] - g["P21"][1]])

    if model is ModelKind.CoupleStress:
        sym_mod = Moduli.from_params(p, mu_e=p.mu_M, lambda_e=p.lambda_M, mu_c=0.0,
                                     mu_m=math.inf, lambda_m=math.nan)
        st = stresses(sym_mod, Du, np.zeros_like(P), curl)
        s = StencilSampler(f, x1, x2, h, half_width=2)
        lap = s.d("P12", 2, 0) + s.d("P12", 0, 2)
        tau = -0.5 * mod.curvature * lap
        sigma = st.sigma.copy()
        sigma[0, 1] = st.sigma[0, 1] + tau
        sigma[1, 0] = st.sigma[1, 0] - tau
        m13, m23 = mod.curvature * curl[0], mod.curvature * curl[1]
        ratio = (mod.a1 - mod.a2) / (mod.a1 + mod.a2)
        return StressState(sigma=sigma, sigma33=st.sigma33, sigma_micro=st.sigma_micro,
                           m13=m13, m23=m23, m31=ratio * m13, m32=ratio * m23,
                           e=Du - P)
    st = stresses(mod, Du, P, curl)
    if model is ModelKind.ClassicalMicro:
        nan = np.full_like(st.m13, np.nan)
        st = StressState(sigma=st.sigma, sigma33=st.sigma33, sigma_micro=st.sigma_micro,
                         m13=nan, m23=nan, m31=nan, m32=nan, e=st.e)
    return st
