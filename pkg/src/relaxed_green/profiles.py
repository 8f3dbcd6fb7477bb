"""Line profiles and the figure data sets built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constitutive import evaluate_fields, gradient_u, stress_state
from .errors import ContractError
from .material import DimensionlessParams, from_dimensionless
from .models import LoadCase, ModelKind

__all__ = [
    "QUANTITIES",
    "ProfileSpec",
    "ray_points",
    "sample",
    "profile_table",
    "FIG4",
    "FIG6",
    "fig5_table",
    "fig7_table",
    "fig8_table",
    "check_fig5_ordering",
    "check_fig7",
    "check_fig8",
]

_DIRECT = ("u1", "u2", "P11", "P12", "P21", "P22")
_STRESS = ("sigma11", "sigma12", "sigma21", "sigma22", "m13", "m23")
_DISTORTION = ("e11", "e12", "e21", "e22")
QUANTITIES = _DIRECT + ("norm_u", "theta3") + _DISTORTION + _STRESS

FIG4 = DimensionlessParams(1.2, 3.0, 5.0, 3.0)
FIG6 = DimensionlessParams(3.0, 2.0, 5.0, 3.0)
FIG5_MODELS = ("RelaxedMicromorphic", "PureRelaxed", "MicroStretch", "Micropolar",
               "CoupleStress", "ClassicalMacro", "ClassicalMicro")
FIG7_MODELS = ("RelaxedMicromorphic", "PureRelaxed", "MicroStretch", "Micropolar",
               "CoupleStress", "ClassicalMacro", "ClassicalMicro")


@dataclass(frozen=True)
class ProfileSpec:
    axis: str
    r_values: tuple
    quantity: str

    def __post_init__(self):
        if self.axis not in ("x1+", "x2+", "radial"):
            raise ContractError(f"unknown axis {self.axis!r}")
        if self.quantity not in QUANTITIES:
            raise ContractError(f"unknown quantity {self.quantity!r}")
        r = np.asarray(self.r_values, dtype=float)
        if r.size == 0 or np.any(r <= 0) or np.any(np.diff(r) <= 0):
            raise ContractError("r_values must be positive and increasing")


def ray_points(axis, r):
    """Points at distance ``r`` along ``x1+``, ``x2+`` or the diagonal (``radial``)."""
    r = np.asarray(r, dtype=float)
    if axis == "x1+":
        return r, np.zeros_like(r)
    if axis == "x2+":
        return np.zeros_like(r), r
    c = math.sqrt(0.5)
    return c * r, c * r


def sample(p, model, load, quantity, x1, x2, *, direction="x2"):
    """One named quantity of ``model`` at the given points."""
    model, load = ModelKind(model), LoadCase(load)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    gauge = model is ModelKind.GaugeDislocation
    if quantity in _STRESS:
        st = stress_state(p, model, load, (x1, x2), direction=direction)
        if quantity.startswith("sigma"):
            i, j = int(quantity[-2]) - 1, int(quantity[-1]) - 1
            return st.sigma[i, j]
        return getattr(st, quantity)
    f = evaluate_fields(p, model, load, x1, x2, direction)
    if quantity in _DISTORTION:
        if gauge:
            return f[quantity]
        i, j = int(quantity[1]) - 1, int(quantity[2]) - 1
        Du = gradient_u(p, model, load, (x1, x2), direction=direction)
        return Du[i, j] - f[f"P{i + 1}{j + 1}"]
    if gauge:
        raise ContractError(f"{quantity} is not defined for the gauge model (only e)")
    if quantity == "norm_u":
        return np.hypot(f["u1"], f["u2"])
    if quantity == "theta3":
        return 0.5 * (f["P21"] - f["P12"])
    return f[quantity]


def profile_table(p, models, load, spec, *, scale=1.0, length=1.0, direction="x2"):
    """Columns ``r`` and one per model; ``r`` is divided by ``length``."""
    r = np.asarray(spec.r_values, dtype=float)
    x1, x2 = ray_points(spec.axis, r)
    cols = {"r": r / length}
    for m in models:
        cols[ModelKind(m).value] = scale * np.asarray(
            sample(p, m, load, spec.quantity, x1, x2, direction=direction), dtype=float)
    return cols


def _r(p, lo, hi, n):
    return tuple(np.linspace(lo, hi, n) * p.ell_2)


def fig5_table(n=181, lo=0.2, hi=2.0):
    """Force load along x1+: ``u2 mu_M`` and ``theta3 mu_M ell_2`` per model."""
    p = from_dimensionless(FIG4)
    r = _r(p, lo, hi, n)
    u2 = profile_table(p, FIG5_MODELS, "force", ProfileSpec("x1+", r, "u2"),
                       scale=p.mu_M, length=p.ell_2)
    th = profile_table(p, FIG5_MODELS, "force", ProfileSpec("x1+", r, "theta3"),
                       scale=p.mu_M * p.ell_2, length=p.ell_2)
    return p, u2, th


def fig7_table(n=181, lo=0.2, hi=4.0):
    """Couple load along x1+: ``|u| mu_M ell_2`` per model (relaxed ``ell_2`` throughout)."""
    p = from_dimensionless(FIG6)
    r = _r(p, lo, hi, n)
    t = profile_table(p, FIG7_MODELS, "couple", ProfileSpec("x1+", r, "norm_u"),
                      scale=p.mu_M * p.ell_2, length=p.ell_2)
    return p, t


def fig8_table(g1, n=91, lo=0.2, hi=2.0):
    """``e12`` of the relaxed and gauge models along x1+ for one ``g1``."""
    p = from_dimensionless(DimensionlessParams(g1, FIG6.g2, FIG6.g3, FIG6.g4))
    r = _r(p, lo, hi, n)
    out = {}
    for q in ("e12", "e21"):
        t = profile_table(p, ("RelaxedMicromorphic", "GaugeDislocation"), "couple",
                          ProfileSpec("x1+", r, q), length=p.ell_2)
        out["r"] = t["r"]
        out[f"{q}_relaxed"] = t["RelaxedMicromorphic"]
        out[f"{q}_gauge"] = t["GaugeDislocation"]
    return p, out


def check_fig5_ordering(n=181):
    """``|u2|``: couple stress <= micropolar <= classical over ``[0.2, 2] ell_2``.

    Returns ``(ok, detail)``; ``detail`` records the first radius (in units of
    ``ell_2``) at which each inequality breaks, or ``None``.
    """
    _, u2, _ = fig5_table(n)
    cs, mp, cl = (np.abs(u2[k]) for k in ("CoupleStress", "Micropolar", "ClassicalMacro"))
    r = u2["r"]
    first = lambda bad: float(r[bad][0]) if bad.any() else None
    detail = {"cs_le_mp_breaks_at": first(cs > mp), "mp_le_cl_breaks_at": first(mp > cl),
              "cs_le_cl_breaks_at": first(cs > cl)}
    ok = all(v is None for v in detail.values())
    return ok, detail


def check_fig7(n=181):
    """Pure relaxed equals classical micro; constant ratio ``mu_M/mu_m`` to classical macro."""
    p, t = fig7_table(n)
    same = float(np.max(np.abs(t["PureRelaxed"] - t["ClassicalMicro"]) / t["ClassicalMicro"]))
    ratio = t["ClassicalMicro"] / t["ClassicalMacro"]
    expected = p.mu_M / p.mu_m
    gap = float(np.max(np.abs(ratio - expected)))
    ok = same <= 1e-12 and gap <= 1e-12 and abs(expected - 2 / 3) <= 1e-12
    return ok, {"pure_vs_micro": same, "ratio": float(ratio[-1]), "expected": expected,
                "ratio_spread": gap}


def check_fig8(g1_values=(3.0, 10.0, 50.0)):
    """The gauge and relaxed ``e12`` profiles approach each other as ``g1`` grows."""
    gaps = []
    for g1 in g1_values:
        _, t = fig8_table(g1)
        ref = np.max(np.abs(t["e12_gauge"]))
        gaps.append(float(np.max(np.abs(t["e12_relaxed"] - t["e12_gauge"])) / ref))
    ok = all(b < a for a, b in zip(gaps, gaps[1:]))
    return ok, {"g1": list(g1_values), "relative_gap": gaps}
