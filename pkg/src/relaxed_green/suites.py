"""Named verification suites behind the ``verify`` command.

Every check yields a record ``{check, params, result, tolerance, pass}``.
Suites that depend on the material use the caller's parameters; the
``bessel`` and ``figures`` suites are parameter-free.
"""

from __future__ import annotations

import math

import numpy as np

from . import verification as V
from .models import LoadCase
from .special_functions import EULER_GAMMA, bessel_k, kernel_table

__all__ = ["SUITES", "DEFAULT_SUITES", "run_suites", "bessel_identities"]


def _record(check, params, result, tolerance, ok):
    return {"check": check, "params": params, "result": result,
            "tolerance": tolerance, "pass": bool(ok)}


def bessel_identities(n=1000):
    """Worst-case errors of the recurrence, derivative and limiting laws."""
    z = np.geomspace(1e-6, 100.0, n)
    k0, k1, k2 = (bessel_k(i, z) for i in (0, 1, 2))
    out = {"recurrence": float(np.max(np.abs(k2 - k0 - 2 * k1 / z) / k2))}
    h = 1e-3 * np.minimum(z, 1.0)
    d = lambda n: (8 * (bessel_k(n, z + h) - bessel_k(n, z - h))
                   - (bessel_k(n, z + 2 * h) - bessel_k(n, z - 2 * h))) / (12 * h)
    dk0, dk1 = d(0), d(1)
    out["derivative_k0"] = float(np.max(np.abs(dk0 + k1) / k1))
    out["derivative_k1"] = float(np.max(np.abs(dk1 + k0 + k1 / z) / (k0 + k1 / z)))
    out["small_z_k1"] = abs(1e-4 * bessel_k(1, 1e-4) - 1.0)
    out["small_z_k0"] = abs(bessel_k(0, 1e-8) + math.log(0.5e-8) + EULER_GAMMA)
    out["small_z_phi"] = abs(kernel_table(1e-6)["phi"] - 0.5)
    big = np.array([50.0, 100.0, 300.0])
    ratio = bessel_k(0, big) / (np.sqrt(math.pi / (2 * big)) * np.exp(-big))
    out["large_z_ratio"] = float(np.max(np.abs(ratio - 1.0)))
    out["monotone"] = float(min(np.min(-np.diff(k)) for k in (k0, k1, k2)) > 0)
    return out


_BESSEL_TOL = {"recurrence": 1e-12, "derivative_k0": 1e-8, "derivative_k1": 1e-8,
               "small_z_k1": 1e-6, "small_z_k0": 1e-12, "small_z_phi": 1e-5,
               "large_z_ratio": 1e-2}


def _bessel(p, label):
    res = bessel_identities()
    out = [_record(f"bessel.{k}", None, v, _BESSEL_TOL[k], v <= _BESSEL_TOL[k])
           for k, v in res.items() if k in _BESSEL_TOL]
    out.append(_record("bessel.monotone", None, res["monotone"], None, res["monotone"] == 1.0))
    return out


def _fourier(p, label):
    out = []
    for load in LoadCase:
        gap = V.fourier_consistency(p, load)
        out.append(_record(f"fourier.{load.value}", label, gap, 1e-9, gap <= 1e-9))
    return out


def _determinant(p, label):
    gap = V.determinant_consistency(p)
    return [_record("determinant", label, gap, 1e-10, gap <= 1e-10)]


def _sample_points(p, n, seed=0):
    rng = np.random.default_rng(seed)
    ell = p.ell_2 if math.isfinite(p.ell_2) else p.ell_1
    r = np.exp(rng.uniform(math.log(0.2), math.log(3.0), n)) * ell
    a = rng.uniform(0, 2 * math.pi, n)
    return list(zip(r * np.cos(a), r * np.sin(a)))


def _applicable(p, model, load):
    from .models import ModelKind as M

    if model is M.ZeroPoissonRelaxed:
        return p.lambda_e == 0 and p.lambda_m == 0
    if model in (M.Micropolar, M.MicroStretch, M.GaugeDislocation):
        return p.mu_c > 0
    return True


def _residuals(p, label, points=20):
    out = []
    for model, load in V.supported_pairs():
        if not _applicable(p, model, load):
            continue
        reps = [V.pde_residual(p, model, load, x) for x in _sample_points(p, points)]
        worst = max(r.terminal for r in reps)
        order = min(r.order_estimate for r in reps if max(r.equation_residuals[0]) > 1e-8) \
            if any(max(r.equation_residuals[0]) > 1e-8 for r in reps) else math.inf
        out.append(_record(f"residual.{model.value}.{load.value}", label,
                           {"terminal": worst, "min_order": order}, 1e-6,
                           all(r.converged for r in reps)))
    return out


def _flux(p, label):
    from .models import ModelKind as M

    ell = p.ell_2 if math.isfinite(p.ell_2) else p.ell_1
    out = []
    for model in M:
        if model is M.GaugeDislocation or not _applicable(p, model, "force"):
            continue
        for load in LoadCase:
            reps = [V.flux_balance(p, model, load, f * ell) for f in (0.5, 1.0, 5.0)]
            if load is LoadCase.force:
                err = max(max(abs(r.force_resultant[0]), abs(r.force_resultant[1] + 1.0))
                          for r in reps)
                out.append(_record(f"flux.{model.value}.force", label, err, 1e-5, err <= 1e-5))
            elif model is not M.ClassicalMicro:
                mags = [abs(r.moment_resultant) for r in reps]
                err = max(abs(m - 1.0) for m in mags)
                drift = max(mags) - min(mags)
                out.append(_record(f"flux.{model.value}.couple", label,
                                   {"moment": reps[0].moment_resultant, "error": err,
                                    "drift": drift},
                                   {"magnitude": 1e-4, "drift": 1e-5},
                                   err <= 1e-4 and drift <= 1e-5))
    return out


def _limits(p, label):
    if not p.mu_c > 0:
        return [_record("limits", label, "skipped: needs mu_c > 0", None, True)]
    return [_record(f"limit.{r.name}.{r.load}", label,
                    {"gaps": r.gaps, "monotone": r.monotone}, 1e-6,
                    r.monotone and r.terminal <= 1e-6)
            for r in V.limit_consistency(p)]


def _singularity(p, label):
    out = []
    for name, expected, rep in V.singularity_checks(p):
        out.append(_record(f"singularity.{name.replace(' ', '.')}", label,
                           {"kind": rep.kind, "exponent": rep.exponent},
                           {"expected": list(expected), "exponent_tol": 0.05},
                           V.order_matches(expected, rep)))
    return out


_TRANSCRIPTION_TOL = {"zero_poisson": 1e-12, "micro_rotation": 1e-13,
                      "gauge_trace": 1e-15, "gauge_kappa_e": 1e-14}


def _transcription(p, label):
    return [_record(f"transcription.{k}", label, v, _TRANSCRIPTION_TOL[k],
                    v <= _TRANSCRIPTION_TOL[k])
            for k, v in V.transcription_checks(p).items()]


def _figures(p, label):
    from .profiles import check_fig5_ordering, check_fig7, check_fig8

    out = []
    for name, fn in (("fig5.ordering", check_fig5_ordering), ("fig7", check_fig7),
                     ("fig8", check_fig8)):
        ok, detail = fn()
        out.append(_record(name, "figure parameter set", detail, None, ok))
    return out


SUITES = {
    "bessel": _bessel,
    "fourier": _fourier,
    "determinant": _determinant,
    "residuals": _residuals,
    "flux": _flux,
    "limits": _limits,
    "singularity": _singularity,
    "transcription": _transcription,
    "figures": _figures,
}

# the figure suite runs on fixed parameter sets and is opt-in
DEFAULT_SUITES = tuple(k for k in SUITES if k != "figures")


def run_suites(p, names=DEFAULT_SUITES, label=None):
    records = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        records.extend(SUITES[name](p, label))
    return records
