"""Material constants, derived scalars, admissibility and homogenization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .errors import DegenerateInputError, InadmissibleParameterError

__all__ = [
    "MaterialParams",
    "DimensionlessParams",
    "AdmissibilityReport",
    "derive",
    "from_dimensionless",
    "check_admissible",
    "homogenize_3d",
    "params_from_mapping",
    "load_params",
]


def _harmonic(a, b, what):
    if a + b == 0.0:
        raise DegenerateInputError(f"{what}: sum of moduli is zero")
    return a * b / (a + b)


@dataclass(frozen=True)
class MaterialParams:
    """Plane-strain moduli of the relaxed micromorphic continuum.

    The raw moduli are the constructor arguments. Every derived scalar is
    computed once in ``__post_init__`` and stored as a read-only attribute.
    ``ell_2`` is ``math.inf`` exactly when ``mu_c == 0``.
    """

    mu_e: float
    lambda_e: float
    mu_m: float
    lambda_m: float
    mu_c: float
    L_c: float
    a1: float = 1.0
    a2: float = 1.0
    a3: float = 0.0

    kappa_e: float = field(init=False)
    kappa_m: float = field(init=False)
    a_tilde: float = field(init=False)
    mu_M: float = field(init=False)
    kappa_M: float = field(init=False)
    lambda_M: float = field(init=False)
    beta: float = field(init=False)
    zeta: float = field(init=False)
    epsilon: float = field(init=False)
    ell_1: float = field(init=False)
    ell_2: float = field(init=False)
    curvature: float = field(init=False)

    def __post_init__(self):
        for f in fields(self):
            if f.init:
                object.__setattr__(self, f.name, float(getattr(self, f.name)))
        kappa_e = self.lambda_e + self.mu_e
        kappa_m = self.lambda_m + self.mu_m
        a_tilde = 0.5 * (self.a1 + self.a2)
        mu_M = _harmonic(self.mu_e, self.mu_m, "mu_M")
        kappa_M = _harmonic(kappa_e, kappa_m, "kappa_M")
        if kappa_m == 0.0 or self.mu_m == 0.0 or kappa_M + mu_M == 0.0:
            raise DegenerateInputError("micro moduli or kappa_M + mu_M vanish")
        beta = ((kappa_e + self.mu_e) * (kappa_m + self.mu_m)
                / ((kappa_e + kappa_m) * (self.mu_e + self.mu_m)))
        zeta = mu_M / self.mu_m - kappa_M / kappa_m
        epsilon = kappa_m * beta / (kappa_M + mu_M)
        ell_1 = self.L_c * _safe_sqrt(a_tilde * beta * mu_M / (4.0 * (kappa_M + mu_M)))
        if self.mu_c == 0.0:
            ell_2 = math.inf
        elif self.mu_e == 0.0:
            raise DegenerateInputError("mu_e = 0 makes ell_2 undefined")
        else:
            ell_2 = self.L_c * _safe_sqrt(
                a_tilde * mu_M * (self.mu_e + self.mu_c) / (4.0 * self.mu_c * self.mu_e))
        derived = dict(
            kappa_e=kappa_e, kappa_m=kappa_m, a_tilde=a_tilde, mu_M=mu_M,
            kappa_M=kappa_M, lambda_M=kappa_M - mu_M, beta=beta, zeta=zeta,
            epsilon=epsilon, ell_1=ell_1, ell_2=ell_2,
            curvature=a_tilde * mu_M * self.L_c**2,
        )
        for name, value in derived.items():
            object.__setattr__(self, name, value)

    def raw(self):
        """Raw moduli as a plain dict (the ``"raw"`` JSON schema)."""
        return {f.name: getattr(self, f.name) for f in fields(self) if f.init}

    def derived(self):
        """Derived scalars in display order."""
        names = ("kappa_e", "kappa_m", "a_tilde", "mu_M", "kappa_M", "lambda_M",
                 "beta", "zeta", "epsilon", "ell_1", "ell_2")
        return {n: getattr(self, n) for n in names}

    def with_changes(self, **changes):
        """Copy with some raw moduli replaced; derived fields are recomputed."""
        return replace(self, **changes)


def _safe_sqrt(x):
    return math.sqrt(x) if x >= 0.0 else math.nan


def derive(mu_e, lambda_e, mu_m, lambda_m, mu_c, L_c, a1=1.0, a2=1.0, a3=0.0):
    """Build :class:`MaterialParams` from raw moduli."""
    return MaterialParams(mu_e, lambda_e, mu_m, lambda_m, mu_c, L_c, a1, a2, a3)


@dataclass(frozen=True)
class DimensionlessParams:
    """The ``g1..g4`` parameterization used for the figure studies."""

    g1: float
    g2: float
    g3: float
    g4: float
    mu_M_ref: float = 1.0
    L_c_ref: float = 1.0
    a_tilde_ref: float = 1.0


def from_dimensionless(d):
    """Convert ``g1..g4`` plus reference scales to raw moduli.

    ``mu_e = g1 mu_M``, ``mu_c = g2 mu_M``, ``kappa_e = g3 mu_M`` and
    ``kappa_M = g4 mu_M``; the micro moduli follow from the harmonic means.
    """
    if not d.g1 > 1.0:
        raise InadmissibleParameterError("g1 must exceed 1")
    if not d.g3 > d.g4 > 0.0:
        raise InadmissibleParameterError("need g3 > g4 > 0")
    if d.g2 < 0.0:
        raise InadmissibleParameterError("g2 must be non-negative")
    mu = d.mu_M_ref
    mu_e = d.g1 * mu
    kappa_e = d.g3 * mu
    kappa_M = d.g4 * mu
    mu_m = d.g1 / (d.g1 - 1.0) * mu
    kappa_m = d.g3 / (d.g3 - d.g4) * kappa_M
    return MaterialParams(
        mu_e=mu_e, lambda_e=kappa_e - mu_e, mu_m=mu_m, lambda_m=kappa_m - mu_m,
        mu_c=d.g2 * mu, L_c=d.L_c_ref, a1=d.a_tilde_ref, a2=d.a_tilde_ref, a3=0.0,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    positive_definite: dict
    elliptic: dict

    @property
    def is_positive_definite(self):
        return all(self.positive_definite.values())

    @property
    def is_elliptic(self):
        return all(self.elliptic.values())

    @property
    def ok(self):
        return self.is_positive_definite and self.is_elliptic

    def failures(self):
        bad = [f"positive definiteness: {k}" for k, v in self.positive_definite.items() if not v]
        bad += [f"ellipticity: {k}" for k, v in self.elliptic.items() if not v]
        return bad

    def require(self):
        if not self.ok:
            raise InadmissibleParameterError("; ".join(self.failures()))


def check_admissible(p):
    """Report positive-definiteness and ellipticity conditions separately."""
    curv = p.a_tilde * p.L_c**2
    pd = {
        "mu_m > 0": p.mu_m > 0,
        "mu_c >= 0": p.mu_c >= 0,
        "mu_e > 0": p.mu_e > 0,
        "kappa_m > 0": p.kappa_m > 0,
        "kappa_e > 0": p.kappa_e > 0,
        "a_tilde L_c^2 > 0": curv > 0,
    }
    ell = {
        "mu_M > 0": p.mu_M > 0,
        "mu_m > 0": p.mu_m > 0,
        "mu_e + mu_c > 0": p.mu_e + p.mu_c > 0,
        "mu_c >= 0": p.mu_c >= 0,
        "2 mu_e + lambda_e > 0": 2 * p.mu_e + p.lambda_e > 0,
        "2 mu_m + lambda_m > 0": 2 * p.mu_m + p.lambda_m > 0,
        "a_tilde L_c^2 > 0": curv > 0,
    }
    return AdmissibilityReport({k: bool(v) for k, v in pd.items()},
                               {k: bool(v) for k, v in ell.items()})


def homogenize_3d(mu_e, mu_micro, kappa_e_3d, kappa_micro_3d):
    """Three-dimensional macroscopic moduli ``(mu_macro, kappa_macro, lambda_macro)``."""
    mu_macro = _harmonic(mu_e, mu_micro, "mu_macro")
    kappa_macro = _harmonic(kappa_e_3d, kappa_micro_3d, "kappa_macro")
    return mu_macro, kappa_macro, (3.0 * kappa_macro - 2.0 * mu_macro) / 3.0


_RAW_KEYS = ("mu_e", "lambda_e", "mu_m", "lambda_m", "mu_c", "L_c", "a1", "a2", "a3")
_RAW_OPTIONAL = {"a3": 0.0}
_DIM_KEYS = ("g1", "g2", "g3", "g4", "mu_M", "L_c", "a_tilde")
_DIM_OPTIONAL = {"mu_M": 1.0, "L_c": 1.0, "a_tilde": 1.0}


def _pick(block, keys, optional, schema):
    if not isinstance(block, dict):
        raise ValueError(f"'{schema}' must be an object")
    unknown = set(block) - set(keys)
    if unknown:
        raise ValueError(f"unknown keys in '{schema}': {sorted(unknown)}")
    out = {}
    for k in keys:
        if k in block:
            v = block[k]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ValueError(f"'{schema}.{k}' must be a number")
            out[k] = float(v)
        elif k in optional:
            out[k] = optional[k]
        else:
            raise ValueError(f"missing key '{schema}.{k}'")
    return out


def params_from_mapping(data):
    """Parse either JSON schema (``raw`` or ``dimensionless``) into params."""
    if not isinstance(data, dict) or len(data) != 1:
        raise ValueError("parameter file must hold exactly one of 'raw' or 'dimensionless'")
    (schema, block), = data.items()
    if schema == "raw":
        return derive(**_pick(block, _RAW_KEYS, _RAW_OPTIONAL, schema))
    if schema == "dimensionless":
        v = _pick(block, _DIM_KEYS, _DIM_OPTIONAL, schema)
        return from_dimensionless(DimensionlessParams(
            v["g1"], v["g2"], v["g3"], v["g4"], v["mu_M"], v["L_c"], v["a_tilde"]))
    raise ValueError(f"unknown schema '{schema}'")


def load_params(path):
    """Read a JSON parameter file."""
    with Path(path).open(encoding="utf-8") as fh:
        return params_from_mapping(json.load(fh))
