"""Modified Bessel functions K0, K1, K2 and the composite kernels Phi, Psi.

The kernel is self-contained. Three regimes are used for ``K0`` and ``K1``:

* ``z <= 2``: ascending series with the logarithmic term,
* ``2 < z < 25``: Steed's continued fraction (CF2) for the scaled pair,
* ``z >= 25``: the large-argument asymptotic expansion (16 terms).

``K2`` is always formed from the recurrence ``K2 = K0 + (2/z) K1``.

For small arguments the composites ``2/z**2 - K2(z)`` and ``1 - z K1(z)``
are summed directly from series whose leading singular terms cancel
analytically, so no precision is lost near the origin.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "EULER_GAMMA",
    "bessel_k",
    "bessel_j0",
    "capital_phi",
    "capital_psi",
    "capital_phi_prime",
    "kernel_table",
]

EULER_GAMMA = 0.5772156649015329

_SERIES_MAX = 2.0
_ASYMPTOTIC_MIN = 25.0
_N_SERIES = 30
_N_ASYMPTOTIC = 16
_TINY = np.finfo(float).tiny


def _series_coefficients(n_terms):
    k = np.arange(n_terms, dtype=float)
    fact = np.array([math.factorial(i) for i in range(n_terms + 1)], dtype=float)
    harm = np.concatenate(([0.0], np.cumsum(1.0 / np.arange(1, n_terms + 1))))
    inv_kk = 1.0 / (fact[:-1] ** 2)                # 1/(k!)^2
    inv_kk1 = 1.0 / (fact[:-1] * fact[1:])         # 1/(k!(k+1)!)
    return {
        "inv_kk": inv_kk,
        "inv_kk1": inv_kk1,
        "h0": harm[:-1] * inv_kk,                  # H_k/(k!)^2
        "h1": (harm[:-1] + harm[1:]) * inv_kk1,    # (H_k+H_{k+1})/(k!(k+1)!)
        "b": k / (k + 1.0) * inv_kk,               # k/((k+1)(k!)^2)
    }


_COEF = _series_coefficients(_N_SERIES)


def _asymptotic_coefficients(nu, n_terms):
    out = [1.0]
    mu = 4.0 * nu * nu
    for k in range(1, n_terms):
        out.append(out[-1] * (mu - (2 * k - 1) ** 2) / (k * 8.0))
    return np.array(out)


_ASY0 = _asymptotic_coefficients(0, _N_ASYMPTOTIC)
_ASY1 = _asymptotic_coefficients(1, _N_ASYMPTOTIC)


def _small(z):
    """All kernels for 0 < z <= 2 from ascending series."""
    t = 0.25 * z * z
    powers = t[:, None] ** np.arange(_N_SERIES)[None, :]
    i0 = powers @ _COEF["inv_kk"]
    a1 = powers @ _COEF["inv_kk1"]
    s0 = powers @ _COEF["h0"]
    s1 = powers @ _COEF["h1"]
    s1_tail = powers[:, 1:] @ _COEF["h1"][1:]
    b = powers @ _COEF["b"]
    ell = np.log(0.5 * z) + EULER_GAMMA

    k0 = -ell * i0 + s0
    c1 = t * (s1 - 2.0 * ell * a1)              # 1 - z K1
    k1 = (1.0 - c1) / z
    phi = ell * b - s0 + 0.5 * s1               # 2/z^2 - K2
    dphi = (-s1_tail + 2.0 * s0 - 2.0 * ell * b - t * s1 + 2.0 * t * ell * a1) / z
    return k0, k1, phi, c1, dphi


def _cf2_scaled(z):
    """Scaled pair exp(z)K0, exp(z)K1 by Steed's continued fraction."""
    b = 2.0 * (1.0 + z)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(z)
    q2 = np.ones_like(z)
    a1 = 0.25
    q = np.full_like(z, a1)
    c = np.full_like(z, a1)
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 2000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = h + delh
        dels = q * delh
        s = s + dels
        if np.all(np.abs(dels) < 1e-17 * np.abs(s)):
            break
    h = a1 * h
    k0s = np.sqrt(np.pi / (2.0 * z)) / s
    k1s = k0s * (z + 0.5 - h) / z
    return k0s, k1s


def _asymptotic_scaled(z):
    inv = 1.0 / z
    powers = inv[:, None] ** np.arange(_N_ASYMPTOTIC)[None, :]
    pref = np.sqrt(np.pi / (2.0 * z))
    return pref * (powers @ _ASY0), pref * (powers @ _ASY1)


def _as_array(z, name="z"):
    arr = np.asarray(z, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError(f"{name} contains NaN")
    return arr


def kernel_table(z):
    """Evaluate every kernel quantity at positive arguments ``z``.

    Returns a dict of arrays (same shape as ``z``) with keys ``k0``, ``k1``,
    ``k2``, ``phi`` (``2/z**2 - K2``), ``c1`` (``1 - z K1``), ``dphi``
    (derivative of ``phi`` with respect to ``z``) and ``underflow``.
    """
    z = _as_array(z)
    if np.any(z <= 0.0):
        raise DomainError("modified Bessel K requires z > 0")
    shape = z.shape
    z = z.ravel()
    k0 = np.empty_like(z)
    k1 = np.empty_like(z)
    phi = np.empty_like(z)
    c1 = np.empty_like(z)
    dphi = np.empty_like(z)

    small = z <= _SERIES_MAX
    if np.any(small):
        k0[small], k1[small], phi[small], c1[small], dphi[small] = _small(z[small])

    large = ~small
    if np.any(large):
        zl = z[large]
        k0s = np.empty_like(zl)
        k1s = np.empty_like(zl)
        mid = zl < _ASYMPTOTIC_MIN
        if np.any(mid):
            k0s[mid], k1s[mid] = _cf2_scaled(zl[mid])
        far = ~mid & np.isfinite(zl)
        if np.any(far):
            k0s[far], k1s[far] = _asymptotic_scaled(zl[far])
        inf = ~np.isfinite(zl)
        k0s[inf] = 0.0
        k1s[inf] = 0.0
        with np.errstate(under="ignore"):
            decay = np.exp(-zl)
            k0l = k0s * decay
            k1l = k1s * decay
        k0[large] = k0l
        k1[large] = k1l
        with np.errstate(divide="ignore", invalid="ignore"):
            k2l = k0l + 2.0 * k1l / zl
            k2l[inf] = 0.0
            phil = 2.0 / zl**2 - k2l
            dphil = k1l - 2.0 * phil / zl
        c1l = 1.0 - np.where(inf, 0.0, zl * k1l)
        c1[large] = c1l
        phi[large] = phil
        dphi[large] = dphil

    with np.errstate(under="ignore"):
        k2 = k0 + 2.0 * k1 / z
    k2[~np.isfinite(z)] = 0.0
    underflow = (k0 < _TINY) | (k1 < _TINY)
    out = dict(k0=k0, k1=k1, k2=k2, phi=phi, c1=c1, dphi=dphi, underflow=underflow)
    return {key: val.reshape(shape) for key, val in out.items()}


def _scalar_or_array(value, like):
    if np.ndim(like) == 0:
        return value.item() if isinstance(value, np.ndarray) else value
    return value


def bessel_k(n, z, *, full_output=False):
    """Modified Bessel function of the second kind ``K_n(z)`` for n in {0, 1, 2}.

    Parameters
    ----------
    n : int
        Order, one of 0, 1, 2.
    z : float or array_like
        Positive argument(s).
    full_output : bool
        If True also return a boolean underflow flag (true where the value
        is below the smallest normal double and has been flushed or is
        denormal).
    """
    if n not in (0, 1, 2) or isinstance(n, bool):
        raise DomainError(f"order must be 0, 1 or 2, got {n!r}")
    table = kernel_table(z)
    value = table[f"k{n}"]
    if n == 0:
        flag = table["k0"] < _TINY
    else:
        flag = table[f"k{n}"] < _TINY
    value = _scalar_or_array(value, z)
    if full_output:
        return value, _scalar_or_array(flag, z)
    return value


def _check_r_ell(r, ell):
    r_arr = _as_array(r, "r")
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    ell = float(ell)
    if math.isnan(ell) or ell <= 0.0:
        raise DomainError("ell must be positive or +inf")
    return r_arr, ell


def capital_phi(r, ell):
    """``Phi(r) = 2 ell**2 / r**2 - K2(r/ell)``; ``ell = inf`` is rejected."""
    r_arr, ell = _check_r_ell(r, ell)
    if math.isinf(ell):
        raise DomainError("Phi diverges for ell = +inf; drop the term in the limit model")
    return _scalar_or_array(kernel_table(r_arr / ell)["phi"], r)


def capital_phi_prime(r, ell):
    """Radial derivative ``dPhi/dr`` of :func:`capital_phi`."""
    r_arr, ell = _check_r_ell(r, ell)
    if math.isinf(ell):
        raise DomainError("Phi diverges for ell = +inf")
    return _scalar_or_array(kernel_table(r_arr / ell)["dphi"] / ell, r)


def capital_psi(r, ell):
    """``Psi(r) = (1 - (r/ell) K1(r/ell)) / r``, equal to 0 for ``ell = inf``."""
    r_arr, ell = _check_r_ell(r, ell)
    if math.isinf(ell):
        return _scalar_or_array(np.zeros_like(r_arr), r)
    return _scalar_or_array(kernel_table(r_arr / ell)["c1"] / r_arr, r)


def bessel_j0(x):
    """Bessel ``J0(x)`` from ``(1/pi) int_0^pi cos(x sin t) dt``.

    The integrand is smooth and pi-periodic, so the trapezoidal rule
    converges geometrically once the node count exceeds ``|x|/2``.
    """
    arr = _as_array(x, "x")
    if not np.all(np.isfinite(arr)):
        raise DomainError("J0 requires finite x")
    flat = np.abs(arr.ravel())
    n = int(np.ceil(0.5 * (flat.max() if flat.size else 0.0))) + 48
    theta = np.pi * np.arange(n) / n
    vals = np.cos(flat[:, None] * np.sin(theta)[None, :]).mean(axis=1)
    return _scalar_or_array(vals.reshape(arr.shape), x)
