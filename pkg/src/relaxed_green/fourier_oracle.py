"""Plane-strain Fourier system: matrix, determinant, solves and closed forms.

Conventions: the transform uses ``exp(+i x.xi)`` so a spatial derivative
``d/dx_j`` becomes ``-i xi_j``. Unknowns are ordered
``(u1, u2, P11, P12, P21, P22)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DomainError, OracleFailure, SingularPointError
from .models import LoadCase
from .special_functions import bessel_j0, bessel_k

__all__ = [
    "FourierState",
    "FORCE_RHS",
    "COUPLE_RHS",
    "assemble",
    "determinant_closed_form",
    "solve",
    "phi_hat",
    "transformed_force_fields",
    "transformed_couple_fields",
    "hankel_invert_radial",
]

FORCE_RHS = np.array([0, -1, 0, 0, 0, 0], dtype=complex)
# The matrix rows for P are the negated micro-balance equations, so the
# skew load M12 = -M21 = 1/2 enters with flipped signs.
COUPLE_RHS = np.array([0, 0, 0, -0.5, 0.5, 0], dtype=complex)


@dataclass
class FourierState:
    xi: np.ndarray
    xi_norm: float
    A: np.ndarray
    rhs: np.ndarray | None = None
    u_hat: np.ndarray | None = None


def _xi(xi):
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (2,):
        raise DomainError("wavevector must have two components")
    norm = math.hypot(*xi)
    if norm == 0.0:
        raise SingularPointError("the Fourier system is singular at xi = 0")
    return xi, norm


def assemble(p, xi):
    """Return the state holding the symmetric 6x6 matrix ``A(xi)``."""
    xi, norm = _xi(xi)
    x1, x2 = xi
    le, me, mc = p.lambda_e, p.mu_e, p.mu_c
    lm, mm = p.lambda_m, p.mu_m
    c = p.curvature
    i = 1j
    dia = le + 2 * (me + mm) + lm
    A = np.array([
        [-x2**2 * (mc + me) - x1**2 * (le + 2 * me), -x1 * x2 * (le + me - mc),
         i * x1 * (le + 2 * me), i * x2 * (mc + me), -i * x2 * (mc - me), i * x1 * le],
        [-x1 * x2 * (le + me - mc), -x1**2 * (mc + me) - x2**2 * (le + 2 * me),
         i * x2 * le, -i * x1 * (mc - me), i * x1 * (mc + me), i * x2 * (le + 2 * me)],
        [i * x1 * (le + 2 * me), i * x2 * le, c * x2**2 + dia, -c * x1 * x2, 0, le + lm],
        [i * x2 * (mc + me), i * x1 * (me - mc), -c * x1 * x2, c * x1**2 + mc + me + mm,
         me + mm - mc, 0],
        [-i * x2 * (mc - me), i * x1 * (mc + me), 0, me + mm - mc, c * x2**2 + mc + me + mm,
         -c * x1 * x2],
        [i * x1 * le, i * x2 * (le + 2 * me), le + lm, 0, -c * x1 * x2, c * x1**2 + dia],
    ], dtype=complex)
    return FourierState(xi=xi, xi_norm=norm, A=A)


def determinant_closed_form(p, xi_norm):
    """Closed-form ``det A``; depends on ``|xi|`` only."""
    s = float(xi_norm) ** 2
    common = (p.a_tilde**2 * p.L_c**4 * p.mu_M**2 * p.mu_m
              * (p.lambda_e + 2 * p.mu_e) * (p.lambda_m + 2 * p.mu_m)
              * (p.ell_1**-2 + s))
    if p.mu_c > 0:
        return common * (p.mu_e + p.mu_c) * (p.ell_2**-2 + s) * s**2
    return common * p.mu_e * s**3


def solve(p, xi, load):
    """Solve ``A u_hat = v_hat`` by LU with one step of residual refinement."""
    state = assemble(p, xi)
    load = LoadCase(load)
    rhs = FORCE_RHS if load is LoadCase.force else COUPLE_RHS
    try:
        u = np.linalg.solve(state.A, rhs)
        u = u + np.linalg.solve(state.A, rhs - state.A @ u)
    except np.linalg.LinAlgError as exc:
        raise OracleFailure(f"singular Fourier matrix at xi={state.xi}") from exc
    state.rhs = rhs.copy()
    state.u_hat = u
    return state


def phi_hat(xi_norm, ell):
    """Transformed kernel ``1/xi^2 - ell^2/(1 + ell^2 xi^2)``; 0 for infinite ell."""
    s = float(xi_norm) ** 2
    if math.isinf(ell):
        return 0.0
    return 1.0 / s - ell**2 / (1.0 + ell**2 * s)


def transformed_force_fields(p, xi):
    """Closed-form transforms for a unit force along ``x2``."""
    (x1, x2), norm = _xi(xi)
    s = norm**2
    f1 = phi_hat(norm, p.ell_1)
    f2 = phi_hat(norm, p.ell_2)
    kM, mM, me = p.kappa_M, p.mu_M, p.mu_e
    km, mm = p.kappa_m, p.mu_m
    z, eps, c = p.zeta, p.epsilon, p.curvature
    i = 1j
    kr = kM / (mM * (kM + mM))
    zz = (c / 4) * (z / (kM + mM)) ** 2
    ce = c / (4 * me**2)
    pk = kM / (mm * (kM + mM))
    den = 4 * (kM + mM) * (km + mm)
    shared = i * z * eps * c * x1 * x2**2 / den * f1

    u1 = -kr * x1 * x2 / s**2 - zz * x1 * x2 * f1 + ce * x1 * x2 * f2
    u2 = 1 / (mM * s) - kr * x2**2 / s**2 - zz * x2**2 * f1 - ce * x1**2 * f2
    P11 = i * pk * x1**2 * x2 / s**2 + i * z * x2 * (eps * c * x1**2 + 2 * (km + mm)) / den * f1
    P12 = i * pk * x1 * x2**2 / s**2 + shared + i * x1 / (2 * me) * f2
    P21 = (-i * x1 * ((kM + mM) * x1**2 + mM * x2**2) / (mm * (kM + mM) * s**2)
           + shared - i * x1 / (2 * me) * f2)
    P22 = (-i * pk * x1**2 * x2 / s**2 - i * x2 / ((km + mm) * s)
           - i * z * x2 * (eps * c * x1**2 + 2 * (km - mm)) / den * f1)
    return np.array([u1, u2, P11, P12, P21, P22], dtype=complex)


def transformed_couple_fields(p, xi):
    """Closed-form transforms for the unit couple (dedicated branch at ``mu_c = 0``)."""
    (x1, x2), norm = _xi(xi)
    s = norm**2
    i = 1j
    mm, c = p.mu_m, p.curvature
    P11 = -x1 * x2 / (2 * mm * s)
    if p.mu_c > 0:
        g = 1.0 / (p.ell_2**-2 + s)
        u1 = -i * x2 / (2 * p.mu_M * s) + i * x2 * g / (2 * p.mu_e)
        u2 = i * x1 / (2 * p.mu_M * s) - i * x1 * g / (2 * p.mu_e)
        P12 = -x2**2 / (2 * mm * s) - g / c
        P21 = x1**2 / (2 * mm * s) + g / c
    else:
        u1 = -i * x2 / (2 * mm * s)
        u2 = i * x1 / (2 * mm * s)
        P12 = -(2 * mm + c * x2**2) / (2 * mm * c * s)
        P21 = (2 * mm + c * x1**2) / (2 * mm * c * s)
    return np.array([u1, u2, P11, P12, P21, -P11], dtype=complex)


def _wynn_epsilon(partial_sums):
    """Wynn's epsilon acceleration; returns the best estimate and a change."""
    s = list(partial_sums)
    prev = [0.0] * (len(s) + 1)
    cur = s[:]
    best = cur[-1]
    estimates = [cur[-1]]
    k = 0
    while len(cur) > 1:
        nxt = []
        for j in range(len(cur) - 1):
            diff = cur[j + 1] - cur[j]
            if diff == 0.0:
                nxt.append(math.inf)
            else:
                nxt.append(prev[j + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        k += 1
        if k % 2 == 0 and cur and all(math.isfinite(v) for v in cur[-2:]):
            estimates.append(cur[-1])
    best = estimates[-1]
    change = abs(estimates[-1] - estimates[-2]) if len(estimates) > 1 else math.inf
    return best, change


def hankel_invert_radial(r, ell, *, panels=40, nodes=24, tol=1e-8):
    """Numerically invert ``1/(ell^-2 + xi^2)`` at radius ``r``.

    Computes ``(1/2pi) int_0^inf xi J0(xi r) / (ell^-2 + xi^2) dxi``. The
    range is split at multiples of ``pi/r`` (half periods of the Bessel
    oscillation); Gauss-Legendre panels give the partial integrals and the
    alternating partial sums are accelerated with Wynn's epsilon algorithm.
    Returns the value, which should equal ``K0(r/ell)/(2 pi)``.
    """
    if not (r > 0 and ell > 0 and math.isfinite(ell)):
        raise DomainError("hankel inversion needs r > 0 and finite ell > 0")
    nodes_x, weights = np.polynomial.legendre.leggauss(nodes)
    half = math.pi / r

    def panel(lo, hi):
        xs = lo + 0.5 * (hi - lo) * (nodes_x + 1.0)
        return 0.5 * (hi - lo) * np.dot(xs * bessel_j0(xs * r) / (ell**-2 + xs**2), weights)

    # geometric breakpoints resolve the 1/ell scale inside the first half period
    cuts = [0.0]
    knee = 0.125 / ell
    while knee < half:
        cuts.append(knee)
        knee *= 2.0
    cuts.append(half)
    first = sum(panel(lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]))
    pieces = [first] + [panel(k * half, (k + 1) * half) for k in range(1, panels)]
    sums = np.cumsum(pieces)
    value, change = _wynn_epsilon(sums[-16:].tolist())
    value /= 2 * math.pi
    if not math.isfinite(value) or change / (2 * math.pi) > tol:
        raise OracleFailure(f"Hankel quadrature did not converge (change {change:.2e})")
    return value


def hankel_reference(r, ell):
    """Closed-form ``K0(r/ell)/(2 pi)`` the inversion is compared with."""
    return bessel_k(0, r / ell) / (2 * math.pi)


def check_load(load):
    try:
        return LoadCase(load)
    except ValueError as exc:
        raise ContractError(str(exc)) from None
