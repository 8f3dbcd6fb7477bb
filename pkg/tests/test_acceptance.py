"""Acceptance criteria 1-9, each at its stated tolerance and runtime budget.

A summary line per criterion is printed at the end of the run by the hook
in ``conftest.py``.
"""

import math
import time

import numpy as np
import pytest

from oracles import K0_AT_1, k0_quadrature
from relaxed_green import LoadCase, ModelKind, bessel_k, derive
from relaxed_green import fourier_oracle as fo
from relaxed_green import suites
from relaxed_green import verification as V
from relaxed_green.profiles import check_fig5_ordering, check_fig7, check_fig8


def _draws(n, seed, mu_c_zero):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        p = V.random_admissible(rng, mu_c_zero=mu_c_zero)
        ell = p.ell_2 if math.isfinite(p.ell_2) else p.ell_1
        k = math.exp(rng.uniform(math.log(0.01), math.log(100.0))) / ell
        a = rng.uniform(0, 2 * math.pi)
        yield p, (k * math.cos(a), k * math.sin(a))


def _rel(a, b):
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))


# ---------------------------------------------------------------- 1

@pytest.mark.parametrize("load,mu_c_zero", [("force", False), ("couple", False),
                                            ("couple", True)])
def test_c1_fourier_oracle(load, mu_c_zero, criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for p, xi in _draws(100, 11 + mu_c_zero, mu_c_zero):
        ref = fo.solve(p, xi, load).u_hat
        closed = (fo.transformed_force_fields(p, xi) if load == "force"
                  else fo.transformed_couple_fields(p, xi))
        worst = max(worst, _rel(closed, ref))
    dt = time.perf_counter() - t0
    tag = f"{load}{' mu_c=0' if mu_c_zero else ''}"
    ok = criterion(1, worst <= 1e-9 and dt < 5, f"{tag} max rel {worst:.1e} ({dt:.2f}s)")
    assert ok, (worst, dt)


# ---------------------------------------------------------------- 2

@pytest.mark.parametrize("mu_c_zero", [False, True])
def test_c2_determinant(mu_c_zero, criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for p, xi in _draws(100, 21 + mu_c_zero, mu_c_zero):
        num = np.linalg.det(fo.assemble(p, xi).A)
        ref = fo.determinant_closed_form(p, math.hypot(*xi))
        worst = max(worst, abs(num - ref) / abs(ref))
    dt = time.perf_counter() - t0
    ok = criterion(2, worst <= 1e-10 and dt < 5,
                   f"mu_c{'=0' if mu_c_zero else '>0'} max rel {worst:.1e} ({dt:.2f}s)")
    assert ok, (worst, dt)


# ---------------------------------------------------------------- 3

def _zero_poisson():
    return derive(mu_e=1.5, lambda_e=0.0, mu_m=2.0, lambda_m=0.0, mu_c=0.7, L_c=1.0)


def test_c3_pde_residuals(fig4_params, criterion):
    t0 = time.perf_counter()
    failures, worst, pairs = [], 0.0, 0
    for model, load in V.supported_pairs():
        p = _zero_poisson() if model is ModelKind.ZeroPoissonRelaxed else fig4_params
        for x in suites._sample_points(p, 20, seed=3):
            rep = V.pde_residual(p, model, load, x)
            worst = max(worst, rep.terminal)
            if not rep.converged:
                failures.append((model.value, load.value, x, rep.order_estimate, rep.terminal))
        pairs += 1
    dt = time.perf_counter() - t0
    ok = criterion(3, not failures and dt < 60,
                   f"{pairs} pairs x 20 points, worst terminal {worst:.1e} ({dt:.1f}s)")
    assert ok, failures[:5]


# ---------------------------------------------------------------- 4

def test_c4_flux_balance(fig4_params, criterion):
    t0 = time.perf_counter()
    recs = suites.run_suites(fig4_params, ["flux"])
    dt = time.perf_counter() - t0
    bad = [r for r in recs if not r["pass"]]
    ok = criterion(4, not bad and dt < 30, f"{len(recs)} model/load balances ({dt:.1f}s)")
    assert ok, bad


# ---------------------------------------------------------------- 5

def test_c5_limits(fig4_params, criterion):
    t0 = time.perf_counter()
    reports = V.limit_consistency(fig4_params, points=50)
    dt = time.perf_counter() - t0
    bad = [(r.name, r.load, r.gaps) for r in reports if not (r.monotone and r.terminal <= 1e-6)]
    worst = max(r.terminal for r in reports)
    ok = criterion(5, not bad and dt < 60,
                   f"{len(reports)} sequences, worst terminal gap {worst:.1e} ({dt:.1f}s)")
    assert ok, bad


# ---------------------------------------------------------------- 6

def test_c6_singularity_orders(fig4_params, criterion):
    t0 = time.perf_counter()
    checks = V.singularity_checks(fig4_params)
    dt = time.perf_counter() - t0
    bad = [(name, exp, rep.kind, rep.exponent) for name, exp, rep in checks
           if not V.order_matches(exp, rep)]
    ok = criterion(6, not bad and dt < 30, f"{len(checks)} field classes ({dt:.1f}s)")
    assert ok, bad


# ---------------------------------------------------------------- 7

def test_c7_fig5_ordering(criterion):
    ok, detail = check_fig5_ordering()
    criterion(7, ok, f"fig5 |u2| ordering {'holds' if ok else 'breaks'} {detail}")
    assert ok, detail


def test_c7_fig7(criterion):
    t0 = time.perf_counter()
    ok, detail = check_fig7()
    ok = criterion(7, ok and time.perf_counter() - t0 < 30,
                   f"fig7 ratio {detail['ratio']:.12f} vs {detail['expected']:.12f}")
    assert ok, detail


def test_c7_fig8(criterion):
    t0 = time.perf_counter()
    ok, detail = check_fig8()
    gaps = ", ".join(f"{g:.2f}" for g in detail["relative_gap"])
    ok = criterion(7, ok and time.perf_counter() - t0 < 30, f"fig8 gaps {gaps}")
    assert ok, detail


# ---------------------------------------------------------------- 8

def test_c8_bessel(criterion):
    t0 = time.perf_counter()
    recs = suites.run_suites(None, ["bessel"])
    k0_gap = abs(float(bessel_k(0, 1.0)) - k0_quadrature(1.0))
    oracle_gap = abs(k0_quadrature(1.0) - K0_AT_1)
    dt = time.perf_counter() - t0
    bad = [r for r in recs if not r["pass"]]
    ok = criterion(8, not bad and k0_gap <= 1e-12 and oracle_gap <= 1e-12 and dt < 5,
                   f"{len(recs)} identities, K0(1) vs quadrature {k0_gap:.1e} ({dt:.2f}s)")
    assert ok, (bad, k0_gap)


# ---------------------------------------------------------------- 9

def test_c9_transcription(fig4_params, criterion):
    recs = suites.run_suites(fig4_params, ["transcription"])
    bad = [r for r in recs if not r["pass"]]
    summary = ", ".join(f"{r['check'].split('.')[1]} {r['result']:.0e}" for r in recs)
    ok = criterion(9, not bad, summary)
    assert ok, bad
