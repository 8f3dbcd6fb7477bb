import math

import numpy as np
import pytest

from relaxed_green import verification as V
from relaxed_green.errors import ContractError, DegenerateInputError


def test_supported_pairs_cover_every_model():
    pairs = V.supported_pairs()
    models = {m.value for m, _ in pairs}
    assert len(models) == 9
    assert ("GaugeDislocation", "force") not in {(m.value, l.value) for m, l in pairs}


def test_residual_report_converges(fig4_params):
    rep = V.pde_residual(fig4_params, "RelaxedMicromorphic", "force", (0.3, 0.2))
    assert rep.converged
    assert rep.order_estimate >= 3.5
    d = rep.as_dict()
    assert d["converged"] and len(d["steps"]) == 4


def test_wrong_field_fails_residual(fig4_params, monkeypatch):
    # perturbing the micro-distortion must break the balance laws
    from relaxed_green import constitutive

    real = constitutive.evaluate_fields

    def broken(p, model, load, x1, x2, direction="x2", **kw):
        f = dict(real(p, model, load, x1, x2, direction, **kw))
        f["P12"] = f["P12"] * 1.001
        return f

    monkeypatch.setattr(V, "evaluate_fields", broken, raising=False)
    monkeypatch.setattr(constitutive, "evaluate_fields", broken)
    rep = V.pde_residual(fig4_params, "RelaxedMicromorphic", "force", (0.3, 0.2))
    assert not rep.converged


def test_flux_balance(fig4_params):
    rep = V.flux_balance(fig4_params, "Micropolar", "force", 1.0)
    assert rep.force_resultant == pytest.approx((0.0, -1.0), abs=1e-8)
    assert rep.converged
    c = V.flux_balance(fig4_params, "RelaxedMicromorphic", "couple", 0.3)
    assert c.moment_resultant == pytest.approx(-1.0, abs=1e-6)
    with pytest.raises(ContractError):
        V.flux_balance(fig4_params, "Micropolar", "force", 0.0)


def test_singularity_classifier():
    rep = V.singularity_order(lambda a, b: 1 / np.hypot(a, b) ** 2, (1e-4, 1e-2))
    assert rep.kind == "power" and rep.exponent == pytest.approx(-2, abs=1e-10)
    rep = V.singularity_order(lambda a, b: np.log(np.hypot(a, b)), (1e-4, 1e-2))
    assert rep.kind == "log"
    rep = V.singularity_order(lambda a, b: 1 + 0 * a, (1e-4, 1e-2))
    assert rep.kind == "bounded"
    with pytest.raises(ContractError):
        V.singularity_order(lambda a, b: a, (1e-3, 2e-3))
    with pytest.raises(DegenerateInputError):
        V.singularity_order(lambda a, b: 0 * a, (1e-4, 1e-2))


def test_random_admissible_is_admissible():
    from relaxed_green import check_admissible

    rng = np.random.default_rng(5)
    for zero in (False, True):
        for _ in range(20):
            p = V.random_admissible(rng, mu_c_zero=zero)
            assert check_admissible(p).ok
            assert math.isinf(p.ell_2) == zero


def test_limit_reports(fig4_params):
    reps = V.limit_consistency(fig4_params, points=10)
    assert {r.load for r in reps} == {"force", "couple"}
    for r in reps:
        assert r.monotone and r.terminal < 1e-6
