import json
import math

import pytest

from relaxed_green.errors import InadmissibleParameterError
from relaxed_green.material import (DimensionlessParams, check_admissible, derive,
                                    from_dimensionless, homogenize_3d, load_params,
                                    params_from_mapping)


def test_dimensionless_round_trip():
    p = from_dimensionless(DimensionlessParams(1.2, 3.0, 5.0, 3.0))
    assert p.mu_M == pytest.approx(1.0)
    assert p.mu_e / p.mu_M == pytest.approx(1.2)
    assert p.mu_c / p.mu_M == pytest.approx(3.0)
    assert p.kappa_e / p.mu_M == pytest.approx(5.0)
    assert p.kappa_M / p.mu_M == pytest.approx(3.0)


def test_homogenization_is_harmonic_mean():
    p = derive(mu_e=2.0, lambda_e=1.0, mu_m=3.0, lambda_m=0.5, mu_c=1.0, L_c=1.0)
    assert 1 / p.mu_M == pytest.approx(1 / p.mu_e + 1 / p.mu_m)
    assert 1 / p.kappa_M == pytest.approx(1 / p.kappa_e + 1 / p.kappa_m)
    assert p.lambda_M == pytest.approx(p.kappa_M - p.mu_M)


def test_lengths_ordered_and_mu_c_zero():
    p = from_dimensionless(DimensionlessParams(3.0, 2.0, 5.0, 3.0))
    assert 0 < p.ell_1 < p.ell_2 < math.inf
    q = p.with_changes(mu_c=0.0)
    assert q.ell_2 == math.inf
    assert q.ell_1 == pytest.approx(p.ell_1) or q.ell_1 > 0


def test_curvature():
    p = derive(mu_e=2.0, lambda_e=1.0, mu_m=3.0, lambda_m=0.5, mu_c=1.0, L_c=0.7, a1=2.0, a2=2.0)
    assert p.curvature == pytest.approx(p.a_tilde * p.mu_M * 0.49)


def test_admissibility_separates_conditions():
    rep = check_admissible(derive(mu_e=1.0, lambda_e=1.0, mu_m=-0.5, lambda_m=1.0,
                                  mu_c=1.0, L_c=1.0))
    assert not rep.ok
    assert any("mu_m" in f for f in rep.failures())
    with pytest.raises(InadmissibleParameterError):
        rep.require()


def test_homogenize_3d():
    mu, kappa, lam = homogenize_3d(2.0, 2.0, 4.0, 4.0)
    assert (mu, kappa) == (1.0, 2.0)
    assert lam == pytest.approx(2.0 - 2.0 / 3.0)


def test_schemas(tmp_path):
    a = params_from_mapping({"dimensionless": {"g1": 1.2, "g2": 3, "g3": 5, "g4": 3}})
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"raw": a.raw()}))
    b = load_params(f)
    assert b.ell_2 == pytest.approx(a.ell_2, rel=1e-14)


@pytest.mark.parametrize("data", [
    {}, {"raw": {}}, {"other": {}},
    {"dimensionless": {"g1": 1.2, "g2": 3, "g3": 5}},
    {"dimensionless": {"g1": "x", "g2": 3, "g3": 5, "g4": 3}},
    {"dimensionless": {"g1": 1.2, "g2": 3, "g3": 5, "g4": 3, "extra": 1}},
])
def test_bad_schema(data):
    with pytest.raises(ValueError):
        params_from_mapping(data)
