import json

import numpy as np
import pytest

from relaxed_green import ModelKind, generate_limit_tree
from relaxed_green.errors import ContractError
from relaxed_green.limit_tree import models_in, write_limit_tree
from relaxed_green.profiles import ProfileSpec, fig5_table, profile_table, ray_points, sample


def test_profile_validation():
    with pytest.raises(ContractError):
        ProfileSpec("x3+", (1.0,), "u2")
    with pytest.raises(ContractError):
        ProfileSpec("x1+", (1.0,), "nope")
    with pytest.raises(ContractError):
        ProfileSpec("x1+", (2.0, 1.0), "u2")


def test_ray_points():
    x1, x2 = ray_points("radial", [2.0])
    assert np.hypot(x1, x2)[0] == pytest.approx(2.0)


def test_profile_columns(fig4_params):
    spec = ProfileSpec("x2+", (0.5, 1.0), "norm_u")
    t = profile_table(fig4_params, ("Micropolar", "ClassicalMacro"), "couple", spec, length=2.0)
    assert list(t) == ["r", "Micropolar", "ClassicalMacro"]
    np.testing.assert_allclose(t["r"], [0.25, 0.5])


def test_gauge_only_has_distortion(fig4_params):
    with pytest.raises(ContractError):
        sample(fig4_params, "GaugeDislocation", "couple", "u1", 1.0, 0.0)
    e = sample(fig4_params, "GaugeDislocation", "couple", "e12", 1.0, 0.0)
    assert np.isfinite(e)


def test_fig5_table_shape():
    p, u2, th = fig5_table(n=11)
    assert len(u2) == 8 and len(u2["r"]) == 11
    assert u2["r"][0] == pytest.approx(0.2)


def test_limit_tree_contains_every_model_once(tmp_path):
    tree = generate_limit_tree()
    names = models_in(tree)
    assert sorted(names) == sorted(m.value for m in ModelKind)
    f = tmp_path / "tree.json"
    write_limit_tree(f)
    assert json.loads(f.read_text()) == tree


def test_micropolar_large_length_is_divergent():
    tree = generate_limit_tree()
    ms = next(c for c in tree["children"] if c["model"] == "MicroStretch")
    mp = ms["children"][0]
    assert mp["model"] == "Micropolar"
    assert mp["limits"] == [{"limit": "L_c -> inf", "outcome": "divergent: unbounded stiffness"}]
