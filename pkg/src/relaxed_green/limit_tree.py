"""The family of reduced models as a tree of parameter limits."""

from __future__ import annotations

import json
from pathlib import Path

from .models import ModelKind

__all__ = ["EDGES", "ANNOTATIONS", "generate_limit_tree", "write_limit_tree"]

ROOT = ModelKind.RelaxedMicromorphic

# (parent, child, limit)
EDGES = (
    (ROOT, ModelKind.GaugeDislocation, "mu_micro -> 0, kappa_micro -> 0"),
    (ROOT, ModelKind.MicroStretch, "mu_micro -> inf"),
    (ModelKind.MicroStretch, ModelKind.Micropolar, "kappa_micro -> inf"),
    (ModelKind.Micropolar, ModelKind.CoupleStress, "mu_c -> inf"),
    (ROOT, ModelKind.PureRelaxed, "mu_c -> 0"),
    (ROOT, ModelKind.ZeroPoissonRelaxed, "lambda_e = lambda_micro = 0"),
)

# characteristic-length limits hanging off a node: (node, limit, outcome)
ANNOTATIONS = (
    (ROOT, "L_c -> 0", ModelKind.ClassicalMacro.value),
    (ROOT, "L_c -> inf", ModelKind.ClassicalMicro.value),
    (ModelKind.Micropolar, "L_c -> inf", "divergent: unbounded stiffness"),
)


def generate_limit_tree():
    """Nested dict rooted at the relaxed model; every model appears exactly once."""
    def node(kind):
        out = {"model": kind.value, "limits": []}
        for n, limit, outcome in ANNOTATIONS:
            if n is kind:
                leaf = {"limit": limit}
                if outcome in ModelKind.__members__:
                    leaf["model"] = outcome
                else:
                    leaf["outcome"] = outcome
                out["limits"].append(leaf)
        out["children"] = [dict(limit=lim, **node(child))
                           for parent, child, lim in EDGES if parent is kind]
        return out

    return node(ROOT)


def models_in(tree):
    """All model names reachable in ``tree`` (children and annotations)."""
    names = [tree["model"]]
    names += [leaf["model"] for leaf in tree.get("limits", []) if "model" in leaf]
    for child in tree.get("children", []):
        names += models_in(child)
    return names


def write_limit_tree(path):
    Path(path).write_text(json.dumps(generate_limit_tree(), indent=2) + "\n", encoding="utf-8")
