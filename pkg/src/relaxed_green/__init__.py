"""Closed-form fundamental solutions of the planar relaxed micromorphic continuum
and its reduced models, with the numerical checks that back them up."""

from .constitutive import StressState, evaluate_fields, stress_state, stresses
from .errors import (ContractError, DomainError, InadmissibleParameterError,
                     RelaxedGreenError, SingularPointError)
from .gauge_dislocation import eval_gauge_couple, gauge_fields
from .greens_couple import couple_fields, eval_couple
from .greens_force import eval_force, force_fields
from .limit_tree import generate_limit_tree
from .material import (DimensionlessParams, MaterialParams, check_admissible, derive,
                       from_dimensionless, load_params, params_from_mapping)
from .models import KinematicState, LoadCase, ModelKind
from .special_functions import bessel_k, kernel_table

__version__ = "0.1.0"

__all__ = [
    "ContractError", "DomainError", "InadmissibleParameterError", "RelaxedGreenError",
    "SingularPointError", "DimensionlessParams", "MaterialParams", "KinematicState",
    "LoadCase", "ModelKind", "StressState", "bessel_k", "check_admissible", "couple_fields",
    "derive", "eval_couple", "eval_force", "eval_gauge_couple", "evaluate_fields",
    "force_fields", "from_dimensionless", "gauge_fields", "generate_limit_tree",
    "kernel_table", "load_params", "params_from_mapping", "stress_state", "stresses",
]
