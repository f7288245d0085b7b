"""Hooke-like hyperelastic and hypoelastic models under finite simple shear."""

from .hyperelastic import (
    HyperelasticModel,
    StressPair,
    analytic_shear_oracle,
    hlih,
    is_pure_shear,
    kirchhoff_stress,
    mooney_rivlin,
    mr_energy,
    mr_zj_rate,
    obi,
    ogden_a,
    ogden_b,
    parse_model,
    shear_stress,
    stress_from_energy,
)
from .hypoelastic import (
    HypoProblem,
    RateKind,
    SpinKind,
    StressTrajectory,
    incremental_integrate,
    integrate_lfss,
    k_factor,
    rfss_solution,
    theta_angle,
)
from .shear_kinematics import (
    ShearMode,
    deformation_gradient,
    kinematic_state,
    rate_tensors,
)
from .strain_measures import ScaleFunction, bazant_itskov, doyle_ericksen, parse_scale

__version__ = "0.1.0"

__all__ = [
    "HyperelasticModel",
    "HypoProblem",
    "RateKind",
    "ScaleFunction",
    "ShearMode",
    "SpinKind",
    "StressPair",
    "StressTrajectory",
    "analytic_shear_oracle",
    "bazant_itskov",
    "deformation_gradient",
    "doyle_ericksen",
    "hlih",
    "incremental_integrate",
    "integrate_lfss",
    "is_pure_shear",
    "k_factor",
    "kinematic_state",
    "kirchhoff_stress",
    "mooney_rivlin",
    "mr_energy",
    "mr_zj_rate",
    "obi",
    "ogden_a",
    "ogden_b",
    "parse_model",
    "parse_scale",
    "rate_tensors",
    "rfss_solution",
    "shear_stress",
    "stress_from_energy",
    "theta_angle",
]
