"""Curvature toolkit for graph surfaces of the simply isotropic 3-space.

The package evaluates the isotropic Gaussian and mean curvature of
height fields and parametric patches through exact second-order
forward differentiation, instantiates a catalog of product-form
surfaces with constant-curvature claims, and provides grid, motion,
finite-difference, and randomized cross-checks for those claims.
"""

from .jets import BranchDomainError, Jet2, const, coord1, coord2, eval_field, eval_profile
from .geometry import (
    ADMISSIBILITY_EPS,
    AdmissibilityError,
    CurvaturePair,
    Motion,
    ParametricSurface,
    Rect,
    SurfaceChart,
    X_OVER_YZ,
    Z_OVER_XY,
    apply_motion,
    as_parametric,
    monge_x_curvatures,
    monge_z_curvatures,
    moved_surface,
    parametric_curvatures,
)
from .factorable import (
    TYPE1,
    TYPE2,
    AffineFactorable,
    afs1_curvatures,
    afs2_curvatures,
    as_chart,
    is_planar,
    random_instance,
    random_profile,
    regularity,
)
from .catalog import (
    CurvatureProfile,
    FamilySpec,
    ParameterError,
    UnknownFamilyError,
    build_family,
    build_integral_family,
    expected_profile,
    family_ids,
    get_family,
    quantity_for_claim,
)
from .verify import (
    DEFAULT_TOL,
    GridRun,
    GridSample,
    ProbeReport,
    VerificationReport,
    check_constancy,
    cross_validate,
    finite_difference_check,
    motion_invariance_check,
    ode_crosscheck,
    probe_nonexistence,
    sample_grid,
    unit_relative_difference,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "ADMISSIBILITY_EPS",
    "AdmissibilityError",
    "AffineFactorable",
    "BranchDomainError",
    "CurvaturePair",
    "CurvatureProfile",
    "DEFAULT_TOL",
    "FamilySpec",
    "GridRun",
    "GridSample",
    "Jet2",
    "Motion",
    "ParameterError",
    "ParametricSurface",
    "ProbeReport",
    "Rect",
    "SplitMix64",
    "SurfaceChart",
    "TYPE1",
    "TYPE2",
    "UnknownFamilyError",
    "VerificationReport",
    "X_OVER_YZ",
    "Z_OVER_XY",
    "__version__",
    "afs1_curvatures",
    "afs2_curvatures",
    "apply_motion",
    "as_chart",
    "as_parametric",
    "build_family",
    "build_integral_family",
    "check_constancy",
    "const",
    "coord1",
    "coord2",
    "cross_validate",
    "eval_field",
    "eval_profile",
    "expected_profile",
    "family_ids",
    "finite_difference_check",
    "get_family",
    "is_planar",
    "monge_x_curvatures",
    "monge_z_curvatures",
    "motion_invariance_check",
    "moved_surface",
    "ode_crosscheck",
    "parametric_curvatures",
    "probe_nonexistence",
    "quantity_for_claim",
    "random_instance",
    "random_profile",
    "regularity",
    "sample_grid",
    "unit_relative_difference",
]
