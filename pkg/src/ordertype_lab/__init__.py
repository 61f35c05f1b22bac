"""Exact-arithmetic analysis of planar and spherical order types."""

from .exact import (
    AffineConfig,
    GeneralPositionReport,
    ProjectiveConfig,
    Rational,
    SpherePoint,
    affine_config,
    antipode,
    check_general_position,
    cross_dir,
    lift_planar,
    orient,
    projective_completion,
    projective_config,
)

__version__ = "0.1.0"

__all__ = [
    "AffineConfig",
    "GeneralPositionReport",
    "ProjectiveConfig",
    "Rational",
    "SpherePoint",
    "affine_config",
    "antipode",
    "check_general_position",
    "cross_dir",
    "lift_planar",
    "orient",
    "projective_completion",
    "projective_config",
    "__version__",
]
