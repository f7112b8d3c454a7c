"""Pressure-loaded 3D topology optimization (Darcy pressure model, SIMP, MMA)."""

from ._core import (
    ConfigError,
    InvalidArgument,
    IoError,
    SolverError,
    analyze,
    config_keys,
    configure_threads,
    darcy_matrix,
    drainage_matrix,
    elastic_backend,
    export_checkpoint,
    filter_backward,
    filter_forward,
    heaviside,
    heaviside_derivative,
    max_threads,
    preset,
    recommended_isovalue,
    run,
    stiffness_matrix,
    transformation_matrix,
)

__all__ = [
    "ConfigError",
    "InvalidArgument",
    "IoError",
    "SolverError",
    "analyze",
    "config_keys",
    "configure_threads",
    "darcy_matrix",
    "drainage_matrix",
    "elastic_backend",
    "export_checkpoint",
    "filter_backward",
    "filter_forward",
    "heaviside",
    "heaviside_derivative",
    "max_threads",
    "preset",
    "recommended_isovalue",
    "run",
    "stiffness_matrix",
    "transformation_matrix",
]
