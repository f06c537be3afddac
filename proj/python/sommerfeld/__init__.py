"""Bohr-Sommerfeld relativistic orbits of hydrogen-like ions."""

from ._core import (
    ALPHA,
    INVERSE_ALPHA,
    DomainError,
    NotFoundError,
    OrbitParameters,
    classify,
    count_loops,
    element,
    orbit_parameters,
    parameter_table,
    render_svg,
    run_cli,
    trajectory,
    validate,
)

__all__ = [
    "ALPHA",
    "INVERSE_ALPHA",
    "DomainError",
    "NotFoundError",
    "OrbitParameters",
    "classify",
    "count_loops",
    "element",
    "orbit_parameters",
    "parameter_table",
    "render_svg",
    "run_cli",
    "trajectory",
    "validate",
]
