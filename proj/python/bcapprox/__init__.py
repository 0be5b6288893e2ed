"""Bicomplex Moebius maps, univalent series functionals and Mergelyan approximation."""

from ._core import (
    Bicomplex,
    DegenerateMapError,
    DomainError,
    GeometryError,
    InvalidRotationError,
    MoebiusMap,
    NullConeError,
    ParseError,
    PolePlacementError,
    Series,
    approximate,
    area_closed_form,
    area_contour_estimate,
    bieberbach_check,
    conjugate,
    e1,
    e2,
    gronwall_area_sum,
    invert,
    inversion_transform,
    is_zero_divisor,
    j,
    koebe_covering,
    koebe_radius_bound,
    koebe_rotation_series,
    norm_k,
    run_cli,
    sqrt_transform,
)

__all__ = [
    "Bicomplex",
    "DegenerateMapError",
    "DomainError",
    "GeometryError",
    "InvalidRotationError",
    "MoebiusMap",
    "NullConeError",
    "ParseError",
    "PolePlacementError",
    "Series",
    "approximate",
    "area_closed_form",
    "area_contour_estimate",
    "bieberbach_check",
    "conjugate",
    "e1",
    "e2",
    "gronwall_area_sum",
    "invert",
    "inversion_transform",
    "is_zero_divisor",
    "j",
    "koebe_covering",
    "koebe_radius_bound",
    "koebe_rotation_series",
    "norm_k",
    "run_cli",
    "sqrt_transform",
]
