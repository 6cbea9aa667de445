"""Containment-based size measures of convex polytopes w.r.t. a gauge body."""

from _gaugekit import (  # noqa: F401
    GaugeBody,
    GaugekitError,
    Polytope,
    ball_hull,
    ball_intersect,
    circumcenter_set,
    circumradius,
    convex_hull,
    diameter,
    full_profile,
    incenter_set,
    inradius,
    load_polytope,
    minkowski_sum,
    polytope_to_json,
    run_verify,
    scale,
    successive_radius,
    translate,
    width,
)

__all__ = [
    "GaugeBody",
    "GaugekitError",
    "Polytope",
    "ball_hull",
    "ball_intersect",
    "circumcenter_set",
    "circumradius",
    "convex_hull",
    "diameter",
    "full_profile",
    "incenter_set",
    "inradius",
    "load_polytope",
    "minkowski_sum",
    "polytope_to_json",
    "run_verify",
    "scale",
    "successive_radius",
    "translate",
    "width",
]
