"""Two-hole dig site geometry with exact rational lengths."""

from ._goldbug import (
    CanvasSpec,
    Convention,
    Length,
    OverlapReport,
    Scenario,
    center_distance,
    center_distance_oracle,
    dig_center_radius,
    format_feet_inches,
    half_angle_sin,
    lens_area,
    lens_area_mc,
    max_L_for_nonoverlap,
    nonoverlap_threshold,
    nonoverlap_threshold_from_trunk,
    overlap_oracle_grid,
    overlap_report,
    parse_length,
    render_svg,
    sweep,
    to_real_feet,
    verify_paper_claims,
)

__all__ = [
    "CanvasSpec",
    "Convention",
    "Length",
    "OverlapReport",
    "Scenario",
    "center_distance",
    "center_distance_oracle",
    "dig_center_radius",
    "format_feet_inches",
    "half_angle_sin",
    "lens_area",
    "lens_area_mc",
    "max_L_for_nonoverlap",
    "nonoverlap_threshold",
    "nonoverlap_threshold_from_trunk",
    "overlap_oracle_grid",
    "overlap_report",
    "parse_length",
    "render_svg",
    "sweep",
    "to_real_feet",
    "verify_paper_claims",
]
