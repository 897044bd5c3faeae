"""Consistent digital line segments built from per-point total orders."""

from .consistency import (
    BadPairFinding,
    LayoutView,
    PropertyReport,
    Region,
    Witness,
    bad_pair_at_line,
    conflicting_priorities,
    equivalence_check,
    find_bad_pair,
    find_witness,
    layout_view,
    verify_region,
)
from .engine import (
    Table,
    Uniform,
    Waterline,
    assignment_from_json,
    derived_third_quadrant_moves,
    first_quadrant_segment,
    movement_sums,
    prolong,
    segment,
)
from .grid import DigitalSegment, Point, Quadrant, classify_quadrant, mirror, validate_path
from .metrics import hausdorff, hausdorff_growth
from .orders import (
    ExplicitWindow,
    Natural,
    OrderWindowError,
    WaterlineBelow,
    Window,
    compare,
    partition_window,
    sorted_window,
    spec_from_json,
)
from .smoothness import agreement_smoothness_check, dist_profile, in_agreement, is_smooth_pair, is_smooth_region

__version__ = "0.1.0"
