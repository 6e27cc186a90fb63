"""Closed C1 train-track circuits on the square tiling: enumeration,
symmetry reduction, feasibility checking, growth-rate fitting, rendering,
and an interactive design service."""

from .assembly import check_constructible, is_constructible
from .circuit import (Circuit, Inventory, build_circuit, canonical_direct,
                      canonical_full)
from .curves import (CurveGeometry, WidthConfig, catalogue_min_clearance,
                     min_curvature_radius, pair_clearance,
                     realize_midline, sweep_pair_catalogue)
from .fitting import FitParams, cumulative_estimate, estimate, \
    estimate_rounded, estimate_series, fit
from .grid import Direction, IllegalTurn, PieceType, TurnCode, \
    classify_piece, piece_id, signed_turn
from .randombuild import RandomParams, build_random, close_suffix, \
    random_prefix
from .records import read_circuits, write_catalogue, write_circuits
from .render import RenderConfig, to_polygon_view, to_svg
from .sweep import (BudgetExceeded, CountTable, SweepSpec, count_range,
                    polygon_comparison, sweep)

__version__ = "1.0.0"

__all__ = [
    "BudgetExceeded", "Circuit", "CountTable", "CurveGeometry", "Direction",
    "FitParams", "IllegalTurn", "Inventory", "PieceType", "RandomParams",
    "RenderConfig", "SweepSpec", "TurnCode", "WidthConfig", "build_circuit",
    "build_random", "canonical_direct", "canonical_full",
    "catalogue_min_clearance", "check_constructible", "classify_piece",
    "close_suffix", "count_range", "cumulative_estimate", "estimate",
    "estimate_rounded", "estimate_series", "fit", "is_constructible",
    "min_curvature_radius", "pair_clearance", "piece_id",
    "polygon_comparison", "random_prefix", "read_circuits",
    "realize_midline", "signed_turn", "sweep", "sweep_pair_catalogue",
    "to_polygon_view", "to_svg", "write_catalogue", "write_circuits",
]
