"""Cubulations of tubular groups: equitable sets, immersed walls, dilation,
and desk-scale pieces of the dual cube complex."""
from .classify import Verdict, certify_three_dim, classify
from .cover import (
    cover_ball,
    cross,
    dimension_estimate,
    lift_walls,
    local_finiteness_probe,
    stable_partition,
    tree_projection,
    zero_cube_coords,
)
from .equitable import (
    CurveSpec,
    EquitableSet,
    is_fortified,
    is_primitive_set,
    search_equitable,
    three_dim_equitable,
    verify_equitable,
)
from .group_model import TubularGraph, build_tree_ball, h1_vertex_part, validate
from .lattice import Vec, det, intersection_number, intersection_number_set, primitive_decomposition
from .primitivize import primitivize, verify_primitivize_dilation
from .walls import build_walls, classify_dimension, default_pairing, dilation

__version__ = "0.1.0"
