"""Vertex enumeration of 2-D projections of H-polytopes via support functions."""
from .enumerator import (EnumerationParams, EnumerationReport, ProjectedVertexList,
                         bin_search, enumerate_vertices, lp_call_budget)
from .errors import (DimensionTooLarge, EmptyPolytope, NoJunctionFound, NumericalBreakdown,
                     ParseError, ProjectionUnbounded, TooManyBases, UnboundedOrEmpty,
                     VertexBudgetExceeded)
from .formats import parse_ine, write_ine, write_vertices
from .lp import LPResult, LPStatus, lexicographic_solve, lp_solve
from .oracle import brute_force_vertices, convex_hull_2d, oracle_projection_vertices
from .polytope import (HPolytope, make_cross_polytope, make_hypercube, make_permutahedron,
                       make_random_bounded)
from .support import PlaneSpec, SupportSample, direction_from_angle, sample_support

__version__ = "0.1.0"
