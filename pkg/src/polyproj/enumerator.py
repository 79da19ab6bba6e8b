"""Counter-clockwise vertex enumeration of a 2-D shadow by angular bisection.

Plotting the support value against the angle gives one sinusoid per shadow
vertex.  Starting from the vertex supported at 0 degrees, each bisection finds
the next junction of sinusoids and the vertex that takes over there, until the
walk returns to the first vertex.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import NoJunctionFound, VertexBudgetExceeded
from .polytope import HPolytope
from .support import Counters, PlaneSpec, sample_support

DEFAULT_EPSILON_DEG = 0.5
DEFAULT_POINT_TOL = 1e-9
DEFAULT_MAX_VERTICES = 100_000


@dataclass(frozen=True)
class EnumerationParams:
    epsilon_deg: float = DEFAULT_EPSILON_DEG
    point_tol: float = DEFAULT_POINT_TOL
    max_vertices: int = DEFAULT_MAX_VERTICES
    confirm_edges: bool = True

    def __post_init__(self):
        if not 0 < self.epsilon_deg < 90:
            raise ValueError(f"epsilon_deg must lie in (0, 90), got {self.epsilon_deg}")
        if not self.point_tol > 0:
            raise ValueError("point_tol must be positive")
        if self.max_vertices < 3:
            raise ValueError("max_vertices must be >= 3")


@dataclass(frozen=True)
class ProjectedVertexList:
    """Shadow vertices in counter-clockwise order with their discovery angles."""

    vertices: tuple[tuple[float, np.ndarray], ...]
    plane: PlaneSpec

    def __len__(self):
        return len(self.vertices)

    @property
    def points(self) -> np.ndarray:
        return np.array([pt for _, pt in self.vertices]).reshape(-1, 2)

    @property
    def thetas(self) -> np.ndarray:
        return np.array([t for t, _ in self.vertices])


@dataclass(frozen=True)
class EnumerationReport:
    result: ProjectedVertexList
    lp_calls: int
    binsearch_iters: int
    wall_ms: float
    params: EnumerationParams = field(default_factory=EnumerationParams)


def same_point(p, q, tol) -> bool:
    """Projected-vertex equality, relative to the size of ``p``."""
    p = np.asarray(p)
    return bool(np.linalg.norm(p - np.asarray(q)) <= tol * (1.0 + np.linalg.norm(p)))


def bin_search(p: HPolytope, plane: PlaneSpec, lb_deg: float, ub_deg: float,
               search_vertex, params: EnumerationParams,
               counters: Counters | None = None) -> tuple[float, np.ndarray]:
    """Locate the first junction after ``lb_deg``.

    ``search_vertex`` must be the shadow vertex supported at ``lb_deg``.  The
    bracket ``[lb, ub]`` is halved until narrower than ``epsilon_deg``; a
    sample that differs from ``search_vertex`` moves the upper end and becomes
    the candidate next vertex.  Returns the final upper end, the smallest
    sampled angle known to lie past the junction, together with the vertex
    supported there.
    """
    if not lb_deg < ub_deg:
        raise ValueError(f"need lb_deg < ub_deg, got {lb_deg}, {ub_deg}")
    if counters is None:
        counters = Counters()
    lb, ub = float(lb_deg), float(ub_deg)
    next_vertex = None
    while ub - lb >= params.epsilon_deg:
        mid = 0.5 * (lb + ub)
        px = sample_support(p, mid, plane, counters).point2d
        counters.binsearch_iters += 1
        if same_point(search_vertex, px, params.point_tol):
            lb = mid
        else:
            ub = mid
            next_vertex = px
    if next_vertex is None:
        raise NoJunctionFound(f"vertex {tuple(search_vertex)} supports all of [{lb_deg}, {ub_deg})")
    return ub, next_vertex


def edge_normal_deg(p, q) -> float:
    """Outward normal angle of the edge from ``p`` to ``q`` of a CCW polygon."""
    dx, dy = np.asarray(q, dtype=float) - np.asarray(p, dtype=float)
    return math.degrees(math.atan2(-dx, dy)) % 360.0


def confirm_edge(p: HPolytope, plane: PlaneSpec, current, candidate, critical_deg: float,
                 params: EnumerationParams, counters: Counters | None = None):
    """Make sure no shadow vertex lies between ``current`` and ``candidate``.

    Bisection steps over any vertex whose normal cone is narrower than the
    final bracket.  Sampling at the outward normal of the segment
    ``current -> candidate`` returns ``candidate`` itself exactly when the two
    are adjacent; otherwise it returns a skipped vertex, which replaces the
    candidate.  Returns the junction angle and the confirmed next vertex.
    """
    while True:
        normal = edge_normal_deg(current, candidate)
        px = sample_support(p, normal, plane, counters).point2d
        if same_point(candidate, px, params.point_tol) or same_point(current, px, params.point_tol):
            break
        candidate = px
        critical_deg = normal
    # the normal is the exact junction; keep the bracket end if rounding puts it behind
    return normal if normal < critical_deg else critical_deg, candidate


def enumerate_vertices(p: HPolytope, plane: PlaneSpec,
                       params: EnumerationParams | None = None) -> EnumerationReport:
    """All vertices of the shadow of ``p`` on ``plane``, counter-clockwise.

    The list starts with the vertex supported at 0 degrees.  A shadow that is
    a point yields one vertex and a segment yields two.  With
    ``params.confirm_edges`` every new edge is checked by one extra support
    sample, which recovers vertices whose normal cone is narrower than
    ``epsilon_deg``.
    """
    params = params or EnumerationParams()
    counters = Counters()
    start = time.perf_counter()

    first = sample_support(p, 0.0, plane, counters).point2d
    vertices = [(0.0, first)]
    lb, current = 0.0, first
    while True:
        try:
            crit, nxt = bin_search(p, plane, lb, 360.0, current, params, counters)
        except NoJunctionFound:
            # the last vertex holds out to 360 degrees, i.e. 0 is a junction
            if len(vertices) == 1 or not params.confirm_edges:
                break
            crit, nxt = 360.0, first
        if params.confirm_edges:
            crit, nxt = confirm_edge(p, plane, current, nxt, crit, params, counters)
        if same_point(first, nxt, params.point_tol):
            break
        crit = max(crit, math.nextafter(lb, 360.0))
        if len(vertices) >= params.max_vertices:
            raise VertexBudgetExceeded(
                f"more than {params.max_vertices} vertices; epsilon_deg={params.epsilon_deg} "
                "may be too coarse for the junction spacing")
        vertices.append((crit, nxt))
        lb, current = crit, nxt

    wall_ms = 1e3 * (time.perf_counter() - start)
    return EnumerationReport(ProjectedVertexList(tuple(vertices), plane), counters.lp_calls,
                             counters.binsearch_iters, wall_ms, params)


def lp_call_budget(n_vertices: int, epsilon_deg: float) -> int:
    """Upper bound on LP calls for a run that returns ``n_vertices`` vertices."""
    return 2 * (n_vertices + 1) * (int(np.ceil(np.log2(360.0 / epsilon_deg))) + 2)
