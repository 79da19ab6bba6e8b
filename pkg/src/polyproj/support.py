"""Support-function sampling of a polytope's shadow on a coordinate plane.

The shadow on dimensions ``(d1, d2)`` is never formed: sampling the polytope
with a direction that is zero outside the plane gives the shadow's support
function directly.  Angles are degrees throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyPolytope, ProjectionUnbounded
from .lp import LPStatus, lexicographic_solve
from .polytope import HPolytope


@dataclass(frozen=True)
class PlaneSpec:
    """Projection plane given by 1-based coordinate indices ``d1 < d2 <= n``."""

    d1: int
    d2: int
    n: int

    def __post_init__(self):
        if not 1 <= self.d1 < self.d2 <= self.n:
            raise ValueError(f"need 1 <= d1 < d2 <= n, got d1={self.d1}, d2={self.d2}, n={self.n}")

    @property
    def axes(self) -> tuple[int, int]:
        """0-based indices."""
        return self.d1 - 1, self.d2 - 1


@dataclass
class Counters:
    lp_calls: int = 0
    binsearch_iters: int = 0


@dataclass(frozen=True)
class SupportSample:
    theta_deg: float
    rho: float
    witness: np.ndarray
    point2d: np.ndarray


def direction_from_angle(theta_deg: float, plane: PlaneSpec) -> np.ndarray:
    t = math.radians(theta_deg % 360.0)
    v = np.zeros(plane.n)
    i, j = plane.axes
    v[i] = math.cos(t)
    v[j] = math.sin(t)
    return v


def sample_support(p: HPolytope, theta_deg: float, plane: PlaneSpec,
                   counters: Counters | None = None) -> SupportSample:
    """Support value of ``p`` along ``theta_deg`` and a supporting point.

    When the optimal face is bigger than a point, the witness maximises the
    direction ``theta + 90`` on it, so ``point2d`` is the counter-clockwise-most
    extreme point of the shadow in direction ``theta``.  Each call runs the
    two-objective LP and is counted as two LP calls.
    """
    theta = theta_deg % 360.0
    v = direction_from_angle(theta, plane)
    w = direction_from_angle(theta + 90.0, plane)
    res = lexicographic_solve(p.A, p.b, v, w)
    if counters is not None:
        counters.lp_calls += 2
    if res.status is LPStatus.UNBOUNDED:
        raise ProjectionUnbounded(theta)
    if res.status is LPStatus.INFEASIBLE:
        raise EmptyPolytope("the polytope has no feasible point")
    i, j = plane.axes
    point2d = np.array([res.point[i], res.point[j]])
    return SupportSample(theta, res.value, res.point, point2d)


def support_curve(p: HPolytope, plane: PlaneSpec, samples: int = 720) -> tuple[np.ndarray, np.ndarray]:
    """``samples`` evenly spaced angles in ``[0, 360)`` and the support value at each."""
    thetas = np.arange(samples) * (360.0 / samples)
    rhos = np.array([sample_support(p, t, plane).rho for t in thetas])
    return thetas, rhos

