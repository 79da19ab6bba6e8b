"""Brute-force ground truth for small polytopes.

Every vertex of ``{x : A x <= b}`` is found by solving ``A_S x = b_S`` for all
``n``-subsets ``S`` of rows, keeping the feasible solutions.  Projecting those
and taking a planar hull gives the exact shadow.  Exponential, and meant only
for checking the enumerator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TooManyBases, UnboundedOrEmpty
from .polytope import HPolytope
from .support import PlaneSpec

MAX_BASES = 10**7
DEDUP_TOL = 1e-7
SINGULAR_TOL = 1e-10
FEAS_TOL = 1e-9

_CHUNK = 10_000


@dataclass(frozen=True)
class VertexCloud:
    points: np.ndarray

    @property
    def count(self) -> int:
        return len(self.points)


def _batched_solve(M, rhs):
    """Gaussian elimination with partial pivoting over a stack of systems.

    Returns the solutions and a mask of systems whose pivots all exceeded
    ``SINGULAR_TOL``; rows of singular systems hold garbage.
    """
    k, n, _ = M.shape
    # (row, column, system): every elementary operation runs over contiguous systems
    aug = np.empty((n, n + 1, k))
    aug[:, :n, :] = M.transpose(1, 2, 0)
    aug[:, n, :] = rhs.T
    ok = np.ones(k, dtype=bool)
    for col in range(n):
        piv = col + np.argmax(np.abs(aug[col:, col, :]), axis=0)
        for r in range(col + 1, n):
            sel = np.flatnonzero(piv == r)
            if sel.size:
                top = aug[col][:, sel]
                aug[col][:, sel] = aug[r][:, sel]
                aug[r][:, sel] = top
        pivot = aug[col, col]
        ok &= np.abs(pivot) > SINGULAR_TOL
        if col + 1 < n:
            factors = aug[col + 1:, col] / np.where(ok, pivot, 1.0)
            aug[col + 1:, col:] -= factors[:, None, :] * aug[col, None, col:]
    x = np.zeros((n, k))
    for col in range(n - 1, -1, -1):
        acc = aug[col, n] - (aug[col, col + 1:n] * x[col + 1:]).sum(axis=0)
        x[col] = acc / np.where(ok, aug[col, col], 1.0)
    return x.T, ok


def _combinations(m, n):
    """All ``n``-subsets of ``range(m)`` as rows, in lexicographic order."""
    combos = np.arange(m - n + 1)[:, None]
    for width in range(1, n):
        last = combos[:, -1]
        counts = (m - n + width) - last
        offsets = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
        combos = np.column_stack([np.repeat(combos, counts, axis=0),
                                  np.repeat(last + 1, counts) + offsets])
    return combos


def dedup(points, tol=DEDUP_TOL):
    """Drop points within ``tol`` of an earlier kept point, preserving order."""
    points = np.asarray(points, dtype=float)
    kept = []
    for pt in points:
        if kept and (np.linalg.norm(np.asarray(kept) - pt, axis=1) <= tol).any():
            continue
        kept.append(pt)
    return np.array(kept).reshape(-1, points.shape[1])


def brute_force_vertices(p: HPolytope) -> VertexCloud:
    m, n = p.m, p.n
    total = math.comb(m, n)
    if total > MAX_BASES:
        raise TooManyBases(f"C({m}, {n}) = {total} row subsets exceeds {MAX_BASES}")
    found = []
    for first in range(m - n + 1):
        # subsets starting at `first`, generated per leading row to bound memory
        rest = _combinations(m - first - 1, n - 1) + first + 1
        heads = np.full((len(rest), 1), first)
        block = np.hstack([heads, rest])
        for lo in range(0, len(block), _CHUNK):
            idx = block[lo:lo + _CHUNK]
            x, ok = _batched_solve(p.A[idx], p.b[idx])
            x = x[ok]
            feasible = (x @ p.A.T <= p.b + FEAS_TOL).all(axis=1)
            found.append(x[feasible])
    points = np.concatenate(found) if found else np.zeros((0, n))
    if len(points) == 0:
        raise UnboundedOrEmpty("no basic feasible point: the polytope is empty or has no vertex")
    # sort first so that the kept representative does not depend on subset order
    points = points[np.lexsort(points.T[::-1])]
    return VertexCloud(dedup(points))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points, tol=0.0):
    """Strict convex hull, counter-clockwise from the lexicographic minimum.

    Andrew's monotone chain.  Points making a turn of at most ``tol`` (scaled
    by the squared extent of the input) count as collinear and are dropped.
    """
    pts = sorted({(float(x), float(y)) for x, y in np.asarray(points, dtype=float).reshape(-1, 2)})
    if len(pts) <= 2:
        return np.array(pts).reshape(-1, 2)
    extent = max(max(abs(x), abs(y)) for x, y in pts)
    thresh = tol * max(1.0, extent) ** 2

    def chain(seq):
        out = []
        for pt in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], pt) <= thresh:
                out.pop()
            out.append(pt)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return np.array(hull).reshape(-1, 2)


def oracle_projection_vertices(p: HPolytope, plane: PlaneSpec) -> np.ndarray:
    cloud = brute_force_vertices(p)
    i, j = plane.axes
    shadow = dedup(cloud.points[:, [i, j]])
    # vertices carry ~1e-15 solve noise; collinear shadow points must not survive it
    return convex_hull_2d(shadow, tol=1e-12)


def normal_cone_starts(hull) -> np.ndarray:
    """For each CCW hull vertex, the angle in ``[0, 360)`` where its normal cone begins.

    That is the outward normal of the edge arriving at the vertex.
    """
    hull = np.asarray(hull, dtype=float)
    if len(hull) == 1:
        return np.zeros(1)
    edge = hull - np.roll(hull, 1, axis=0)
    angles = np.degrees(np.arctan2(-edge[:, 0], edge[:, 1])) % 360.0
    return angles


def match_cyclic(got, expected, tol=1e-6):
    """Compare two CCW vertex sequences up to a cyclic shift.

    Returns ``(match, distance)`` where ``distance`` is the largest distance
    from a vertex of either list to the nearest vertex of the other.
    """
    got = np.asarray(got, dtype=float).reshape(-1, 2)
    expected = np.asarray(expected, dtype=float).reshape(-1, 2)
    if len(got) == 0 or len(expected) == 0:
        return len(got) == len(expected), 0.0 if len(got) == len(expected) else np.inf
    dist = np.linalg.norm(got[:, None, :] - expected[None, :, :], axis=2)
    hausdorff = float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))
    if len(got) != len(expected):
        return False, hausdorff
    shift = int(dist[0].argmin())
    rotated = np.roll(expected, -shift, axis=0)
    match = bool((np.linalg.norm(got - rotated, axis=1) <= tol).all())
    return match, hausdorff
