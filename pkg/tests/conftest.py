import numpy as np
import pytest

from polyproj.polytope import HPolytope, make_cross_polytope, make_hypercube


@pytest.fixture
def square():
    return make_hypercube(2, 1.0)


@pytest.fixture
def diamond():
    return make_cross_polytope(2)


@pytest.fixture
def cube3():
    return make_hypercube(3, 1.0)


def polygon_from_normals(angles_deg, offsets=None):
    """Polygon {x : u_k . x <= r_k} with outward normals at the given angles."""
    t = np.radians(np.asarray(angles_deg, dtype=float))
    A = np.column_stack([np.cos(t), np.sin(t)])
    b = np.ones(len(t)) if offsets is None else np.asarray(offsets, dtype=float)
    return HPolytope(A, b)


def point_polytope():
    return HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1]], [0, 0, 0, 0])


def segment_polytope():
    return HPolytope([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 0, 0])


def halfplane_polytope():
    return HPolytope([[-1, 0]], [0])


def infeasible_polytope():
    return HPolytope([[1, 0], [-1, 0]], [-1, -1])
