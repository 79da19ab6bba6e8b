import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyproj.enumerator import (EnumerationParams, bin_search, edge_normal_deg,
                                 enumerate_vertices, lp_call_budget)
from polyproj.errors import (EmptyPolytope, NoJunctionFound, ProjectionUnbounded,
                             VertexBudgetExceeded)
from polyproj.oracle import convex_hull_2d, match_cyclic, oracle_projection_vertices
from polyproj.polytope import (make_cross_polytope, make_hypercube, make_permutahedron,
                               make_random_bounded)
from polyproj.support import PlaneSpec, sample_support

from conftest import (halfplane_polytope, infeasible_polytope, point_polytope,
                      polygon_from_normals, segment_polytope)

PARAMS = EnumerationParams()


def check_ccw_and_extreme(points, tol=1e-9):
    k = len(points)
    if k < 3:
        return
    a, b, c = points, np.roll(points, -1, axis=0), np.roll(points, -2, axis=0)
    cross = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
    assert (cross > -tol).all()
    for i in range(k):
        others = np.delete(points, i, axis=0)
        assert len(convex_hull_2d(np.vstack([others, points[i]]))) == len(convex_hull_2d(others)) + 1 \
            or len(others) < 3


def test_square(square):
    report = enumerate_vertices(square, PlaneSpec(1, 2, 2))
    np.testing.assert_array_equal(report.result.points, [(1, 1), (-1, 1), (-1, -1), (1, -1)])
    assert report.result.thetas[0] == 0.0
    assert report.lp_calls <= lp_call_budget(4, 0.5)


def test_bin_search_square(square):
    crit, nxt = bin_search(square, PlaneSpec(1, 2, 2), 0.0, 360.0, (1, 1), PARAMS)
    assert abs(crit - 90.0) <= 0.5
    np.testing.assert_array_equal(nxt, (-1, 1))


def test_bin_search_diamond(diamond):
    plane = PlaneSpec(1, 2, 2)
    np.testing.assert_allclose(sample_support(diamond, 0.0, plane).point2d, (1, 0))
    crit, nxt = bin_search(diamond, plane, 0.0, 360.0, (1, 0), PARAMS)
    assert abs(crit - 45.0) <= 0.5
    np.testing.assert_allclose(nxt, (0, 1), atol=1e-12)


def test_bin_search_cube_matches_oracle_junction(cube3):
    plane = PlaneSpec(1, 2, 3)
    hull = oracle_projection_vertices(cube3, plane)
    # oracle junction: outward normal of the hull edge leaving (1, 1)
    i = int(np.argmin(np.linalg.norm(hull - (1, 1), axis=1)))
    junction = edge_normal_deg(hull[i], hull[(i + 1) % len(hull)])
    crit, nxt = bin_search(cube3, plane, 0.0, 360.0, (1, 1), PARAMS)
    assert abs(crit - junction) <= 0.5
    np.testing.assert_allclose(nxt, hull[(i + 1) % len(hull)])


def test_bin_search_no_junction():
    with pytest.raises(NoJunctionFound):
        bin_search(point_polytope(), PlaneSpec(1, 2, 2), 0.0, 360.0, (0, 0), PARAMS)
    with pytest.raises(ValueError):
        bin_search(point_polytope(), PlaneSpec(1, 2, 2), 10.0, 10.0, (0, 0), PARAMS)


def test_permutahedron_order4():
    report = enumerate_vertices(make_permutahedron(4), PlaneSpec(1, 2, 4))
    np.testing.assert_allclose(report.result.points,
                               [(4, 3), (3, 4), (1, 4), (1, 2), (2, 1), (4, 1)], atol=1e-9)


def test_permutahedron_order10_has_six_vertices():
    report = enumerate_vertices(make_permutahedron(10), PlaneSpec(1, 2, 10))
    assert len(report.result) == 6


CORPUS = [
    ("square", make_hypercube(2, 1.0), (1, 2)),
    ("diamond", make_cross_polytope(2), (1, 2)),
    ("cube3", make_hypercube(3, 1.0), (1, 2)),
    ("cube4-23", make_hypercube(4, 1.0), (2, 3)),
    ("octahedron", make_cross_polytope(3), (1, 3)),
    ("cross4", make_cross_polytope(4), (2, 4)),
    ("perm4", make_permutahedron(4), (1, 2)),
    ("perm4-34", make_permutahedron(4), (3, 4)),
    ("perm5", make_permutahedron(5), (2, 5)),
    ("random-2-12", make_random_bounded(2, 12, 3), (1, 2)),
    ("random-3-10", make_random_bounded(3, 10, 8), (1, 3)),
    ("random-4-12", make_random_bounded(4, 12, 1), (1, 2)),
    ("random-5-9", make_random_bounded(5, 9, 21), (2, 4)),
]


@pytest.mark.parametrize("name, p, dims", CORPUS, ids=[c[0] for c in CORPUS])
def test_oracle_equivalence(name, p, dims):
    plane = PlaneSpec(*dims, p.n)
    report = enumerate_vertices(p, plane)
    got = report.result.points
    ok, dist = match_cyclic(got, oracle_projection_vertices(p, plane), 1e-6)
    assert ok, (got, dist)
    check_ccw_and_extreme(got)
    assert report.lp_calls <= lp_call_budget(len(got), 0.5)
    assert (np.diff(report.result.thetas) > 0).all()
    assert 0 <= report.result.thetas.min() and report.result.thetas.max() < 360
    # every vertex lifts to a feasible point supported at its discovery angle
    for theta, pt in report.result.vertices:
        s = sample_support(p, theta, plane)
        assert p.contains(s.witness)
        np.testing.assert_allclose(s.point2d, pt, atol=1e-9)


@settings(max_examples=20, deadline=None)
@given(gaps=st.lists(st.floats(1.0, 100.0), min_size=3, max_size=12),
       offset=st.floats(0, 360, exclude_max=True), radii_seed=st.integers(0, 1000))
def test_exact_count_when_junctions_are_separated(gaps, offset, radii_seed):
    # normals spaced by more than epsilon: the plain bisection must find every vertex
    gaps = np.asarray(gaps)
    gaps = gaps / gaps.sum() * 360.0
    if gaps.max() >= 179.0 or gaps.min() <= 0.6:
        return
    angles = (offset + np.concatenate([[0.0], np.cumsum(gaps)[:-1]])) % 360.0
    radii = np.random.default_rng(radii_seed).uniform(1.0, 1.2, len(angles))
    p = polygon_from_normals(angles, radii)
    plane = PlaneSpec(1, 2, 2)
    expected = oracle_projection_vertices(p, plane)
    for confirm in (False, True):
        params = EnumerationParams(confirm_edges=confirm)
        report = enumerate_vertices(p, plane, params)
        assert match_cyclic(report.result.points, expected, 1e-6)[0]
        assert report.lp_calls <= lp_call_budget(len(report.result), 0.5)


def test_narrow_cone_needs_confirmation():
    # the vertex between normals 101 and 101.2 degrees hides inside one bisection bracket
    p = polygon_from_normals([0, 101, 101.2, 200, 280])
    plane = PlaneSpec(1, 2, 2)
    expected = oracle_projection_vertices(p, plane)
    plain = enumerate_vertices(p, plane, EnumerationParams(confirm_edges=False))
    confirmed = enumerate_vertices(p, plane)
    assert len(plain.result) < len(expected)
    assert match_cyclic(confirmed.result.points, expected, 1e-6)[0]


def test_point_and_segment():
    assert len(enumerate_vertices(point_polytope(), PlaneSpec(1, 2, 2)).result) == 1
    seg = enumerate_vertices(segment_polytope(), PlaneSpec(1, 2, 2)).result
    np.testing.assert_array_equal(seg.points, [(1, 0), (-1, 0)])
    for confirm in (False, True):
        params = EnumerationParams(confirm_edges=confirm)
        assert len(enumerate_vertices(segment_polytope(), PlaneSpec(1, 2, 2), params).result) == 2


def test_segment_shadow_of_3d_body():
    # a thin slab projected edge-on: shadow on (1, 3) is the segment x3 = 0
    p = make_hypercube(3, 1.0)
    A = np.vstack([p.A, [[0, 0, 1], [0, 0, -1]]])
    b = np.concatenate([p.b, [0, 0]])
    from polyproj.polytope import HPolytope
    res = enumerate_vertices(HPolytope(A, b), PlaneSpec(1, 3, 3)).result
    np.testing.assert_allclose(res.points, [(1, 0), (-1, 0)])


def test_errors_propagate():
    with pytest.raises(ProjectionUnbounded):
        enumerate_vertices(halfplane_polytope(), PlaneSpec(1, 2, 2))
    with pytest.raises(EmptyPolytope):
        enumerate_vertices(infeasible_polytope(), PlaneSpec(1, 2, 2))


def test_vertex_budget():
    p = polygon_from_normals(np.arange(0, 360, 60))
    with pytest.raises(VertexBudgetExceeded):
        enumerate_vertices(p, PlaneSpec(1, 2, 2), EnumerationParams(max_vertices=4))


@pytest.mark.parametrize("kwargs", [dict(epsilon_deg=0), dict(epsilon_deg=90), dict(point_tol=0),
                                    dict(max_vertices=2)])
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        EnumerationParams(**kwargs)


@pytest.mark.parametrize("eps", [0.05, 0.5, 2.0, 10.0])
def test_budget_across_epsilon(eps):
    p = make_random_bounded(3, 15, 4)
    plane = PlaneSpec(1, 2, 3)
    report = enumerate_vertices(p, plane, EnumerationParams(epsilon_deg=eps))
    assert report.lp_calls <= lp_call_budget(len(report.result), eps)
    assert match_cyclic(report.result.points, oracle_projection_vertices(p, plane))[0]


def test_budget_formula():
    assert lp_call_budget(4, 0.5) == 2 * 5 * 12
    assert lp_call_budget(6, 0.5) == 168


def test_counters_are_consistent(square):
    report = enumerate_vertices(square, PlaneSpec(1, 2, 2))
    # two LP calls per bisection sample, plus the start and the edge confirmations
    assert report.lp_calls >= 2 * report.binsearch_iters + 2
    assert report.wall_ms > 0
