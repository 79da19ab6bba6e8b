import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyproj.errors import DimensionTooLarge
from polyproj.lp import LPStatus, lp_solve
from polyproj.oracle import brute_force_vertices
from polyproj.polytope import (HPolytope, make_cross_polytope, make_hypercube,
                               make_permutahedron, make_random_bounded)


@pytest.mark.parametrize("n, w, m", [(2, 1, 4), (3, 2, 6), (10, 1, 20)])
def test_hypercube_shape(n, w, m):
    p = make_hypercube(n, w)
    assert (p.m, p.n) == (m, n)
    assert p.contains(np.full(n, w)) and not p.contains(np.full(n, w + 1e-6))


def test_square_rows(square):
    assert {tuple(r) for r in square.A} == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    np.testing.assert_array_equal(square.b, 1.0)


@pytest.mark.parametrize("n, m", [(2, 4), (3, 8)])
def test_cross_polytope_shape(n, m):
    p = make_cross_polytope(n)
    assert (p.m, p.n) == (m, n)
    assert p.contains(np.eye(n)[0]) and not p.contains(np.full(n, 0.6))


def test_cross_polytope_guard():
    with pytest.raises(DimensionTooLarge):
        make_cross_polytope(21)


@pytest.mark.parametrize("d, m", [(3, 8), (4, 16), (10, 1024)])
def test_permutahedron_shape(d, m):
    p = make_permutahedron(d)
    assert (p.m, p.n) == (m, d)
    ident = np.arange(1, d + 1, dtype=float)
    assert p.contains(ident)
    # the equality pair is tight at every permutation
    np.testing.assert_allclose(p.A[-2:] @ ident, p.b[-2:])
    assert p.b[-2] == -p.b[-1] == d * (d + 1) / 2


def test_permutahedron_order3_vertices_are_permutations():
    pts = brute_force_vertices(make_permutahedron(3)).points
    got = sorted(tuple(np.round(v).astype(int)) for v in pts)
    assert got == sorted(itertools.permutations((1, 2, 3)))
    np.testing.assert_allclose(pts, np.round(pts), atol=1e-9)


def test_permutahedron_order4_has_24_vertices():
    assert brute_force_vertices(make_permutahedron(4)).count == 24


def test_permutahedron_subset_bound():
    p = make_permutahedron(5)
    # x1 + x3 <= 5 + 4
    row = np.array([1, 0, 1, 0, 0], dtype=float)
    i = next(k for k, a in enumerate(p.A) if np.array_equal(a, row))
    assert p.b[i] == 9


def test_permutahedron_guards():
    with pytest.raises(DimensionTooLarge):
        make_permutahedron(13)
    with pytest.raises(ValueError):
        make_permutahedron(2)


@pytest.mark.parametrize("n, m, seed, m_total", [(2, 3, 42, 7), (6, 20, 7, 32)])
def test_random_bounded_shape(n, m, seed, m_total):
    p = make_random_bounded(n, m, seed)
    assert (p.m, p.n) == (m_total, n)
    assert (p.b[:m] >= 0.1).all()
    np.testing.assert_allclose(np.linalg.norm(p.A[:m], axis=1), 1.0)
    assert (p.A @ np.zeros(n) < p.b).all()


def test_random_bounded_is_deterministic():
    assert make_random_bounded(4, 9, 5) == make_random_bounded(4, 9, 5)
    assert make_random_bounded(4, 9, 5) != make_random_bounded(4, 9, 6)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31), n=st.integers(2, 6), extra=st.integers(1, 14))
def test_random_bounded_axis_lps_are_optimal(seed, n, extra):
    p = make_random_bounded(n, n + extra, seed)
    for k in range(n):
        for sign in (1.0, -1.0):
            c = np.zeros(n)
            c[k] = sign
            assert lp_solve(p.A, p.b, c).status is LPStatus.OPTIMAL


@pytest.mark.parametrize("A, b", [
    ([[1, 0]], [1, 2]),
    ([[1]], [1]),
    (np.zeros((0, 2)), []),
    ([[1, np.inf]], [1]),
])
def test_hpolytope_invariants(A, b):
    with pytest.raises(ValueError):
        HPolytope(A, b)


def test_hpolytope_is_immutable(square):
    with pytest.raises(ValueError):
        square.A[0, 0] = 5.0
