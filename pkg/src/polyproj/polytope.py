"""H-polytope container and generators for the test and benchmark families."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge

MAX_CROSS_DIM = 20
MAX_PERM_ORDER = 12


@dataclass(frozen=True, eq=False)
class HPolytope:
    """The set ``{x : A x <= b}``.

    Boundedness and non-emptiness are not checked here; consumers find out
    when an LP comes back unbounded or infeasible.
    """

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float)
        b = np.array(self.b, dtype=float).reshape(-1)
        if A.ndim != 2:
            raise ValueError(f"A must be 2-D, got shape {A.shape}")
        if A.shape[0] != b.size:
            raise ValueError(f"A has {A.shape[0]} rows but b has {b.size} entries")
        if A.shape[0] < 1:
            raise ValueError("need at least one constraint")
        if A.shape[1] < 2:
            raise ValueError("ambient dimension must be at least 2")
        if not (np.isfinite(A).all() and np.isfinite(b).all()):
            raise ValueError("constraint data must be finite")
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def __eq__(self, other):
        if not isinstance(other, HPolytope):
            return NotImplemented
        return (self.A.shape == other.A.shape and np.array_equal(self.A, other.A)
                and np.array_equal(self.b, other.b))

    __hash__ = None

    def contains(self, x, tol=1e-9) -> bool:
        return bool((self.A @ np.asarray(x, dtype=float) <= self.b + tol).all())

    def __repr__(self):
        return f"HPolytope(m={self.m}, n={self.n})"


def make_hypercube(n: int, half_width: float = 1.0) -> HPolytope:
    if n < 2:
        raise ValueError("n must be >= 2")
    if not half_width > 0:
        raise ValueError("half_width must be positive")
    eye = np.eye(n)
    A = np.vstack([eye, -eye])
    return HPolytope(A, np.full(2 * n, float(half_width)))


def make_cross_polytope(n: int) -> HPolytope:
    """``sum_k |x_k| <= 1`` as its 2**n sign-vector facets."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > MAX_CROSS_DIM:
        raise DimensionTooLarge(f"cross-polytope of dimension {n} needs 2**{n} constraints")
    A = np.array(list(itertools.product((1.0, -1.0), repeat=n)))
    return HPolytope(A, np.ones(len(A)))


def make_permutahedron(d: int) -> HPolytope:
    """Convex hull of the permutations of ``(1, ..., d)``.

    One row per nonempty proper subset ``S`` bounds ``sum_{i in S} x_i`` by the
    sum of the ``|S|`` largest values; the last two rows pin the total sum from
    both sides.
    """
    if d < 3:
        raise ValueError("order must be >= 3")
    if d > MAX_PERM_ORDER:
        raise DimensionTooLarge(f"permutahedron of order {d} needs 2**{d} constraints")
    masks = np.arange(1, 2**d - 1)
    A = ((masks[:, None] >> np.arange(d)) & 1).astype(float)
    sizes = A.sum(axis=1).astype(int)
    top_sums = np.cumsum(np.arange(d, 0, -1))  # top_sums[k-1] = d + (d-1) + ... + (d-k+1)
    b = top_sums[sizes - 1].astype(float)
    total = d * (d + 1) / 2
    A = np.vstack([A, np.ones(d), -np.ones(d)])
    b = np.concatenate([b, [total, -total]])
    return HPolytope(A, b)


def make_random_bounded(n: int, m: int, seed: int) -> HPolytope:
    """Random unit-normal half-spaces around the origin, boxed into ``|x_k| <= 10``.

    Every offset is at least 0.1, so the origin is strictly interior.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if m < n + 1:
        raise ValueError("m must be >= n + 1")
    rng = np.random.default_rng(seed)
    normals = rng.standard_normal((m, n))
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    offsets = rng.uniform(0.1, 1.0, size=m)
    box = make_hypercube(n, 10.0)
    return HPolytope(np.vstack([normals, box.A]), np.concatenate([offsets, box.b]))
