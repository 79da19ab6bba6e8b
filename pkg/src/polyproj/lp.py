"""Dense simplex for ``maximize c.x subject to A x <= b`` with free ``x``.

The method works directly on the inequality form: a basis is a set of ``n``
linearly independent constraints held at equality (the nonbasic slacks of the
textbook tableau), and the free variables are always basic.  One pivot costs a
couple of ``n x n`` solves plus two ``m x n`` products, so tall systems such as
the order-10 permutahedron (1026 rows) stay cheap.

Pivoting starts with the largest-coefficient rule and switches permanently to
Bland's smallest-index rule at the first degenerate pivot, which guarantees
termination.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NumericalBreakdown

FEAS_TOL = 1e-9
PIVOT_TOL = 1e-10

# a column entry this small is treated as an exact zero; entries between this
# and PIVOT_TOL are ambiguous and abort the solve
_ZERO_TOL = 1e-13


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: float | None = None
    point: np.ndarray | None = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Unbounded(Exception):
    pass


class _Basis:
    """Working set of active constraints for one LP instance.

    Entries of ``work`` index rows of ``A`` (``0..m-1``) or, from ``m`` on,
    pseudo rows spanning the lineality space, which pin ``x`` along directions
    in which every constraint is parallel.
    """

    def __init__(self, A, b, feas_tol, pivot_tol):
        self.A = A
        self.b = b
        self.m, self.n = A.shape
        self.feas_tol = feas_tol
        self.pivot_tol = pivot_tol
        self.work: list[int] = []
        self.pseudo_rows: list[np.ndarray] = []
        self.pseudo_rhs: list[float] = []
        self.max_iter = 50 * (self.m + self.n) + 1000

    def row(self, i):
        return self.A[i] if i < self.m else self.pseudo_rows[i - self.m]

    def rhs(self, i):
        return self.b[i] if i < self.m else self.pseudo_rhs[i - self.m]

    def matrix(self):
        return np.array([self.row(i) for i in self.work]).reshape(len(self.work), self.n)

    def vertex(self):
        AW = self.matrix()
        bW = np.array([self.rhs(i) for i in self.work])
        return _solve(AW, bW), AW

    def ratio_test(self, x, d):
        """Longest feasible step along ``d``; returns ``(step, row)`` or ``(None, None)``."""
        Ad = self.A @ d
        if self.work:
            Ad[[i for i in self.work if i < self.m]] = 0.0
        blocking = Ad > self.pivot_tol
        if not blocking.any():
            if (Ad > _ZERO_TOL * max(1.0, np.abs(d).max())).any():
                raise NumericalBreakdown("no admissible pivot: column entries below pivot tolerance")
            return None, None
        slack = np.maximum(self.b - self.A @ x, 0.0)
        idx = np.flatnonzero(blocking)
        ratios = slack[idx] / Ad[idx]
        step = ratios.min()
        ties = idx[ratios <= step + 1e-12 * (1.0 + step)]
        return step, int(ties.min())

    def crash(self, x, c):
        """Walk from the feasible point ``x`` to a vertex without decreasing ``c.x``."""
        x = np.array(x, dtype=float)
        ctol = self.feas_tol * max(1.0, np.linalg.norm(c))
        while len(self.work) < self.n:
            null = _null_space(self.matrix())
            d = null @ (null.T @ c)
            if np.linalg.norm(d) <= 1e-12 * max(1.0, np.linalg.norm(c)):
                d = null[:, 0]
            for sign in (1.0, -1.0):
                step, enter = self.ratio_test(x, sign * d)
                if enter is not None:
                    x = x + step * sign * d
                    self.work.append(enter)
                    break
                if sign * (c @ d) > ctol:
                    raise _Unbounded
            else:
                # a line lies inside the feasible set and c is flat along it
                ell = d / np.linalg.norm(d)
                self.pseudo_rows.append(ell)
                self.pseudo_rhs.append(float(ell @ x))
                self.work.append(self.m + len(self.pseudo_rows) - 1)
        return x

    def optimize(self, c, locked=frozenset()):
        """Simplex pivots for objective ``c``; constraints in ``locked`` never leave.

        Returns ``(x, multipliers)`` at the optimum.
        """
        ctol = self.feas_tol * max(1.0, np.linalg.norm(c))
        bland = False
        for _ in range(self.max_iter):
            x, AW = self.vertex()
            lam = _solve(AW.T, c)
            cand = [k for k, i in enumerate(self.work)
                    if i < self.m and i not in locked and lam[k] < -ctol]
            if not cand:
                return x, lam
            if bland:
                k = min(cand, key=lambda k: self.work[k])
            else:
                k = min(cand, key=lambda k: (lam[k], self.work[k]))
            e = np.zeros(self.n)
            e[k] = -1.0
            d = _solve(AW, e)
            step, enter = self.ratio_test(x, d)
            if enter is None:
                raise _Unbounded
            if step <= self.feas_tol:
                bland = True
            self.work[k] = enter
        raise NumericalBreakdown(f"simplex did not converge in {self.max_iter} pivots")


def _solve(M, v):
    try:
        return np.linalg.solve(M, v)
    except np.linalg.LinAlgError as exc:
        raise NumericalBreakdown("singular basis matrix") from exc


def _null_space(M):
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n)
    _, _, vt = np.linalg.svd(M)
    return vt[M.shape[0]:].T


def _check_inputs(A, b, c):
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float).reshape(-1)
    c = np.asarray(c, dtype=float).reshape(-1)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValueError(f"A must be a non-empty 2-D matrix, got shape {A.shape}")
    if A.shape[0] != b.size or A.shape[1] != c.size:
        raise ValueError(f"shape mismatch: A {A.shape}, b {b.shape}, c {c.shape}")
    if not (np.isfinite(A).all() and np.isfinite(b).all() and np.isfinite(c).all()):
        raise ValueError("LP data must be finite")
    return A, b, c


def _feasible_point(A, b, feas_tol, pivot_tol):
    """Phase 1: minimise the uniform violation ``t`` of ``A x - t <= b``, ``t >= 0``.

    Returns a point violating no constraint by more than ``feas_tol``, or None.
    """
    m, n = A.shape
    if (b >= 0).all():
        return np.zeros(n)
    A_aux = np.zeros((m + 1, n + 1))
    A_aux[:m, :n] = A
    A_aux[:m, n] = -1.0
    A_aux[m, n] = -1.0
    b_aux = np.append(b, 0.0)
    c_aux = np.zeros(n + 1)
    c_aux[n] = -1.0
    start = np.zeros(n + 1)
    start[n] = -b.min()
    basis = _Basis(A_aux, b_aux, feas_tol, pivot_tol)
    # the auxiliary objective is bounded above by zero
    basis.crash(start, c_aux)
    z, _ = basis.optimize(c_aux)
    if z[n] > feas_tol * (1.0 + np.abs(b).max()):
        return None
    return z[:n]


def _run(A, b, objectives, feas_tol, pivot_tol):
    x0 = _feasible_point(A, b, feas_tol, pivot_tol)
    if x0 is None:
        return LPResult(LPStatus.INFEASIBLE)
    basis = _Basis(A, b, feas_tol, pivot_tol)
    c = objectives[0]
    try:
        basis.crash(x0, c)
        x, lam = basis.optimize(c)
        for c_next in objectives[1:]:
            # keep every constraint with a positive multiplier tight: that is
            # exactly the optimal face of the previous objective
            ctol = feas_tol * max(1.0, np.linalg.norm(c))
            locked = {i for k, i in enumerate(basis.work) if i >= basis.m or lam[k] > ctol}
            ntol = feas_tol * max(1.0, np.linalg.norm(c_next))
            for ell in basis.pseudo_rows:
                if abs(c_next @ ell) > ntol:
                    raise _Unbounded
            c = c_next
            x, lam = basis.optimize(c, frozenset(locked))
    except _Unbounded:
        return LPResult(LPStatus.UNBOUNDED)
    return LPResult(LPStatus.OPTIMAL, float(objectives[0] @ x), x)


def lp_solve(A, b, c, *, feas_tol=FEAS_TOL, pivot_tol=PIVOT_TOL) -> LPResult:
    """Maximise ``c.x`` over ``{x : A x <= b}``.

    The returned point is a basic feasible solution.  Identical inputs give
    bit-identical outputs.
    """
    A, b, c = _check_inputs(A, b, c)
    return _run(A, b, [c], feas_tol, pivot_tol)


def lexicographic_solve(A, b, c_primary, c_secondary, *, feas_tol=FEAS_TOL,
                        pivot_tol=PIVOT_TOL) -> LPResult:
    """Maximise ``c_secondary.x`` over the optimal face of ``c_primary``.

    ``value`` is the primary optimum.  The secondary phase continues from the
    primary optimal basis and only releases constraints whose multiplier is
    zero, so the returned point is an exact vertex of the face rather than a
    point of a slackened slab.
    """
    A, b, c_primary = _check_inputs(A, b, c_primary)
    c_secondary = np.asarray(c_secondary, dtype=float).reshape(-1)
    if c_secondary.size != c_primary.size or not np.isfinite(c_secondary).all():
        raise ValueError("c_secondary must be a finite vector of the same length as c_primary")
    return _run(A, b, [c_primary, c_secondary], feas_tol, pivot_tol)
