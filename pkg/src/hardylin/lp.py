"""Small dense two-phase simplex for equality-form linear programs.

Solves ``min c.x`` subject to ``A x = b, x >= 0`` on a full tableau with
Bland's anti-cycling rule.  Meant for the 16-variable problems of this
package, not for anything large.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qcore import ConvergenceError

PIVOT_EPS = 1e-12


class InfeasibleError(ValueError):
    """The constraint system has no nonnegative solution."""


class UnboundedError(ValueError):
    """The objective is unbounded on the feasible set."""


@dataclass
class PhaseOne:
    value: float
    x: np.ndarray
    tableau: np.ndarray
    basis: list[int]


def _pivot(T: np.ndarray, r: int, c: int) -> None:
    T[r] /= T[r, c]
    for i in range(T.shape[0]):
        if i != r and T[i, c] != 0.0:
            T[i] -= T[i, c] * T[r]


def _iterate(T: np.ndarray, basis: list[int], ncols: int, max_iter: int) -> None:
    """Pivot to optimality over the first ``ncols`` columns (Bland's rule)."""
    for _ in range(max_iter):
        cost = T[-1, :ncols]
        entering = np.flatnonzero(cost < -PIVOT_EPS)
        if entering.size == 0:
            return
        j = int(entering[0])
        col = T[:-1, j]
        rows = np.flatnonzero(col > PIVOT_EPS)
        if rows.size == 0:
            raise UnboundedError("objective is unbounded below")
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        tied = rows[ratios <= best + PIVOT_EPS]
        r = int(min(tied, key=lambda i: basis[i]))
        _pivot(T, r, j)
        basis[r] = j
    raise ConvergenceError(f"simplex exceeded {max_iter} pivots")


def _solution(T: np.ndarray, basis: list[int], n: int) -> np.ndarray:
    x = np.zeros(n)
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i, -1]
    return x


def phase_one(A, b, max_iter: int = 10_000) -> PhaseOne:
    """Minimize the sum of artificial variables for ``A x = b, x >= 0``.

    ``value`` is the optimal artificial sum: zero (up to round-off) exactly
    when the system is feasible.
    """
    A = np.array(A, dtype=float, ndmin=2)
    b = np.array(b, dtype=float)
    m, n = A.shape
    flip = b < 0
    A[flip] *= -1
    b[flip] *= -1
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[-1, :n] = -A.sum(axis=0)
    T[-1, -1] = -b.sum()
    basis = list(range(n, n + m))
    _iterate(T, basis, n + m, max_iter)
    return PhaseOne(float(-T[-1, -1]), _solution(T, basis, n), T, basis)


def _drop_artificials(T: np.ndarray, basis: list[int], n: int) -> tuple[np.ndarray, list[int]]:
    keep = []
    for i, j in enumerate(basis):
        if j >= n:
            row = T[i, :n]
            nz = np.flatnonzero(np.abs(row) > 1e-9)
            if nz.size == 0:
                continue  # redundant constraint
            _pivot(T, i, int(nz[0]))
            basis[i] = int(nz[0])
        keep.append(i)
    rows = keep + [T.shape[0] - 1]
    T = np.hstack([T[rows][:, :n], T[rows][:, -1:]])
    return T, [basis[i] for i in keep]


def linprog_eq(c, A, b, feas_tol: float = 1e-7, max_iter: int = 10_000) -> tuple[float, np.ndarray]:
    """Minimize ``c . x`` over ``A x = b, x >= 0``; return ``(value, x)``."""
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    p1 = phase_one(A, b, max_iter)
    if p1.value > feas_tol:
        raise InfeasibleError(f"phase-one optimum {p1.value:.3e} exceeds {feas_tol:.1e}")
    T, basis = _drop_artificials(p1.tableau.copy(), list(p1.basis), n)
    T[-1] = 0.0
    T[-1, :n] = c
    for i, j in enumerate(basis):
        if c[j] != 0.0:
            T[-1] -= c[j] * T[i]
    _iterate(T, basis, n, max_iter)
    x = _solution(T, basis, n)
    return float(c @ x), x
