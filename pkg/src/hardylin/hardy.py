"""Hardy's two-qubit state, his projectors, and their quantum predictions.

Everything is parameterized by the real amplitude ``alpha`` in [0, 1] with
``beta = sqrt(1 - alpha**2)``.  Each prediction exists twice: as a closed
form and as a direct matrix evaluation; ``hardy_moments`` checks that both
agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import qcore
from .optimize import golden_bracket
from .qcore import I2, KET_MINUS, KET_PLUS


@dataclass(frozen=True)
class HardyParams:
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")

    @classmethod
    def from_product(cls, ab: float) -> HardyParams:
        """Parameters with ``alpha * beta = ab`` and ``alpha >= beta``."""
        if not 0.0 <= ab <= 0.5:
            raise ValueError(f"alpha*beta must lie in [0, 1/2], got {ab}")
        # alpha^2 and beta^2 are the roots of x^2 - x + ab^2
        a2 = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - 4.0 * ab * ab)))
        return cls(math.sqrt(a2))

    @property
    def beta(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.alpha**2))

    @property
    def ab(self) -> float:
        return self.alpha * self.beta


class HardyBasis(NamedTuple):
    u1: np.ndarray
    d1: np.ndarray
    u2: np.ndarray
    d2: np.ndarray


@dataclass(frozen=True)
class HardyMoments:
    """The quantum predictions for Hardy's state.

    Conditional probabilities are ``None`` when ``<D_i> = 0`` (product states).
    """

    u1: float
    u2: float
    d1: float
    d2: float
    cond_d1u2: float | None
    cond_d2u1: float | None
    cond_d1d2: float | None
    u1u2: float


def _params(p) -> HardyParams:
    return p if isinstance(p, HardyParams) else HardyParams(float(p))


def hardy_state(p) -> np.ndarray:
    """alpha |++> - beta |-->, in the order (++, +-, -+, --)."""
    p = _params(p)
    return qcore.as_state(np.array([p.alpha, 0.0, 0.0, -p.beta], dtype=complex))


def hardy_basis(p) -> HardyBasis:
    """The vectors |u_i>, |d_i> (identical for both parties).

    The normalizations sqrt(alpha + beta) and sqrt(alpha^3 + beta^3) never
    vanish on [0, 1], so the endpoints are the continuous limits:
    u = |+> at alpha = 0 and u = |-> at alpha = 1.
    """
    p = _params(p)
    a, b = p.alpha, p.beta
    u = (math.sqrt(b) * KET_PLUS + math.sqrt(a) * KET_MINUS) / math.sqrt(a + b)
    d = (b**1.5 * KET_PLUS - a**1.5 * KET_MINUS) / math.sqrt(a**3 + b**3)
    u, d = qcore.as_state(u), qcore.as_state(d)
    return HardyBasis(u, d, u.copy(), d.copy())


def overlap_ud(p) -> float:
    """Closed form of <u_i|d_i>."""
    p = _params(p)
    a, b = p.alpha, p.beta
    return (b * b - a * a) / math.sqrt((a + b) * (a**3 + b**3))


class HardyOperators(NamedTuple):
    """Projectors U_1, D_1, U_2, D_2 embedded in the two-qubit space."""

    U1: np.ndarray
    D1: np.ndarray
    U2: np.ndarray
    D2: np.ndarray


def hardy_projectors(p) -> HardyOperators:
    basis = hardy_basis(p)
    U = qcore.projector(basis.u1)
    D = qcore.projector(basis.d1)
    return HardyOperators(
        qcore.tensor_product(U, I2),
        qcore.tensor_product(D, I2),
        qcore.tensor_product(I2, U),
        qcore.tensor_product(I2, D),
    )


def closed_form_moments(p) -> HardyMoments:
    p = _params(p)
    t = p.ab
    d = t * t / (1.0 - t)
    if d == 0.0:
        cond = (None, None, None)
    else:
        cond = (1.0, 1.0, 1.0 - t / (1.0 - t))
    return HardyMoments(t, t, d, d, *cond, 0.0)


def matrix_moments(p) -> HardyMoments:
    """The same predictions by direct evaluation of <psi| . |psi> in four dimensions."""
    p = _params(p)
    psi = hardy_state(p)
    ops = hardy_projectors(p)
    ev = lambda op: qcore.expectation(op, psi)  # noqa: E731
    u1, u2, d1, d2 = ev(ops.U1), ev(ops.U2), ev(ops.D1), ev(ops.D2)
    if d1 == 0.0 or d2 == 0.0 or closed_form_moments(p).d1 == 0.0:
        cond = (None, None, None)
    else:
        cond = (
            ev(ops.D1 @ ops.U2 @ ops.D1) / d1,
            ev(ops.D2 @ ops.U1 @ ops.D2) / d2,
            ev(ops.D1 @ ops.D2 @ ops.D1) / d1,
        )
    return HardyMoments(u1, u2, d1, d2, *cond, ev(ops.U1 @ ops.U2))


def moments_gap(a: HardyMoments, b: HardyMoments) -> float:
    """Largest absolute difference between two moment records (inf on undefined mismatch)."""
    gap = 0.0
    for x, y in zip(a.__dict__.values(), b.__dict__.values()):
        if x is None or y is None:
            if x is not y:
                return math.inf
            continue
        gap = max(gap, abs(x - y))
    return gap


def hardy_moments(p, atol: float = qcore.ATOL) -> HardyMoments:
    """Closed-form predictions, cross-checked against the matrix evaluation."""
    closed = closed_form_moments(p)
    gap = moments_gap(closed, matrix_moments(p))
    if gap > atol:
        raise ArithmeticError(f"closed form and matrix evaluation differ by {gap:.3e}")
    return closed


def joint_dd(t: float) -> float:
    """<D_1 D_2> as a function of t = alpha*beta."""
    return t * t * (1.0 - 2.0 * t) / (1.0 - t) ** 2


def joint_dd_gradient(t: float) -> float:
    return 2.0 * t * (1.0 - 3.0 * t + t * t) / (1.0 - t) ** 3


def hardy_joint(p) -> float:
    return joint_dd(_params(p).ab)


def matrix_joint(p) -> float:
    p = _params(p)
    ops = hardy_projectors(p)
    return qcore.expectation(ops.D1 @ ops.D2 @ ops.D1, hardy_state(p))


def hardy_maximum(grid: int = 500, atol: float = 1e-12) -> tuple[float, float]:
    """Maximize <D_1 D_2> over t = alpha*beta in (0, 1/2].

    A coarse grid brackets the peak, golden-section search narrows the
    bracket, and bisection on the sign of the analytic derivative finishes
    it, since the flat top limits golden section to about sqrt(eps).
    """
    ts = np.linspace(0.0, 0.5, grid + 1)
    k = int(np.argmax([joint_dd(t) for t in ts]))
    lo, hi = ts[max(k - 1, 0)], ts[min(k + 1, grid)]
    lo, hi = golden_bracket(joint_dd, lo, hi, tol=1e-7)
    step = hi - lo
    while joint_dd_gradient(lo) <= 0 and lo > 0:
        lo = max(lo - step, 0.0)
    while joint_dd_gradient(hi) >= 0 and hi < 0.5:
        hi = min(hi + step, 0.5)
    while hi - lo > atol:
        mid = 0.5 * (lo + hi)
        if joint_dd_gradient(mid) > 0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    return t, joint_dd(t)


def u_plus_d(p) -> np.ndarray:
    """The single-qubit operator U_i + D_i."""
    basis = hardy_basis(p)
    return qcore.projector(basis.u1) + qcore.projector(basis.d1)


def u_plus_d_spectrum(p) -> qcore.SpectralPair:
    return qcore.spectral_decompose2(u_plus_d(p))
