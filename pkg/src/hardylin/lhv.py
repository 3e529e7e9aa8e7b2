"""Hidden-variable side of Hardy's argument.

The hidden variable is reduced to the 16 joint 0/1 assignments of the
projectors (U_1, D_1, U_2, D_2).  A distribution over these assignments is
all that any moment depends on, so every question about Hardy's conditions
becomes a linear program over the probability simplex.

The module also carries a dispersion-free single-qubit model (uniform
``lambda`` in [-1, 1]) and the product of two such models, which restores
linearity of expectation values but only describes product states.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import hardy, lp, qcore

NAMES = ("u1", "d1", "u2", "d2")
FEASIBILITY_TOL = 1e-7
WITNESS_TOL = 1e-9


class DeterministicStrategy(NamedTuple):
    u1: int
    d1: int
    u2: int
    d2: int


def enumerate_strategies() -> list[DeterministicStrategy]:
    """All 16 assignments, counting in binary over (u1, d1, u2, d2)."""
    return [DeterministicStrategy(*bits) for bits in itertools.product((0, 1), repeat=4)]


STRATEGIES = enumerate_strategies()
_BITS = np.array(STRATEGIES, dtype=float)


def monomial(*names: str) -> np.ndarray:
    """Value of the product of the named projector values on every strategy."""
    out = np.ones(len(STRATEGIES))
    for name in names:
        out = out * _BITS[:, NAMES.index(name)]
    return out


@dataclass(frozen=True)
class MomentConstraint:
    coeffs: np.ndarray
    target: float
    label: str = ""
    kind: str = "eq"


class DegenerateError(ValueError):
    """alpha*beta = 0: Hardy's conditionals are undefined and the constraint set is trivial."""


def hardy_constraints(p) -> list[MomentConstraint]:
    """The eight moment equalities encoding Hardy's conditions.

    Conditional statements ``D_1 = 1 => U_2 = 1`` enter as ``E[d1 u2] = E[d1]``,
    which for nonnegative weights is the same thing.
    """
    p = hardy._params(p)
    t = p.ab
    if t <= 0.0:
        raise DegenerateError(f"alpha*beta = {t}: all Hardy moments vanish")
    d = t * t / (1.0 - t)
    return [
        MomentConstraint(monomial("u1"), t, "E[u1]"),
        MomentConstraint(monomial("u2"), t, "E[u2]"),
        MomentConstraint(monomial("d1"), d, "E[d1]"),
        MomentConstraint(monomial("d2"), d, "E[d2]"),
        MomentConstraint(monomial("d1", "u2"), d, "E[d1 u2]"),
        MomentConstraint(monomial("d2", "u1"), d, "E[d2 u1]"),
        MomentConstraint(monomial("u1", "u2"), 0.0, "E[u1 u2]"),
        MomentConstraint(monomial("d1", "d2"), hardy.joint_dd(t), "E[d1 d2]"),
    ]


@dataclass
class LhvDistribution:
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (len(STRATEGIES),):
            raise ValueError(f"expected {len(STRATEGIES)} weights, got shape {w.shape}")
        if w.min() < -1e-12:
            raise ValueError(f"negative weight {w.min():.3e}")
        w = np.clip(w, 0.0, None)
        if abs(w.sum() - 1.0) > WITNESS_TOL:
            raise ValueError(f"weights sum to {w.sum()!r}")
        self.weights = w

    def moment(self, coeffs) -> float:
        return float(np.asarray(coeffs, dtype=float) @ self.weights)

    def support(self, tol: float = WITNESS_TOL) -> dict[DeterministicStrategy, float]:
        return {s: float(w) for s, w in zip(STRATEGIES, self.weights) if w > tol}


@dataclass
class FeasibilityResult:
    feasible: bool
    max_violation: float
    witness: LhvDistribution | None = None
    residuals: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def status(self) -> str:
        return "FEASIBLE" if self.feasible else "INFEASIBLE"


def _system(cs: Sequence[MomentConstraint]) -> tuple[np.ndarray, np.ndarray]:
    A = np.vstack([np.ones(len(STRATEGIES))] + [c.coeffs for c in cs])
    b = np.array([1.0] + [c.target for c in cs])
    return A, b


def solve_feasibility(cs: Sequence[MomentConstraint], tol: float = FEASIBILITY_TOL) -> FeasibilityResult:
    """Decide whether some distribution over strategies meets every constraint.

    ``max_violation`` is the phase-one optimum (sum of artificial variables).
    """
    if not cs:
        w = np.full(len(STRATEGIES), 1.0 / len(STRATEGIES))
        return FeasibilityResult(True, 0.0, LhvDistribution(w))
    A, b = _system(cs)
    p1 = lp.phase_one(A, b)
    if p1.value > tol:
        return FeasibilityResult(False, p1.value)
    w = np.clip(p1.x, 0.0, None)
    w /= w.sum()
    residuals = A[1:] @ w - b[1:]
    if np.max(np.abs(residuals)) > WITNESS_TOL:
        raise ArithmeticError(
            f"phase one reported feasibility but the witness misses by {np.max(np.abs(residuals)):.3e}"
        )
    return FeasibilityResult(True, p1.value, LhvDistribution(w), residuals)


def lhv_moment_range(cs: Sequence[MomentConstraint], objective) -> tuple[float, float]:
    """Smallest and largest value of ``E[objective]`` over distributions satisfying ``cs``.

    Raises ``lp.InfeasibleError`` when no distribution satisfies ``cs``.
    """
    c = np.asarray(objective, dtype=float)
    A, b = _system(cs)
    lo, _ = lp.linprog_eq(c, A, b)
    hi, _ = lp.linprog_eq(-c, A, b)
    return lo + 0.0, -hi + 0.0


def drop(cs: Sequence[MomentConstraint], *labels: str) -> list[MomentConstraint]:
    return [c for c in cs if c.label not in labels]


def clustered_u1u2(p) -> float:
    """E[u1 u2] translated through the cluster (U_1 + D_1) U_2 - D_1 U_2.

    U_1 + D_1 is replaced by its spectral decomposition mu_1 P_1 + mu_2 P_2,
    each term being a well-defined product of commuting projectors.
    """
    p = hardy._params(p)
    psi = hardy.hardy_state(p)
    basis = hardy.hardy_basis(p)
    U = qcore.projector(basis.u2)
    D = qcore.projector(basis.d1)
    sd = qcore.spectral_decompose2(hardy.u_plus_d(p))
    cluster = sd.mu1 * qcore.expectation(qcore.tensor_product(sd.p1, U), psi) + sd.mu2 * qcore.expectation(
        qcore.tensor_product(sd.p2, U), psi
    )
    return cluster - qcore.expectation(qcore.tensor_product(D, U), psi)


class TranslationReport(NamedTuple):
    standard_min: float
    standard_max: float
    clustered: float

    @property
    def gap(self) -> float:
        return self.standard_min - self.clustered


def translation_report(p) -> TranslationReport:
    """Compare the two hidden-variable readings of <U_1 U_2>.

    The standard reading keeps Hardy's other conditions (including
    E[d1 d2] = <D_1 D_2>) and lets the LP bound E[u1 u2]; the clustered
    reading goes through the spectral decomposition of U_1 + D_1.
    """
    cs = drop(hardy_constraints(p), "E[u1 u2]")
    lo, hi = lhv_moment_range(cs, monomial("u1", "u2"))
    return TranslationReport(lo, hi, clustered_u1u2(p))


def chsh_pm(dist: LhvDistribution) -> float:
    """CHSH combination E[AB + AB' + A'B - A'B'] with A = 2u1-1, A' = 2d1-1, B = 2u2-1, B' = 2d2-1."""
    s = 2.0 * _BITS - 1.0
    A, A2, B, B2 = s.T
    return dist.moment(A * B + A * B2 + A2 * B - A2 * B2)


@dataclass(frozen=True)
class BellD2Model:
    """Dispersion-free qubit model: lambda uniform on [-1, 1], projector (1 + a.sigma)/2 has value
    ``[lambda + a . bloch >= 0]``."""

    bloch: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.bloch, dtype=float)
        if v.shape != (3,) or v @ v > 1.0 + qcore.ATOL:
            raise ValueError("bloch vector must be a 3-vector of length at most 1")
        object.__setattr__(self, "bloch", v)

    @classmethod
    def from_state(cls, psi) -> BellD2Model:
        return cls(qcore.state_bloch(psi))

    lambda_domain = (-1.0, 1.0)


def bell_d2_value(a, m: BellD2Model, lam: float) -> int:
    """Value (0 or 1) of the projector (1 + a.sigma)/2 at hidden variable ``lam``."""
    if not -1.0 <= lam <= 1.0:
        raise ValueError(f"lambda = {lam} outside [-1, 1]")
    a = qcore.unit_vector(a)
    return 1 if lam + a @ m.bloch >= 0.0 else 0


def bell_d2_mean(a, m: BellD2Model) -> float:
    """Closed-form lambda average of ``bell_d2_value``: (1 + a . bloch) / 2."""
    a = qcore.unit_vector(a)
    c = float(np.clip(a @ m.bloch, -1.0, 1.0))
    return 0.5 * (1.0 + c)


def observable_value(op, m: BellD2Model, lam: float) -> float:
    """Dispersion-free value of a qubit observable via its spectral decomposition."""
    c0, c = qcore.bloch_vector(op)
    r = float(np.linalg.norm(c))
    if r < qcore.ATOL:
        return c0
    return c0 + r * (2 * bell_d2_value(c / r, m, lam) - 1)


def model_expectation(op, m: BellD2Model) -> float:
    """Lambda average of ``observable_value``; equals c0 + c . bloch for op = c0 I + c . sigma."""
    c0, c = qcore.bloch_vector(op)
    r = float(np.linalg.norm(c))
    if r < qcore.ATOL:
        return c0
    return c0 + r * (2.0 * bell_d2_mean(c / r, m) - 1.0)


def product_lhv_expectation(a1, b2, m1: BellD2Model, m2: BellD2Model) -> float:
    """<a1 x b2> in the factorized model P(l1, l2) = P1(l1) P2(l2)."""
    return model_expectation(a1, m1) * model_expectation(b2, m2)


def hardy_witness_half() -> LhvDistribution:
    """The certificate at alpha*beta = 1/2: D_1 = U_2 and D_2 = U_1, with U_i + D_i = 1."""
    w = np.zeros(len(STRATEGIES))
    w[STRATEGIES.index(DeterministicStrategy(1, 0, 0, 1))] = 0.5
    w[STRATEGIES.index(DeterministicStrategy(0, 1, 1, 0))] = 0.5
    return LhvDistribution(w)


def witness_moments(dist: LhvDistribution) -> hardy.HardyMoments:
    """Hardy's predictions as reproduced by averaging over a strategy distribution."""
    d1, d2 = dist.moment(monomial("d1")), dist.moment(monomial("d2"))
    cond = lambda num, den: None if den == 0.0 else num / den  # noqa: E731
    return hardy.HardyMoments(
        dist.moment(monomial("u1")),
        dist.moment(monomial("u2")),
        d1,
        d2,
        cond(dist.moment(monomial("d1", "u2")), d1),
        cond(dist.moment(monomial("d2", "u1")), d2),
        cond(dist.moment(monomial("d1", "d2")), d1),
        dist.moment(monomial("u1", "u2")),
    )

