"""CHSH operator, its maximization over settings, and the GHZ product-model check."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qcore
from .lhv import BellD2Model, model_expectation
from .optimize import golden_section_max
from .qcore import I2, PAULI

TSIRELSON = 2.0 * math.sqrt(2.0)
CLASSICAL = 2.0


@dataclass(frozen=True)
class ChshSettings:
    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            object.__setattr__(self, name, qcore.unit_vector(getattr(self, name), atol=1e-9))


@dataclass(frozen=True)
class ChshReport:
    value: float
    settings: ChshSettings
    bound_clustered: float
    bound_standard: float = CLASSICAL
    tsirelson: float = TSIRELSON


def chsh_operator(s: ChshSettings) -> np.ndarray:
    """a.s x (b + b').s + a'.s x (b - b').s, the sums taken before the spectral split."""
    def sig(v):
        return np.tensordot(v, PAULI, axes=1)

    return qcore.tensor_product(sig(s.a), sig(s.b + s.b_prime)) + qcore.tensor_product(
        sig(s.a_prime), sig(s.b - s.b_prime)
    )


def clustered_bound(b, b_prime) -> float:
    """|b + b'| + |b - b'|: the bound reached when each clustered term is read as one dichotomic variable."""
    b, b_prime = qcore.unit_vector(b, 1e-9), qcore.unit_vector(b_prime, 1e-9)
    return float(np.linalg.norm(b + b_prime) + np.linalg.norm(b - b_prime))


def _four_term(psi, s: ChshSettings) -> float:
    corr = lambda x, y: qcore.expectation(  # noqa: E731
        qcore.tensor_product(qcore.pauli_observable(x, 1e-9), qcore.pauli_observable(y, 1e-9)), psi
    )
    return corr(s.a, s.b) + corr(s.a, s.b_prime) + corr(s.a_prime, s.b) - corr(s.a_prime, s.b_prime)


def chsh_value(psi, s: ChshSettings, atol: float = qcore.ATOL) -> ChshReport:
    psi = qcore.as_state(psi)
    if psi.shape != (4,):
        raise qcore.DimensionError("CHSH needs a two-qubit state")
    value = qcore.expectation(chsh_operator(s), psi)
    expanded = _four_term(psi, s)
    if abs(value - expanded) > atol:
        raise ArithmeticError(f"operator and four-term forms differ by {abs(value - expanded):.3e}")
    return ChshReport(value, s, clustered_bound(s.b, s.b_prime))


def correlation_matrix(state) -> np.ndarray:
    """T_ij = <sigma_i x sigma_j> for a two-qubit state vector or density matrix."""
    state = np.asarray(state, dtype=complex)
    rho = np.outer(state, state.conj()) if state.ndim == 1 else state
    if rho.shape != (4, 4):
        raise qcore.DimensionError("correlation_matrix needs a two-qubit state")
    return np.array([[np.trace(rho @ np.kron(si, sj)).real for sj in PAULI] for si in PAULI])


def chsh_oracle(state) -> float:
    """Closed-form maximal CHSH value 2 sqrt(s1^2 + s2^2) from the two largest singular values of T."""
    s = np.linalg.svd(correlation_matrix(state), compute_uv=False)
    return float(2.0 * math.sqrt(s[0] ** 2 + s[1] ** 2))


def _sphere(theta, phi):
    st = np.sin(theta)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta) * np.ones_like(phi)], axis=-1)


def _best_response(v):
    n = np.linalg.norm(v)
    return v / n if n > 1e-15 else np.array([0.0, 0.0, 1.0])


def max_chsh_correlation(T, n_theta: int = 12, n_phi: int = 24, tol: float = 1e-10,
                         max_sweeps: int = 200) -> tuple[float, ChshSettings]:
    """Maximize the CHSH value over settings for a correlation matrix ``T``.

    For fixed b, b' the best a, a' are the directions of T(b + b') and
    T(b - b'), leaving |T(b + b')| + |T(b - b')| to maximize over the two
    angles of each of b and b'.  A 12 x 24 angle grid per vector seeds
    coordinate-wise golden-section refinement.
    """
    T = np.asarray(T, dtype=float)

    def objective(x):
        b, bp = _sphere(x[0], x[1]), _sphere(x[2], x[3])
        return np.linalg.norm(T @ (b + bp)) + np.linalg.norm(T @ (b - bp))

    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    grid = _sphere(th.ravel(), ph.ravel())
    tb = grid @ T.T
    vals = np.linalg.norm(tb[:, None] + tb[None], axis=-1) + np.linalg.norm(tb[:, None] - tb[None], axis=-1)
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    x = np.array([th.ravel()[i], ph.ravel()[i], th.ravel()[j], ph.ravel()[j]])
    best = objective(x)

    steps = np.array([math.pi / (n_theta - 1), 2.0 * math.pi / n_phi] * 2)
    for _ in range(max_sweeps):
        start = best
        for k in range(4):
            def line(t, k=k):
                y = x.copy()
                y[k] = t
                return objective(y)

            t, val = golden_section_max(line, x[k] - steps[k], x[k] + steps[k], tol=tol)
            if val > best:
                x[k], best = t, val
        if best - start < 1e-14:
            if steps[0] <= 1e-6:
                break
            steps = steps * 0.25

    b, bp = _sphere(x[0], x[1]), _sphere(x[2], x[3])
    settings = ChshSettings(_best_response(T @ (b + bp)), _best_response(T @ (b - bp)), b, bp)
    return float(best), settings


def max_chsh(psi) -> ChshReport:
    """Largest CHSH value of a two-qubit pure state over all settings, re-evaluated on the operator."""
    psi = qcore.as_state(psi)
    _, settings = max_chsh_correlation(correlation_matrix(psi))
    return chsh_value(psi, settings)


def ghz_state() -> np.ndarray:
    """(|+++> + |--->) / sqrt(2)."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = psi[7] = 1.0
    return qcore.state(psi)


def ghz_marginal_models() -> tuple[BellD2Model, BellD2Model, BellD2Model]:
    """Single-qubit models matching the GHZ reduced states, all maximally mixed."""
    psi = ghz_state().reshape(2, 2, 2)
    models = []
    for k in range(3):
        m = np.moveaxis(psi, k, 0).reshape(2, 4)
        rho = m @ m.conj().T
        models.append(BellD2Model(np.array([np.trace(rho @ s).real for s in PAULI])))
    return tuple(models)


def ghz_factored_expectation(a, b, c, m1: BellD2Model, m2: BellD2Model, m3: BellD2Model) -> float:
    """<a x b x c> in the three-party model with independent hidden variables."""
    return model_expectation(a, m1) * model_expectation(b, m2) * model_expectation(c, m3)


def ghz_quantum_expectation(a, b, c) -> float:
    return qcore.expectation(qcore.tensor_product(a, b, c), ghz_state())


def factored_pair_correlation(m1: BellD2Model, m2: BellD2Model) -> np.ndarray:
    """Correlation matrix of a two-party product model: outer product of the Bloch vectors."""
    return np.outer(m1.bloch, m2.bloch)


def factored_pair_chsh(s: ChshSettings, m1: BellD2Model, m2: BellD2Model) -> float:
    def e(x, y):
        return model_expectation(qcore.pauli_observable(x, 1e-9), m1) * model_expectation(
            qcore.pauli_observable(y, 1e-9), m2
        )

    return e(s.a, s.b) + e(s.a, s.b_prime) + e(s.a_prime, s.b) - e(s.a_prime, s.b_prime)


def ghz_pair_density(pair: tuple[int, int]) -> np.ndarray:
    """Reduced two-qubit density matrix of the GHZ state on ``pair``."""
    psi = ghz_state().reshape(2, 2, 2)
    other = ({0, 1, 2} - set(pair)).pop()
    m = np.moveaxis(psi, [pair[0], pair[1], other], [0, 1, 2]).reshape(4, 2)
    return m @ m.conj().T


PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class GhzCheck:
    quantum: dict[str, float]
    factored: dict[str, float]
    factored_pair_max: dict[tuple[int, int], float]
    quantum_pair_max: dict[tuple[int, int], float]
    passed: bool


def ghz_check(tol: float = 1e-9) -> GhzCheck:
    """GHZ correlators against the factored model, plus pairwise CHSH maxima of both."""
    ops = {"X": qcore.SIGMA_X, "Y": qcore.SIGMA_Y, "I": I2}
    models = ghz_marginal_models()
    labels = ("XXX", "XYY", "YXY", "YYX")
    quantum = {k: ghz_quantum_expectation(*(ops[c] for c in k)) for k in labels}
    factored = {k: ghz_factored_expectation(*(ops[c] for c in k), *models) for k in labels}
    fpair = {p: max_chsh_correlation(factored_pair_correlation(models[p[0]], models[p[1]]))[0] for p in PAIRS}
    qpair = {p: max_chsh_correlation(correlation_matrix(ghz_pair_density(p)))[0] for p in PAIRS}
    differs = any(abs(quantum[k] - factored[k]) > 0.5 for k in labels)
    passed = differs and all(v <= CLASSICAL + tol for v in fpair.values())
    return GhzCheck(quantum, factored, fpair, qpair, passed)
