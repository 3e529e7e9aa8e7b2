"""Dense complex linear algebra for one, two and three qubits.

States and observables are plain numpy arrays (``complex128``); the helpers
here validate them and implement the handful of operations the rest of the
package needs.  Supported Hilbert-space dimensions are 2, 4 and 8.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

ATOL = 1e-12
ITER_ATOL = 1e-9
DIMS = (2, 4, 8)

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])

KET_PLUS = np.array([1, 0], dtype=complex)
KET_MINUS = np.array([0, 1], dtype=complex)


class NormalizationError(ValueError):
    """A vector that must have unit norm does not."""


class DimensionError(ValueError):
    """Operand dimensions are unsupported or do not match."""


class HermiticityError(ValueError):
    """An operator expected to be Hermitian is not."""


class ConvergenceError(ArithmeticError):
    """An iterative routine hit its iteration cap."""


class SpectralPair(NamedTuple):
    mu1: float
    mu2: float
    p1: np.ndarray
    p2: np.ndarray


def unit_vector(v, atol: float = ATOL) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DimensionError(f"expected a 3-vector, got shape {v.shape}")
    if abs(v @ v - 1.0) > atol:
        raise NormalizationError(f"|n|^2 = {v @ v!r}, expected 1")
    return v


def normalized(v) -> np.ndarray:
    """Scale a real 3-vector or a complex amplitude vector to unit norm."""
    v = np.asarray(v)
    n = np.linalg.norm(v)
    if n == 0:
        raise NormalizationError("cannot normalize the zero vector")
    return v / n


def as_state(psi, atol: float = ATOL) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.shape[0] not in DIMS:
        raise DimensionError(f"state must have length in {DIMS}, got {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1.0) > atol:
        raise NormalizationError("state is not normalized")
    return psi


def state(amps) -> np.ndarray:
    """Normalizing constructor for state vectors."""
    return as_state(normalized(np.asarray(amps, dtype=complex)))


def as_observable(op, atol: float = ATOL) -> np.ndarray:
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] not in DIMS:
        raise DimensionError(f"observable must be square with size in {DIMS}, got {op.shape}")
    if np.max(np.abs(op - op.conj().T)) > atol:
        raise HermiticityError("operator is not Hermitian")
    return op


def is_projector(op, atol: float = ATOL) -> bool:
    op = np.asarray(op, dtype=complex)
    return bool(
        np.max(np.abs(op - op.conj().T)) <= atol and np.max(np.abs(op @ op - op)) <= atol
    )


def pauli_observable(n, atol: float = ATOL) -> np.ndarray:
    """Return ``n . sigma`` for a unit 3-vector ``n``."""
    n = unit_vector(n, atol)
    return np.tensordot(n, PAULI, axes=1)


def bloch_vector(op) -> tuple[float, np.ndarray]:
    """Write a 2x2 Hermitian ``op`` as ``c0 * I + c . sigma``; return ``(c0, c)``."""
    op = as_observable(op)
    if op.shape != (2, 2):
        raise DimensionError("bloch_vector needs a 2x2 operator")
    c0 = 0.5 * (op[0, 0] + op[1, 1]).real
    c = np.array([op[0, 1].real, -op[0, 1].imag, 0.5 * (op[0, 0] - op[1, 1]).real])
    return c0, c


def state_bloch(psi) -> np.ndarray:
    """Bloch vector of a single-qubit pure state."""
    psi = as_state(psi)
    if psi.shape != (2,):
        raise DimensionError("state_bloch needs a qubit state")
    return np.array([np.vdot(psi, s @ psi).real for s in PAULI])


def tensor_product(*ops) -> np.ndarray:
    """Kronecker product of states or operators; total dimension at most 8."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    if out.shape[0] not in DIMS:
        raise DimensionError(f"tensor product has unsupported dimension {out.shape[0]}")
    return out


def expectation(op, psi, atol: float = ATOL) -> float:
    """<psi|op|psi>, rejecting a non-negligible imaginary part."""
    op = np.asarray(op, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    if op.ndim != 2 or op.shape != (psi.shape[0], psi.shape[0]):
        raise DimensionError(f"cannot evaluate {op.shape} operator on length-{psi.shape[0]} state")
    val = np.vdot(psi, op @ psi)
    if abs(val.imag) > atol:
        raise HermiticityError(f"imaginary residue {val.imag:.3e} in expectation value")
    return float(val.real)


def projector(k, atol: float = ATOL) -> np.ndarray:
    """Rank-one projector |k><k|."""
    k = as_state(k, atol)
    return np.outer(k, k.conj())


def spectral_decompose2(h, atol: float = ATOL) -> SpectralPair:
    """Eigen-decomposition of a 2x2 Hermitian matrix in closed form.

    With ``h = c0 I + c . sigma`` the eigenvalues are ``c0 +- |c|`` and the
    projectors ``(I +- c_hat . sigma) / 2``.  When ``|c| < atol`` the pair is
    degenerate and the computational-basis projectors are returned.
    """
    c0, c = bloch_vector(h)
    r = float(np.linalg.norm(c))
    if r < atol:
        return SpectralPair(c0, c0, np.diag([1, 0]).astype(complex), np.diag([0, 1]).astype(complex))
    n_sigma = np.tensordot(c / r, PAULI, axes=1)
    return SpectralPair(c0 + r, c0 - r, 0.5 * (I2 + n_sigma), 0.5 * (I2 - n_sigma))


def operator_norm(op, atol: float = ITER_ATOL, max_iter: int = 64) -> float:
    """Largest absolute eigenvalue of a Hermitian matrix by power iteration on ``op @ op``.

    Each step squares the iterated power, so step ``k`` applies ``(op^2)^(2^k)``.
    The start vector is the column of largest norm of that power, which never
    misses the dominant eigenspace.
    """
    op = as_observable(op)
    m = op @ op
    scale = np.max(np.abs(m))
    if scale == 0:
        return 0.0
    power = m / scale
    prev = -1.0
    for _ in range(max_iter):
        v = power[:, np.argmax(np.linalg.norm(power, axis=0))]
        v = v / np.linalg.norm(v)
        rayleigh = np.vdot(v, m @ v).real
        if abs(rayleigh - prev) <= atol * 1e-6 * max(1.0, rayleigh):
            return float(np.sqrt(rayleigh))
        prev = rayleigh
        power = power @ power
        power /= np.max(np.abs(power))
    raise ConvergenceError(f"operator_norm did not converge in {max_iter} squarings")
