"""Hardy's model, hidden-variable polytopes and CHSH structure for two and three qubits."""

from .hardy import HardyParams, hardy_joint, hardy_maximum, hardy_moments, hardy_state
from .lhv import BellD2Model, hardy_constraints, lhv_moment_range, product_lhv_expectation, solve_feasibility
from .nonlocality import ChshSettings, chsh_operator, chsh_value, max_chsh
from .qcore import expectation, operator_norm, pauli_observable, projector, spectral_decompose2, tensor_product

__all__ = [
    "BellD2Model",
    "ChshSettings",
    "HardyParams",
    "chsh_operator",
    "chsh_value",
    "expectation",
    "hardy_constraints",
    "hardy_joint",
    "hardy_maximum",
    "hardy_moments",
    "hardy_state",
    "lhv_moment_range",
    "max_chsh",
    "operator_norm",
    "pauli_observable",
    "product_lhv_expectation",
    "projector",
    "solve_feasibility",
    "spectral_decompose2",
    "tensor_product",
]
