import numpy as np
import pytest
from scipy.optimize import linprog

from hardylin import lp


def random_system(rng, m, n, feasible=True):
    A = rng.integers(-2, 3, size=(m, n)).astype(float)
    if feasible:
        x = rng.dirichlet(np.ones(n)) * (rng.random(n) < 0.6)
        x[0] += 1e-3
        x /= x.sum()
        b = A @ x
    else:
        b = rng.normal(size=m)
    return A, b


def test_phase_one_agrees_with_scipy():
    rng = np.random.default_rng(11)
    for k in range(200):
        A, b = random_system(rng, int(rng.integers(1, 6)), 8, feasible=bool(k % 2))
        ours = lp.phase_one(A, b)
        ref = linprog(np.zeros(8), A_eq=A, b_eq=b, bounds=[(0, None)] * 8, method="highs")
        assert (ours.value <= 1e-9) == (ref.status == 0)
        if ours.value <= 1e-9:
            assert np.all(ours.x >= -1e-12)
            assert np.allclose(A @ ours.x, b, atol=1e-9)


def test_linprog_eq_agrees_with_scipy():
    rng = np.random.default_rng(12)
    for _ in range(200):
        A, b = random_system(rng, int(rng.integers(1, 6)), 10)
        A = np.vstack([np.ones(10), A])
        b = np.r_[1.0, b]  # random_system draws x on the simplex
        c = rng.normal(size=10)
        value, x = lp.linprog_eq(c, A, b)
        ref = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * 10, method="highs")
        assert value == pytest.approx(ref.fun, abs=1e-9)
        assert np.allclose(A @ x, b, atol=1e-9)


def test_redundant_rows():
    A = np.array([[1.0, 1.0, 0.0], [2.0, 2.0, 0.0], [0.0, 1.0, 1.0]])
    b = np.array([1.0, 2.0, 0.5])
    value, x = lp.linprog_eq([1.0, 0.0, 0.0], A, b)
    assert value == pytest.approx(0.5, abs=1e-12)


def test_infeasible_and_unbounded():
    with pytest.raises(lp.InfeasibleError):
        lp.linprog_eq([1.0, 1.0], [[1.0, 1.0]], [-1.0])
    with pytest.raises(lp.UnboundedError):
        lp.linprog_eq([-1.0, 0.0], [[1.0, -1.0]], [0.0])


def test_degenerate_cycling_example():
    # Beale's example rewritten in equality form; cycles under the textbook rule.
    c = np.array([-0.75, 150.0, -0.02, 6.0, 0, 0, 0])
    A = np.array([
        [0.25, -60.0, -0.04, 9.0, 1, 0, 0],
        [0.5, -90.0, -0.02, 3.0, 0, 1, 0],
        [0.0, 0.0, 1.0, 0.0, 0, 0, 1],
    ])
    b = np.array([0.0, 0.0, 1.0])
    value, _ = lp.linprog_eq(c, A, b)
    assert value == pytest.approx(-0.05, abs=1e-12)
