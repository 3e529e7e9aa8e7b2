import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardylin import hardy, lhv, nonlocality as nl, qcore
from hardylin.hardy import HardyParams
from hardylin.lhv import BellD2Model
from hardylin.nonlocality import ChshSettings

Z = np.array([0.0, 0.0, 1.0])
X = np.array([1.0, 0.0, 0.0])
PLANAR = ChshSettings(Z, X, (Z + X) / math.sqrt(2), (Z - X) / math.sqrt(2))


def random_unit(rng, size=None):
    v = rng.normal(size=(size or 1, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v if size else v[0]


def random_settings(rng):
    return ChshSettings(*random_unit(rng, 4))


unit_vectors = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: np.linalg.norm(v) > 1e-3).map(
    lambda v: np.asarray(v) / np.linalg.norm(v)
)


def test_operator_equal_b():
    rng = np.random.default_rng(31)
    a, ap, b = random_unit(rng, 3)
    B = nl.chsh_operator(ChshSettings(a, ap, b, b))
    expected = 2 * qcore.tensor_product(qcore.pauli_observable(a), qcore.pauli_observable(b))
    assert np.max(np.abs(B - expected)) < 1e-15


def test_operator_all_z():
    B = nl.chsh_operator(ChshSettings(Z, Z, Z, Z))
    assert np.array_equal(B, 2 * qcore.tensor_product(qcore.SIGMA_Z, qcore.SIGMA_Z))
    assert qcore.operator_norm(B) == pytest.approx(2.0, abs=1e-12)


def test_operator_hermitian_and_tsirelson():
    rng = np.random.default_rng(32)
    for _ in range(1000):
        B = nl.chsh_operator(random_settings(rng))
        qcore.as_observable(B)
        assert qcore.operator_norm(B) <= nl.TSIRELSON + 1e-9


def test_tsirelson_attained_planar():
    B = nl.chsh_operator(PLANAR)
    assert np.max(np.abs(np.linalg.eigvalsh(B))) == pytest.approx(nl.TSIRELSON, abs=1e-12)
    assert qcore.operator_norm(B) == pytest.approx(nl.TSIRELSON, abs=1e-9)


def test_value_product_states_bounded():
    rng = np.random.default_rng(33)
    for _ in range(200):
        psi = qcore.tensor_product(*[qcore.state(rng.normal(size=2) + 1j * rng.normal(size=2)) for _ in "ab"])
        assert abs(nl.chsh_value(psi, random_settings(rng)).value) <= 2 + 1e-9


def test_value_forms_agree_and_report_fields():
    rng = np.random.default_rng(34)
    for _ in range(50):
        psi = qcore.state(rng.normal(size=4) + 1j * rng.normal(size=4))
        s = random_settings(rng)
        rep = nl.chsh_value(psi, s)
        assert rep.value == pytest.approx(nl._four_term(psi, s), abs=1e-12)
        assert abs(rep.value) <= rep.tsirelson + 1e-9
        assert rep.bound_standard <= rep.bound_clustered <= rep.tsirelson + 1e-12


def test_value_dimension_check():
    with pytest.raises(qcore.DimensionError):
        nl.chsh_value(nl.ghz_state(), PLANAR)


def test_clustered_bound_examples():
    assert nl.clustered_bound(Z, X) == pytest.approx(2 * math.sqrt(2), abs=1e-15)
    assert nl.clustered_bound(Z, Z) == 2.0
    sixty = np.array([math.sin(math.pi / 3), 0, math.cos(math.pi / 3)])
    # |b+b'| = 2cos(30deg) = sqrt(3), |b-b'| = 2sin(30deg) = 1
    assert nl.clustered_bound(Z, sixty) == pytest.approx(math.sqrt(3) + 1, abs=1e-15)
    assert nl.clustered_bound(Z, sixty) == pytest.approx(2.7320508, abs=1e-7)


@given(unit_vectors, unit_vectors)
def test_clustered_bound_ordering(b, bp):
    assert 2.0 - 1e-12 <= nl.clustered_bound(b, bp) <= nl.TSIRELSON + 1e-12


def test_max_chsh_examples():
    assert nl.max_chsh(hardy.hardy_state(1.0)).value == pytest.approx(2.0, abs=1e-4)
    assert nl.max_chsh(hardy.hardy_state(1 / math.sqrt(2))).value == pytest.approx(nl.TSIRELSON, abs=1e-4)
    p = HardyParams(0.8)
    expected = 2 * math.sqrt(1 + 4 * p.ab**2)
    assert expected == pytest.approx(2.7724, abs=1e-4)
    assert nl.max_chsh(hardy.hardy_state(p)).value == pytest.approx(expected, abs=1e-4)


def test_oracle_matches_concurrence_formula():
    for a in np.linspace(0, 1, 11):
        p = HardyParams(a)
        assert nl.chsh_oracle(hardy.hardy_state(p)) == pytest.approx(2 * math.sqrt(1 + 4 * p.ab**2), abs=1e-12)


def test_max_chsh_beats_random_sampling():
    rng = np.random.default_rng(35)
    psi = hardy.hardy_state(0.8)
    T = nl.correlation_matrix(psi)
    n = 1_000_000
    a, ap, b, bp = (random_unit(rng, n) for _ in range(4))
    tb, tbp = (b + bp) @ T.T, (b - bp) @ T.T
    sampled = np.abs(np.einsum("ij,ij->i", a, tb) + np.einsum("ij,ij->i", ap, tbp)).max()
    best = nl.max_chsh(psi).value
    assert sampled <= best + 1e-12
    assert best - sampled < 0.05


def test_max_chsh_settings_reproduce_value():
    rng = np.random.default_rng(36)
    for _ in range(10):
        psi = qcore.state(rng.normal(size=4) + 1j * rng.normal(size=4))
        value, s = nl.max_chsh_correlation(nl.correlation_matrix(psi))
        assert nl.chsh_value(psi, s).value == pytest.approx(value, abs=1e-9)
        assert value == pytest.approx(nl.chsh_oracle(psi), abs=1e-4)


def test_gisin_grid():
    for ab in np.linspace(0.05, 0.5, 10):
        psi = hardy.hardy_state(HardyParams.from_product(ab))
        assert nl.max_chsh(psi).value > 2 + 1e-6
    for a in (0.0, 1.0):
        assert nl.max_chsh(hardy.hardy_state(a)).value == pytest.approx(2.0, abs=1e-4)


def test_ghz_state():
    psi = nl.ghz_state()
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-15)
    zz = qcore.tensor_product(qcore.SIGMA_Z, qcore.SIGMA_Z, qcore.I2)
    assert qcore.expectation(zz, psi) == pytest.approx(1.0, abs=1e-12)
    x1 = qcore.tensor_product(qcore.SIGMA_X, qcore.I2, qcore.I2)
    assert qcore.expectation(x1, psi) == pytest.approx(0.0, abs=1e-12)


def test_ghz_marginals_maximally_mixed():
    for m in nl.ghz_marginal_models():
        assert np.allclose(m.bloch, 0.0, atol=1e-15)


def test_ghz_factored_examples():
    models = nl.ghz_marginal_models()
    I2, SX = qcore.I2, qcore.SIGMA_X
    assert nl.ghz_factored_expectation(I2, I2, I2, *models) == 1.0
    assert nl.ghz_factored_expectation(SX, SX, SX, *models) == pytest.approx(0.0, abs=1e-12)
    assert nl.ghz_quantum_expectation(SX, SX, SX) == pytest.approx(1.0, abs=1e-12)


def test_factored_model_equals_product_state():
    rng = np.random.default_rng(37)
    for _ in range(50):
        states = [qcore.state(rng.normal(size=2) + 1j * rng.normal(size=2)) for _ in range(3)]
        models = [BellD2Model.from_state(s) for s in states]
        ops = [qcore.projector(qcore.state(rng.normal(size=2) + 1j * rng.normal(size=2))) for _ in range(3)]
        quantum = qcore.expectation(qcore.tensor_product(*ops), qcore.tensor_product(*states))
        assert nl.ghz_factored_expectation(*ops, *models) == pytest.approx(quantum, abs=1e-12)


def test_factored_pairwise_chsh_bounded():
    rng = np.random.default_rng(38)
    for _ in range(100):
        m1 = BellD2Model.from_state(qcore.state(rng.normal(size=2) + 1j * rng.normal(size=2)))
        m2 = BellD2Model(random_unit(rng) * rng.random())
        assert abs(nl.factored_pair_chsh(random_settings(rng), m1, m2)) <= 2 + 1e-9
        best, _ = nl.max_chsh_correlation(nl.factored_pair_correlation(m1, m2))
        assert best == pytest.approx(2 * np.linalg.norm(m1.bloch) * np.linalg.norm(m2.bloch), abs=1e-9)


def test_ghz_check():
    res = nl.ghz_check()
    assert res.passed
    assert res.quantum["XXX"] == pytest.approx(1.0, abs=1e-12)
    assert res.factored["XXX"] == pytest.approx(0.0, abs=1e-12)
    for v in res.factored_pair_max.values():
        assert v <= 2 + 1e-9
    for v in res.quantum_pair_max.values():
        assert v == pytest.approx(2.0, abs=1e-9)


def test_lhv_chsh_matches_product_model_bound():
    # deterministic product strategies are a special case of the factored model
    for k in range(16):
        w = np.zeros(16)
        w[k] = 1.0
        assert abs(lhv.chsh_pm(lhv.LhvDistribution(w))) <= nl.CLASSICAL
