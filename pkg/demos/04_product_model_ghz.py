# coding: utf-8

# # A local model for single qubits, and where factoring it breaks down
#
# For one qubit with Bloch vector p, draw lambda uniformly from [-1, 1] and answer
# a projector with Bloch direction a by the indicator [lambda + a.p >= 0].  Its
# mean is (1 + a.p)/2, which is exactly the quantum probability.

import numpy as np

from hardylin import lhv, nonlocality as nl, qcore
from hardylin.lhv import BellD2Model

psi = qcore.state(np.array([0.6, 0.8j]))
model = BellD2Model.from_state(psi)
P = qcore.projector(qcore.state(np.array([1.0, 1.0])))
print("model", lhv.model_expectation(P, model), " quantum", qcore.expectation(P, psi))

# Taking one copy per qubit reproduces every product state exactly.

phi = qcore.state(np.array([1.0, 1j]))
m2 = BellD2Model.from_state(phi)
Q = qcore.projector(qcore.state(np.array([1.0, -0.3])))
print("product model", lhv.product_lhv_expectation(P, Q, model, m2),
      " quantum", qcore.expectation(qcore.tensor_product(P, Q), qcore.tensor_product(psi, phi)))

# The GHZ state has maximally mixed single-qubit marginals, so the factored model
# predicts <XXX> = 0, whereas quantum mechanics gives 1.

X = qcore.SIGMA_X
models = nl.ghz_marginal_models()
print("<XXX> quantum", nl.ghz_quantum_expectation(X, X, X),
      " factored", nl.ghz_factored_expectation(X, X, X, *models))

check = nl.ghz_check()
for k in check.quantum:
    print(f"<{k}> quantum={check.quantum[k]:+.3f} factored={check.factored[k]:+.3f}")
