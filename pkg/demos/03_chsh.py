# coding: utf-8

# # CHSH for Hardy's state
#
# The largest CHSH value over all measurement directions follows from the
# correlation matrix T of the state: 2 sqrt(s1^2 + s2^2) for its two largest
# singular values.  A direct optimizer over the unit sphere recovers it.

import numpy as np

from hardylin import hardy, nonlocality as nl, qcore
from hardylin.nonlocality import ChshSettings

# No choice of directions pushes the CHSH operator past 2 sqrt 2.

rng = np.random.default_rng(0)
norms = []
for _ in range(200):
    v = rng.normal(size=(4, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    norms.append(qcore.operator_norm(nl.chsh_operator(ChshSettings(*v))))
print("largest sampled norm", max(norms), " bound", nl.TSIRELSON)

# Every entangled member of the family violates CHSH; only the product
# endpoints alpha = 0 and alpha = 1 stay at the classical value 2.

for alpha in np.linspace(0, 1, 6):
    psi = hardy.hardy_state(alpha)
    rep = nl.max_chsh(psi)
    print(f"alpha={alpha:.1f} max CHSH={rep.value:.6f} oracle={nl.chsh_oracle(psi):.6f}")
