# coding: utf-8

# # Can a hidden-variable model reproduce Hardy's predictions?
#
# A local model assigns a probability to each of the 16 deterministic strategies
# (u1, d1, u2, d2).  Matching the quantum moments is a linear feasibility problem,
# solved here with a two-phase simplex.

from hardylin import hardy, lhv
from hardylin.hardy import HardyParams

# For ab < 1/2 the phase-one optimum is positive, so no distribution exists.
# The size of the violation equals the quantum joint probability <D1 D2>.

for ab in (0.1, 0.3, 0.48):
    p = HardyParams.from_product(ab)
    res = lhv.solve_feasibility(lhv.hardy_constraints(p))
    print(f"ab={ab:.2f} {res.status:10s} max_violation={res.max_violation:.6f} "
          f"<D1D2>={hardy.hardy_joint(p):.6f}")

# At ab = 1/2 the model exists, and the witness is an even mix of two strategies.

res = lhv.solve_feasibility(lhv.hardy_constraints(HardyParams.from_product(0.5)))
print(res.status, res.witness.support())

# Which joint value for u1*u2 the model must reproduce depends on how the
# product of projectors is translated into a function of hidden variables.  With
# the standard translation the model is forced to E[u1 u2] >= <D1 D2>, while the
# clustered translation assigns the value zero, which matches quantum mechanics.

rep = lhv.translation_report(HardyParams.from_product(0.48))
print(f"standard range [{rep.standard_min:.6f}, {rep.standard_max:.6f}], clustered {rep.clustered:.1e}")
