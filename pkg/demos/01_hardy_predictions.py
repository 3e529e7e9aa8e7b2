# coding: utf-8

# # Quantum predictions for Hardy's state
#
# The state is alpha|++> - beta|--> with alpha^2 + beta^2 = 1.  Every moment that
# enters Hardy's argument has a closed form in the product t = alpha*beta, and the
# same numbers come out of plain 4x4 matrix algebra.

import numpy as np

from hardylin import hardy
from hardylin.hardy import HardyParams

np.set_printoptions(precision=6, suppress=True)

# The closed forms and the matrix evaluation agree to rounding error.

for alpha in (0.6, 0.8, 0.95):
    p = HardyParams(alpha)
    closed = hardy.closed_form_moments(p)
    gap = hardy.moments_gap(closed, hardy.matrix_moments(p))
    print(f"alpha={alpha:.2f} ab={p.ab:.4f} <U>={closed.u1:.6f} <D>={closed.d1:.6f} "
          f"<D1D2>={hardy.hardy_joint(p):.6f} <U1U2>={closed.u1u2:.1e} gap={gap:.1e}")

# <U1 U2> is exactly zero while <D1 D2> is strictly positive for 0 < ab < 1/2.
# The joint probability peaks at t* = (3 - sqrt 5)/2.

t_star, p_star = hardy.hardy_maximum()
print("t* =", t_star, " p* =", p_star)
print("(3 - sqrt 5)/2 =", (3 - np.sqrt(5)) / 2)

# The projector sum U + D has eigenvalues 1 +- |<u|d>|.  At the maximally
# entangled point the two projectors are orthogonal and the spectrum is {1, 1};
# at the product endpoints they coincide and it becomes {2, 0}.

for alpha in (0.0, 0.8, 1 / np.sqrt(2), 1.0):
    s = hardy.u_plus_d_spectrum(alpha)
    print(f"alpha={alpha:.4f} spectrum of U+D: {s.mu1:.6f}, {s.mu2:.6f}")
