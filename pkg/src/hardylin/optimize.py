"""One-dimensional golden-section search."""

from __future__ import annotations

import math
from typing import Callable

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_bracket(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10,
                   max_iter: int = 200) -> tuple[float, float]:
    """Shrink ``[a, b]`` around a maximum of the unimodal ``f`` until narrower than ``tol``."""
    if a > b:
        a, b = b, a
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = f(d)
    return a, b


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10,
                       max_iter: int = 200) -> tuple[float, float]:
    """Return ``(x, f(x))`` for the best point found in ``[a, b]``, endpoints included."""
    lo, hi = golden_bracket(f, a, b, tol, max_iter)
    candidates = [a, 0.5 * (lo + hi), b]
    values = [f(x) for x in candidates]
    i = max(range(3), key=values.__getitem__)
    return candidates[i], values[i]
