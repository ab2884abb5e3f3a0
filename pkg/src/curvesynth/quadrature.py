"""Adaptive Simpson quadrature used by the closed-form evaluators."""

from __future__ import annotations

import numpy as np


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-11, max_depth: int = 50) -> float:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Recursive Simpson with Richardson extrapolation. Exact for polynomials up
    to cubic, so constant and linear integrands incur no quadrature error.
    """
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return _simpson(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _simpson(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    flm = f(0.5 * (a + m))
    frm = f(0.5 * (m + b))
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    err = left + right - whole
    if depth <= 0 or abs(err) <= 15.0 * tol:
        return left + right + err / 15.0
    half = 0.5 * tol
    return (_simpson(f, a, m, fa, flm, fm, left, half, depth - 1)
            + _simpson(f, m, b, fm, frm, fb, right, half, depth - 1))


def cumulative_quadrature(f, points, tol: float = 1e-13) -> np.ndarray:
    """Cumulative integral of ``f`` from ``points[0]`` to each point.

    Each sub-interval is integrated independently with :func:`adaptive_simpson`
    and accumulated, so the drift after n intervals is bounded by n*tol.
    """
    points = np.asarray(points, dtype=float)
    out = np.empty(points.shape[0])
    out[0] = 0.0
    acc = 0.0
    for i in range(points.shape[0] - 1):
        acc += adaptive_simpson(f, points[i], points[i + 1], tol)
        out[i + 1] = acc
    return out
