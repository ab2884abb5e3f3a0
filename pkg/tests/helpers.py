"""Shared numeric helpers for the test suite."""

import math

import numpy as np


def orthonormality_error(T, N, B) -> float:
    """Worst deviation from a right-handed orthonormal frame, rowwise."""
    T, N, B = (np.atleast_2d(np.asarray(x, dtype=float)) for x in (T, N, B))
    err = 0.0
    for M in (T, N, B):
        err = max(err, float(np.abs(np.linalg.norm(M, axis=1) - 1.0).max()))
    for X, Y in ((T, N), (T, B), (N, B)):
        err = max(err, float(np.abs(np.einsum("ij,ij->i", X, Y)).max()))
    err = max(err, float(np.abs(np.cross(T, N) - B).max()))
    return err


def helix_frame(s, a=1.0, b=1.0):
    """Exact Frenet frame of the circular helix (a cos u, a sin u, b u), u = s/c.

    Curvature a/c^2 and torsion b/c^2 with c = sqrt(a^2 + b^2); for a = b = 1
    both equal 1/2.
    """
    c = math.sqrt(a * a + b * b)
    u = s / c
    su, cu = math.sin(u), math.cos(u)
    R = np.array([a * cu, a * su, b * u])
    T = np.array([-a * su, a * cu, b]) / c
    N = np.array([-cu, -su, 0.0])
    B = np.array([b * su, -b * cu, a]) / c
    return R, T, N, B


# proper rotation swapping the i and j axes (k flips to keep det = +1); maps
# helix frames onto trajectories of the i-aligned chart
MIRROR = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])


def mirrored_helix_frame(s, a=1.0, b=1.0):
    R, T, N, B = helix_frame(s, a, b)
    return MIRROR @ R, MIRROR @ T, MIRROR @ N, MIRROR @ B
