"""Reduced (delta, beta, theta) formulation, valid while the tangent avoids +/-j.

The tangent is carried as delta (arcsine of its j-component) and beta (its
azimuth in the i-k plane); theta is the rotation angle of the osculating plane
about the tangent relative to the chart's local basis. The full frame and the
torsion are algebraic functions of these three angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ChartSingular, NotUnit

# Below this floor for cos(delta), the 1/cos factors in the state equations
# are no longer meaningful in float64; callers must switch charts well before.
COS_FLOOR = 1e-8

UNIT_TOL = 1e-9


@dataclass(frozen=True)
class ThetaState:
    """Reduced state at arc length s; angles are kept unwrapped."""

    s: float
    delta: float
    beta: float
    theta: float


def _require_unit(v: np.ndarray, name: str) -> None:
    n = math.sqrt(float(v @ v))
    if abs(n - 1.0) > UNIT_TOL:
        raise NotUnit(f"{name} must be a unit vector; |{name}| = {n!r}")


def init_theta_state(T0, theta0: float, s0: float = 0.0, limit: float = 0.95) -> ThetaState:
    """State whose tangent reconstruction reproduces T0 exactly.

    Rejects tangents with |T_j| >= limit: this chart degrades near T = +/-j
    and the caller should start in the other chart instead.
    """
    T0 = np.asarray(T0, dtype=float)
    _require_unit(T0, "T0")
    if abs(T0[1]) >= limit:
        raise ChartSingular(
            f"|T_j| = {abs(T0[1])!r} >= {limit}: tangent too close to +/-j for this chart")
    delta = math.asin(max(-1.0, min(1.0, float(T0[1]))))
    beta = math.atan2(float(T0[2]), float(T0[0]))
    return ThetaState(float(s0), delta, beta, float(theta0))


def theta_rhs(state: ThetaState, kappa: float, tau: float | None = None,
              dtheta_ds: float | None = None) -> tuple[float, float, float]:
    """(d delta, d beta, d theta)/ds for the reduced state.

    Exactly one of ``tau`` (torsion-prescribed mode) or ``dtheta_ds``
    (rotation-prescribed mode) must be supplied.
    """
    if (tau is None) == (dtheta_ds is None):
        raise ValueError("pass exactly one of tau= or dtheta_ds=")
    cd = math.cos(state.delta)
    if cd < COS_FLOOR:
        raise ChartSingular(f"cos(delta) = {cd!r} below floor at s={state.s!r}")
    st = math.sin(state.theta)
    ct = math.cos(state.theta)
    ddelta = kappa * ct
    dbeta = kappa * st / cd
    if tau is not None:
        dtheta = tau + kappa * math.tan(state.delta) * st
    else:
        dtheta = dtheta_ds
    return ddelta, dbeta, dtheta


def tangent_from_state(state: ThetaState) -> np.ndarray:
    cd = math.cos(state.delta)
    return np.array([cd * math.cos(state.beta),
                     math.sin(state.delta),
                     cd * math.sin(state.beta)])


def normal_from_state(state: ThetaState) -> np.ndarray:
    sd, cd = math.sin(state.delta), math.cos(state.delta)
    sb, cb = math.sin(state.beta), math.cos(state.beta)
    st, ct = math.sin(state.theta), math.cos(state.theta)
    return np.array([-ct * sd * cb - sb * st,
                     ct * cd,
                     -ct * sd * sb + cb * st])


def binormal_from_state(state: ThetaState) -> np.ndarray:
    sd, cd = math.sin(state.delta), math.cos(state.delta)
    sb, cb = math.sin(state.beta), math.cos(state.beta)
    st, ct = math.sin(state.theta), math.cos(state.theta)
    return np.array([sd * st * cb - ct * sb,
                     -cd * st,
                     sd * st * sb + ct * cb])


def frame_from_angles(delta, beta, theta):
    """Vectorized (T, N, B) for arrays of angles; mirrors the scalar ops above."""
    sd, cd = np.sin(delta), np.cos(delta)
    sb, cb = np.sin(beta), np.cos(beta)
    st, ct = np.sin(theta), np.cos(theta)
    T = np.stack([cd * cb, sd + np.zeros_like(cb), cd * sb], axis=-1)
    N = np.stack([-ct * sd * cb - sb * st, ct * cd, -ct * sd * sb + cb * st], axis=-1)
    B = np.stack([sd * st * cb - ct * sb, -cd * st, sd * st * sb + ct * cb], axis=-1)
    return T, N, B


def torsion_from_theta_state(state: ThetaState, kappa: float, dtheta_ds: float) -> float:
    """tau = d theta/ds - kappa tan(delta) sin(theta)."""
    cd = math.cos(state.delta)
    if cd < COS_FLOOR:
        raise ChartSingular(f"cos(delta) = {cd!r} below floor at s={state.s!r}")
    return dtheta_ds - kappa * math.tan(state.delta) * math.sin(state.theta)


def theta_from_frame(T, N, B) -> float:
    """Recover theta from an orthonormal frame: atan2(-B_j, N_j).

    N_j and B_j scale with cos(delta), so the result is well conditioned
    whenever 1 - T_j^2 stays above the chart floor.
    """
    T = np.asarray(T, dtype=float)
    if 1.0 - float(T[1]) ** 2 < COS_FLOOR ** 2:
        raise ChartSingular(f"1 - T_j^2 = {1.0 - float(T[1])**2!r} below floor")
    return math.atan2(-float(np.asarray(B, dtype=float)[1]),
                      float(np.asarray(N, dtype=float)[1]))
