"""Alternate (gamma, alpha, phi) formulation, valid while the tangent avoids +/-i.

Mirror image of the other chart under the axis relabeling i<->j, k->-k (a
proper rotation): gamma is the arcsine of the tangent's i-component, alpha its
azimuth in the j-k plane, and phi the osculating-plane rotation angle in this
chart's local basis. The mirror flips two signs relative to the j-aligned
chart: d gamma/ds = -kappa cos(phi), and the torsion coupling is
tau = d phi/ds + kappa tan(gamma) sin(phi). Both were verified against direct
Frenet-Serret integration (the binormal below is exactly T x N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ChartSingular
from .theta_chart import COS_FLOOR, _require_unit


@dataclass(frozen=True)
class PhiState:
    """Reduced state at arc length s; angles are kept unwrapped."""

    s: float
    gamma: float
    alpha: float
    phi: float


def init_phi_state(T0, phi0: float, s0: float = 0.0, limit: float = 0.95) -> PhiState:
    """State whose tangent reconstruction reproduces T0 exactly."""
    T0 = np.asarray(T0, dtype=float)
    _require_unit(T0, "T0")
    if abs(T0[0]) >= limit:
        raise ChartSingular(
            f"|T_i| = {abs(T0[0])!r} >= {limit}: tangent too close to +/-i for this chart")
    gamma = math.asin(max(-1.0, min(1.0, float(T0[0]))))
    alpha = math.atan2(float(T0[2]), float(T0[1]))
    return PhiState(float(s0), gamma, alpha, float(phi0))


def phi_rhs(state: PhiState, kappa: float, tau: float | None = None,
            dphi_ds: float | None = None) -> tuple[float, float, float]:
    """(d gamma, d alpha, d phi)/ds for the reduced state.

    Exactly one of ``tau`` or ``dphi_ds`` must be supplied. Note the two sign
    asymmetries against the j-aligned chart (module docstring).
    """
    if (tau is None) == (dphi_ds is None):
        raise ValueError("pass exactly one of tau= or dphi_ds=")
    cg = math.cos(state.gamma)
    if cg < COS_FLOOR:
        raise ChartSingular(f"cos(gamma) = {cg!r} below floor at s={state.s!r}")
    sp = math.sin(state.phi)
    cp = math.cos(state.phi)
    dgamma = -kappa * cp
    dalpha = kappa * sp / cg
    if tau is not None:
        dphi = tau - kappa * math.tan(state.gamma) * sp
    else:
        dphi = dphi_ds
    return dgamma, dalpha, dphi


def frame_from_phi_state(state: PhiState) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed orthonormal (T, N, B) reconstructed from the state."""
    sg, cg = math.sin(state.gamma), math.cos(state.gamma)
    sa, ca = math.sin(state.alpha), math.cos(state.alpha)
    sp, cp = math.sin(state.phi), math.cos(state.phi)
    T = np.array([sg, cg * ca, cg * sa])
    N = np.array([-cg * cp,
                  sg * ca * cp - sa * sp,
                  sg * sa * cp + ca * sp])
    B = np.array([cg * sp,
                  -sg * ca * sp - sa * cp,
                  ca * cp - sg * sa * sp])
    return T, N, B


def torsion_from_phi_state(state: PhiState, kappa: float, dphi_ds: float) -> float:
    """tau = d phi/ds + kappa tan(gamma) sin(phi)."""
    cg = math.cos(state.gamma)
    if cg < COS_FLOOR:
        raise ChartSingular(f"cos(gamma) = {cg!r} below floor at s={state.s!r}")
    return dphi_ds + kappa * math.tan(state.gamma) * math.sin(state.phi)


def phi_from_frame(T, N, B) -> float:
    """Recover phi from an orthonormal frame: atan2(B_i, -N_i)."""
    T = np.asarray(T, dtype=float)
    if 1.0 - float(T[0]) ** 2 < COS_FLOOR ** 2:
        raise ChartSingular(f"1 - T_i^2 = {1.0 - float(T[0])**2!r} below floor")
    return math.atan2(float(np.asarray(B, dtype=float)[0]),
                      -float(np.asarray(N, dtype=float)[0]))
