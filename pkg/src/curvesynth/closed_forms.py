"""Explicit solution families used as analytic ground truth for the pipeline.

All four cases start from the normalized initial condition T0 = (1, 0, 0) at
s0 = 0, where the tangent's j-arcsine (delta) and i-k azimuth (beta) both
vanish. Validity windows are enforced, never extrapolated: the closed forms
blow up as the tangent approaches +/-j (|delta| -> pi/2), which is also where
the atanh argument tan(delta/2) leaves its domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chart_manager import integrate_position
from .errors import OutOfValidity, ValidationError
from .profiles import ScalarProfile
from .quadrature import adaptive_simpson, cumulative_quadrature
from .theta_chart import frame_from_angles
from .trace import THETA_CHART, CurveTrace, Grid

CASE_CONSTANT_THETA = "constant_theta"
CASE_GAUSSIAN_KAPPA = "gaussian_kappa"
CASE_CONSTANT_KAPPA_LINEAR_THETA = "constant_kappa_linear_theta"
CASE_CONSTANT_KAPPA_THETA = "constant_kappa_theta"

CASES = (CASE_CONSTANT_THETA, CASE_GAUSSIAN_KAPPA,
         CASE_CONSTANT_KAPPA_LINEAR_THETA, CASE_CONSTANT_KAPPA_THETA)

# |cos(theta0)| below this means theta0 = +/-pi/2 to double precision; the
# literal formulas become the indeterminate inf*0 there, so the analytic
# limit (delta = 0, beta = the running integral of kappa, zero torsion) is
# evaluated instead.
_PLANAR_COS_TOL = 1e-12

_HALF_PI = 0.5 * math.pi
_SQRT_PI_2 = 0.5 * math.sqrt(math.pi)


@dataclass(frozen=True)
class ClosedFormCase:
    """Which explicit family to evaluate, with its parameters."""

    case: str
    kappa0: float | None = None
    theta0: float | None = None
    kappa: ScalarProfile | None = None  # constant_theta only

    def __post_init__(self):
        if self.case not in CASES:
            raise ValidationError(f"unknown closed-form case {self.case!r}")
        if self.case == CASE_CONSTANT_THETA:
            if self.kappa is None or self.theta0 is None:
                raise ValidationError("constant_theta needs a kappa profile and theta0")
        elif self.case == CASE_CONSTANT_KAPPA_LINEAR_THETA:
            if self.kappa0 is None:
                raise ValidationError(f"{self.case} needs kappa0")
        elif self.kappa0 is None or self.theta0 is None:
            raise ValidationError(f"{self.case} needs kappa0 and theta0")


def _check_window(delta: float, s: float) -> None:
    if abs(delta) >= _HALF_PI:
        raise OutOfValidity(
            f"|delta| = {abs(delta)!r} >= pi/2 at s={s!r}: closed form invalid "
            "(tangent at +/-j)")


def _beta_from_delta(theta0: float, delta: float, s: float) -> float:
    """beta = 2 tan(theta0) atanh(tan(delta/2)); caller handles the planar limit."""
    t = math.tan(0.5 * delta)
    if abs(t) >= 1.0:
        raise OutOfValidity(
            f"|tan(delta/2)| = {abs(t)!r} >= 1 at s={s!r}: atanh out of domain")
    return 2.0 * math.tan(theta0) * math.atanh(t)


def _planar(theta0: float) -> bool:
    return abs(math.cos(theta0)) < _PLANAR_COS_TOL


def constant_theta_tangent(kappa: ScalarProfile, theta0: float, s: float) -> np.ndarray:
    """Tangent for constant plane angle and arbitrary curvature profile.

    delta is the integral of kappa*cos(theta0), evaluated by adaptive Simpson
    (exact for constant and linear profiles); beta has the closed atanh form.
    """
    kappa_int = adaptive_simpson(lambda x: kappa(x), 0.0, s, 1e-12)
    if _planar(theta0):
        beta = math.copysign(1.0, math.sin(theta0)) * kappa_int
        return np.array([math.cos(beta), 0.0, math.sin(beta)])
    delta = math.cos(theta0) * kappa_int
    _check_window(delta, s)
    beta = _beta_from_delta(theta0, delta, s)
    cd = math.cos(delta)
    return np.array([cd * math.cos(beta), math.sin(delta), cd * math.sin(beta)])


def _constant_theta_tau(kappa_s: float, theta0: float, delta: float) -> float:
    return -kappa_s * math.sin(theta0) * math.tan(delta)


def gaussian_case(kappa0: float, theta0: float, s: float):
    """(T, tau) for the bell-curve curvature kappa0 * exp(-s^2), constant angle."""
    kappa_int = kappa0 * _SQRT_PI_2 * math.erf(s)
    kappa_s = kappa0 * math.exp(-s * s)
    if _planar(theta0):
        beta = math.copysign(1.0, math.sin(theta0)) * kappa_int
        return np.array([math.cos(beta), 0.0, math.sin(beta)]), 0.0
    delta = kappa_int * math.cos(theta0)
    _check_window(delta, s)
    beta = _beta_from_delta(theta0, delta, s)
    cd = math.cos(delta)
    T = np.array([cd * math.cos(beta), math.sin(delta), cd * math.sin(beta)])
    return T, _constant_theta_tau(kappa_s, theta0, delta)


def constant_kappa_linear_theta(kappa0: float, s: float):
    """(T, tau) for constant curvature with plane angle kappa0*s.

    delta = sin(kappa0 s) stays inside (-pi/2, pi/2), so this family has no
    validity boundary; the azimuth integral has no elementary antiderivative
    and is evaluated numerically.
    """
    delta = math.sin(kappa0 * s)
    beta = adaptive_simpson(
        lambda x: kappa0 * math.sin(kappa0 * x) / math.cos(math.sin(kappa0 * x)),
        0.0, s, 1e-11)
    cd = math.cos(delta)
    T = np.array([cd * math.cos(beta), math.sin(delta), cd * math.sin(beta)])
    tau = kappa0 - kappa0 * math.tan(delta) * delta
    return T, tau


def constant_kappa_theta(kappa0: float, theta0: float, s: float):
    """(T, tau) for constant curvature and constant plane angle."""
    if _planar(theta0):
        beta = math.copysign(1.0, math.sin(theta0)) * kappa0 * s
        return np.array([math.cos(beta), 0.0, math.sin(beta)]), 0.0
    delta = kappa0 * s * math.cos(theta0)
    _check_window(delta, s)
    beta = _beta_from_delta(theta0, delta, s)
    cd = math.cos(delta)
    T = np.array([cd * math.cos(beta), math.sin(delta), cd * math.sin(beta)])
    return T, _constant_theta_tau(kappa0, theta0, delta)


def _case_angles(case: ClosedFormCase, pts: np.ndarray):
    """(delta, beta, theta, kappa, tau) arrays for the case on the grid points."""
    if case.case == CASE_CONSTANT_THETA:
        th0 = case.theta0
        kap = np.atleast_1d(np.asarray(case.kappa(pts), dtype=float))
        kint = cumulative_quadrature(lambda x: case.kappa(x), pts)
    elif case.case == CASE_GAUSSIAN_KAPPA:
        th0 = case.theta0
        kap = case.kappa0 * np.exp(-pts * pts)
        kint = case.kappa0 * _SQRT_PI_2 * np.array([math.erf(x) for x in pts])
    elif case.case == CASE_CONSTANT_KAPPA_THETA:
        th0 = case.theta0
        kap = np.full(pts.shape, float(case.kappa0))
        kint = case.kappa0 * pts
    else:  # constant curvature, linearly growing plane angle
        k0 = case.kappa0
        kap = np.full(pts.shape, float(k0))
        delta = np.sin(k0 * pts)
        beta = cumulative_quadrature(
            lambda x: k0 * math.sin(k0 * x) / math.cos(math.sin(k0 * x)), pts)
        theta = k0 * pts
        tau = k0 - k0 * np.tan(delta) * delta
        return delta, beta, theta, kap, tau

    theta = np.full(pts.shape, float(th0))
    if _planar(th0):
        delta = np.zeros(pts.shape)
        beta = math.copysign(1.0, math.sin(th0)) * kint
        tau = np.zeros(pts.shape)
        return delta, beta, theta, kap, tau
    delta = math.cos(th0) * kint
    worst = int(np.argmax(np.abs(delta)))
    _check_window(float(delta[worst]), float(pts[worst]))
    t_half = np.tan(0.5 * delta)
    beta = 2.0 * math.tan(th0) * np.arctanh(t_half)
    tau = -kap * math.sin(th0) * np.tan(delta)
    return delta, beta, theta, kap, tau


def closed_form_trace(case: ClosedFormCase, grid: Grid) -> CurveTrace:
    """Full trace (frames, torsion, integrated position) for a closed-form case."""
    pts = grid.points()
    delta, beta, theta, kap, tau = _case_angles(case, pts)
    T, N, B = frame_from_angles(delta, beta, theta)
    R = integrate_position(T, grid, (0.0, 0.0, 0.0))
    return CurveTrace(s=pts, R=R, T=T, N=N, B=B, kappa=kap, tau=tau,
                      chart_angle=theta, chart=np.array([THETA_CHART] * pts.size),
                      degenerate_kappa=kap == 0.0, grid=grid, switch_log=[],
                      mode=f"closed-form:{case.case}")
