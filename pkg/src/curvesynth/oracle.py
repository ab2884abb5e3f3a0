"""Direct Frenet-Serret integration and trace validators.

This integrator advances the full 12-component (T, N, B, R) system and never
touches the reduced chart states, so it is an independent check on the
synthesis path. The discrete system does not conserve orthonormality, so the
frame is re-orthonormalized (modified Gram-Schmidt, T first) after every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chart_manager import _require_coverage, next_chart
from .errors import GridMismatch, NotUnit, TooShort
from .phi_chart import phi_from_frame
from .profiles import ScalarProfile
from .theta_chart import theta_from_frame
from .trace import PHI_CHART, THETA_CHART, CurveTrace, Grid, SwitchEvent

_UNIT_TOL = 1e-9


@dataclass(frozen=True)
class FrenetState:
    """Initial condition for the direct integrator."""

    R: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    s: float = 0.0


def _check_orthonormal(T, N, B) -> None:
    for name, v in (("T", T), ("N", N), ("B", B)):
        n = float(np.linalg.norm(v))
        if abs(n - 1.0) > _UNIT_TOL:
            raise NotUnit(f"initial {name} is not unit: |{name}| = {n!r}")
    for pair, d in (("T.N", float(T @ N)), ("T.B", float(T @ B)),
                    ("N.B", float(N @ B))):
        if abs(d) > _UNIT_TOL:
            raise NotUnit(f"initial frame not orthogonal: {pair} = {d!r}")
    if float(np.cross(T, N) @ B) < 0.0:
        raise NotUnit("initial frame is not right-handed")


def _gram_schmidt(T, N, B):
    T = T / np.linalg.norm(T)
    N = N - (N @ T) * T
    N = N / np.linalg.norm(N)
    return T, N, np.cross(T, N)


def _frenet_rhs(Y: np.ndarray, k: float, t: float) -> np.ndarray:
    out = np.empty((4, 3))
    out[0] = k * Y[1]
    out[1] = -k * Y[0] + t * Y[2]
    out[2] = -t * Y[1]
    out[3] = Y[0]
    return out


def _frenet_rk4_step(Y: np.ndarray, h: float, k3v: tuple, t3v: tuple) -> np.ndarray:
    """One RK4 step; (k3v, t3v) hold kappa and tau at (s, s+h/2, s+h)."""
    k1 = _frenet_rhs(Y, k3v[0], t3v[0])
    k2 = _frenet_rhs(Y + 0.5 * h * k1, k3v[1], t3v[1])
    k3 = _frenet_rhs(Y + 0.5 * h * k2, k3v[1], t3v[1])
    k4 = _frenet_rhs(Y + h * k3, k3v[2], t3v[2])
    return Y + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)


def frenet_integrate(kappa: ScalarProfile, tau: ScalarProfile,
                     initial: FrenetState, grid: Grid) -> CurveTrace:
    """Integrate dT = kappa N, dN = -kappa T + tau B, dB = -tau N, dR = T."""
    T0 = np.asarray(initial.T, dtype=float)
    N0 = np.asarray(initial.N, dtype=float)
    B0 = np.asarray(initial.B, dtype=float)
    R0 = np.asarray(initial.R, dtype=float)
    _check_orthonormal(T0, N0, B0)
    _require_coverage(kappa, grid, "kappa")
    _require_coverage(tau, grid, "tau")

    pts = grid.points()
    half = grid.half_points()
    dt = np.diff(pts)
    n = pts.size - 1
    kap = np.atleast_1d(np.asarray(kappa(half), dtype=float))
    tav = np.atleast_1d(np.asarray(tau(half), dtype=float))

    Y = np.vstack([T0, N0, B0, R0])
    T_c = np.empty((n + 1, 3))
    N_c = np.empty((n + 1, 3))
    B_c = np.empty((n + 1, 3))
    R_c = np.empty((n + 1, 3))
    T_c[0], N_c[0], B_c[0], R_c[0] = T0, N0, B0, R0

    for k in range(n):
        i = 2 * k
        Y = _frenet_rk4_step(Y, float(dt[k]),
                             (kap[i], kap[i + 1], kap[i + 2]),
                             (tav[i], tav[i + 1], tav[i + 2]))
        Y[0], Y[1], Y[2] = _gram_schmidt(Y[0], Y[1], Y[2])
        T_c[k + 1], N_c[k + 1], B_c[k + 1], R_c[k + 1] = Y

    kappa_c = kap[0::2].copy()
    tau_c = tav[0::2].copy()
    chart_c, angle_c, switch_log = _label_charts(pts, T_c, N_c, B_c)
    return CurveTrace(s=pts, R=R_c, T=T_c, N=N_c, B=B_c, kappa=kappa_c,
                      tau=tau_c, chart_angle=angle_c, chart=chart_c,
                      degenerate_kappa=kappa_c == 0.0, grid=grid,
                      switch_log=switch_log, mode="oracle")


def _label_charts(pts, T_c, N_c, B_c):
    """Chart labels and angles for an externally integrated frame.

    Uses the same hysteresis policy as the synthesis engine so compared traces
    carry matching labels; the 'switches' here are relabelings, not state
    hand-offs, so their frame jump is identically zero.
    """
    n = T_c.shape[0]
    chart = THETA_CHART if abs(float(T_c[0, 1])) < 0.95 else PHI_CHART
    charts: list[str] = []
    angles = np.empty(n)
    log: list[SwitchEvent] = []
    for k in range(n):
        target = next_chart(chart, T_c[k])
        if target != chart and k > 0:
            log.append(SwitchEvent(float(pts[k]), chart, target, 0.0))
        chart = target
        charts.append(chart)
        if chart == THETA_CHART:
            angles[k] = theta_from_frame(T_c[k], N_c[k], B_c[k])
        else:
            angles[k] = phi_from_frame(T_c[k], N_c[k], B_c[k])
    return np.array(charts), angles, log


def finite_diff_curvature(trace: CurveTrace) -> np.ndarray:
    """|dT/ds| by centered differences (one-sided at the ends)."""
    if len(trace) < 3:
        raise TooShort(f"need at least 3 samples, got {len(trace)}")
    return np.linalg.norm(_centered_derivative(trace.T, trace.s), axis=1)


def _centered_derivative(X: np.ndarray, s: np.ndarray) -> np.ndarray:
    # second-order interior stencil valid on non-uniform spacing (the final
    # grid interval may be shorter than h), one-sided at the ends
    d = np.empty_like(X)
    h1 = (s[1:-1] - s[:-2])[:, None]
    h2 = (s[2:] - s[1:-1])[:, None]
    d[1:-1] = ((h1 / h2) * (X[2:] - X[1:-1])
               + (h2 / h1) * (X[1:-1] - X[:-2])) / (h1 + h2)
    d[0] = (X[1] - X[0]) / (s[1] - s[0])
    d[-1] = (X[-1] - X[-2]) / (s[-1] - s[-2])
    return d


def frenet_residuals(trace: CurveTrace):
    """Per-sample norms of the three frame-equation residuals.

    r1 = |dT/ds - kappa N|, r2 = |dN/ds + kappa T - tau B|,
    r3 = |dB/ds + tau N|, with centered differences on the trace grid.
    """
    if len(trace) < 3:
        raise TooShort(f"need at least 3 samples, got {len(trace)}")
    s = trace.s
    k = trace.kappa[:, None]
    t = trace.tau[:, None]
    r1 = np.linalg.norm(_centered_derivative(trace.T, s) - k * trace.N, axis=1)
    r2 = np.linalg.norm(_centered_derivative(trace.N, s) + k * trace.T
                        - t * trace.B, axis=1)
    r3 = np.linalg.norm(_centered_derivative(trace.B, s) + t * trace.N, axis=1)
    return r1, r2, r3


@dataclass
class ComparisonReport:
    """Per-sample and maximum deviations between two traces on one grid."""

    position_dev: np.ndarray
    tangent_dev: np.ndarray
    torsion_dev: np.ndarray
    chart_angle_dev: np.ndarray  # NaN where the traces use different charts
    samples: int
    grid: Grid

    @property
    def max_position_dev(self) -> float:
        return float(self.position_dev.max())

    @property
    def max_tangent_dev(self) -> float:
        return float(self.tangent_dev.max())

    @property
    def max_torsion_dev(self) -> float:
        return float(self.torsion_dev.max())

    @property
    def max_chart_angle_dev(self) -> float | None:
        if np.all(np.isnan(self.chart_angle_dev)):
            return None
        return float(np.nanmax(self.chart_angle_dev))

    @property
    def mean_position_dev(self) -> float:
        return float(self.position_dev.mean())

    @property
    def mean_tangent_dev(self) -> float:
        return float(self.tangent_dev.mean())

    @property
    def mean_torsion_dev(self) -> float:
        return float(self.torsion_dev.mean())


def compare_traces(a: CurveTrace, b: CurveTrace) -> ComparisonReport:
    """Deviation report for two traces sharing the same grid."""
    if a.grid != b.grid or len(a) != len(b):
        raise GridMismatch(
            f"grids differ: {a.grid} with {len(a)} samples vs "
            f"{b.grid} with {len(b)} samples")
    pos = np.linalg.norm(a.R - b.R, axis=1)
    tan = np.linalg.norm(a.T - b.T, axis=1)
    tor = np.abs(a.tau - b.tau)
    same = a.chart == b.chart
    raw = np.abs(np.mod(a.chart_angle - b.chart_angle + math.pi, 2.0 * math.pi)
                 - math.pi)
    ang = np.where(same, raw, np.nan)
    return ComparisonReport(position_dev=pos, tangent_dev=tan, torsion_dev=tor,
                            chart_angle_dev=ang, samples=len(a), grid=a.grid)
