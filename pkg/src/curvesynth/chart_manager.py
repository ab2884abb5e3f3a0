"""End-to-end curve synthesis on an arc-length grid with automatic chart switching.

Two driving modes share one engine: curvature plus prescribed plane-rotation
angle, or curvature plus prescribed torsion. Frames are advanced by fixed-step
RK4 in the active chart's reduced state; position is quadrature of the tangent
samples, done once at the end.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (BothChartsSingular, ChartSingular, DomainError,
                     NegativeCurvature, NotUnit, ValidationError)
from .phi_chart import PhiState, frame_from_phi_state, phi_from_frame
from .profiles import ScalarProfile
from .theta_chart import (COS_FLOOR, ThetaState, _require_unit,
                          binormal_from_state, normal_from_state,
                          tangent_from_state, theta_from_frame,
                          torsion_from_theta_state)
from .trace import (PHI_CHART, THETA_CHART, CurveTrace, FrameSample, Grid,
                    SwitchEvent)

# Leave a chart once the offending tangent component reaches SWITCH_OUT;
# return to the j-safe home chart only after it falls below SWITCH_IN. The
# 0.95 bound caps the 1/cos amplification at ~3.2 while the other chart's
# component is then at most sqrt(1 - 0.95^2) ~ 0.31; the 0.05 gap is the
# hysteresis band that prevents switch thrashing.
SWITCH_OUT = 0.95
SWITCH_IN = 0.90

_CLIP = lambda x: max(-1.0, min(1.0, x))


def next_chart(chart: str, T) -> str:
    """Chart the synthesis should continue in, given the current tangent."""
    Ti, Tj = abs(float(T[0])), abs(float(T[1]))
    if chart == THETA_CHART:
        if Tj >= SWITCH_OUT:
            if Ti >= SWITCH_OUT:
                raise BothChartsSingular(
                    f"|T_i|={Ti!r} and |T_j|={Tj!r} both beyond {SWITCH_OUT}")
            return PHI_CHART
        return THETA_CHART
    if Ti >= SWITCH_OUT or Tj <= SWITCH_IN:
        return THETA_CHART
    return PHI_CHART


def switch_chart(sample: FrameSample, target: str):
    """Re-express a sample's frame as the target chart's state.

    The chart angle is recomputed from the frame, never carried over
    numerically; the returned state's tangent reconstruction reproduces the
    sample's tangent to rounding.
    """
    T, N, B = sample.T, sample.N, sample.B
    if target == THETA_CHART:
        if abs(float(T[1])) >= SWITCH_OUT:
            raise ChartSingular(
                f"cannot enter the theta chart at |T_j| = {abs(float(T[1]))!r}")
        return ThetaState(sample.s,
                          math.asin(_CLIP(float(T[1]))),
                          math.atan2(float(T[2]), float(T[0])),
                          theta_from_frame(T, N, B))
    if target == PHI_CHART:
        if abs(float(T[0])) >= SWITCH_OUT:
            raise ChartSingular(
                f"cannot enter the phi chart at |T_i| = {abs(float(T[0]))!r}")
        return PhiState(sample.s,
                        math.asin(_CLIP(float(T[0]))),
                        math.atan2(float(T[2]), float(T[1])),
                        phi_from_frame(T, N, B))
    raise ValidationError(f"unknown chart {target!r}")


def integrate_position(T, grid: Grid, R0=(0.0, 0.0, 0.0)) -> np.ndarray:
    """Cumulative positions from tangent samples: dR/ds = T.

    Composite Simpson over paired uniform intervals, with each pair's panel
    split at its midpoint so every sample gets an O(h^4)-accurate position.
    An odd leftover uniform interval integrates the parabola through the last
    three uniform samples; the short tail interval (and a grid with a single
    interval, where no parabola exists) falls back to the trapezoid rule.
    """
    T = np.asarray(T, dtype=float)
    R0 = np.asarray(R0, dtype=float)
    pts = grid.points()
    if T.shape != (pts.size, 3):
        raise ValidationError(
            f"expected {pts.size} tangent samples of dimension 3, got {T.shape}")
    n = pts.size - 1
    m = grid.n_uniform
    h = grid.h
    inc = np.zeros((n, 3))
    p = np.arange(0, m - 1, 2)
    if p.size:
        t0, t1, t2 = T[p], T[p + 1], T[p + 2]
        inc[p] = h * (5.0 * t0 + 8.0 * t1 - t2) / 12.0
        inc[p + 1] = h * (-t0 + 8.0 * t1 + 5.0 * t2) / 12.0
    if m % 2 == 1:
        if m >= 2:
            inc[m - 1] = h * (-T[m - 2] + 8.0 * T[m - 1] + 5.0 * T[m]) / 12.0
        else:
            inc[0] = 0.5 * h * (T[0] + T[1])
    if n > m:
        hp = float(pts[-1] - pts[-2])
        inc[-1] = 0.5 * hp * (T[-2] + T[-1])
    return np.vstack([R0, R0 + np.cumsum(inc, axis=0)])


def synthesize_from_kappa_theta(kappa: ScalarProfile, theta: ScalarProfile, T0,
                                R0=(0.0, 0.0, 0.0), grid: Grid = None, *,
                                force_chart: str | None = None) -> CurveTrace:
    """Synthesize a trace from curvature and plane-rotation-angle profiles."""
    return _synthesize("kappa-theta", kappa, theta, None, T0, None, R0, grid,
                       force_chart)


def synthesize_from_kappa_tau(kappa: ScalarProfile, tau: ScalarProfile, T0, N0,
                              R0=(0.0, 0.0, 0.0), grid: Grid = None, *,
                              force_chart: str | None = None) -> CurveTrace:
    """Synthesize a trace from curvature and torsion profiles."""
    return _synthesize("kappa-tau", kappa, None, tau, T0, N0, R0, grid,
                       force_chart)


def _require_coverage(profile: ScalarProfile, grid: Grid, name: str) -> None:
    if not profile.covers(grid.s0, grid.s_end):
        raise DomainError(
            f"{name} profile domain {profile.domain} does not cover "
            f"[{grid.s0!r}, {grid.s_end!r}]")


def _require_frame(T0: np.ndarray, N0: np.ndarray) -> None:
    _require_unit(T0, "T0")
    _require_unit(N0, "N0")
    dot = abs(float(T0 @ N0))
    if dot > 1e-9:
        raise NotUnit(f"T0 and N0 must be orthogonal; |T0.N0| = {dot!r}")


def _synthesize(mode, kappa, theta, tau, T0, N0, R0, grid, force_chart):
    if grid is None:
        raise ValidationError("grid is required")
    pts = grid.points()
    half = grid.half_points()
    dt = np.diff(pts).tolist()
    n = pts.size - 1
    pts_l = pts.tolist()

    _require_coverage(kappa, grid, "kappa")
    kap_arr = np.atleast_1d(np.asarray(kappa(half), dtype=float))
    if np.any(kap_arr < 0.0):
        i = int(np.argmax(kap_arr < 0.0))
        raise NegativeCurvature(
            f"curvature profile negative ({float(kap_arr[i])!r}) at s={float(half[i])!r}")
    kap = kap_arr.tolist()

    if mode == "kappa-theta":
        _require_coverage(theta, grid, "theta")
        thv = np.atleast_1d(np.asarray(theta(half), dtype=float)).tolist()
        thd = np.atleast_1d(np.asarray(theta.derivative(half), dtype=float)).tolist()
    else:
        _require_coverage(tau, grid, "tau")
        tav = np.atleast_1d(np.asarray(tau(half), dtype=float)).tolist()

    T0 = np.asarray(T0, dtype=float)
    R0 = np.asarray(R0, dtype=float)
    _require_unit(T0, "T0")

    if force_chart is not None:
        if force_chart not in (THETA_CHART, PHI_CHART):
            raise ValidationError(f"unknown chart {force_chart!r}")
        chart = force_chart
        switching = False
    else:
        chart = THETA_CHART if abs(float(T0[1])) < SWITCH_OUT else PHI_CHART
        switching = True

    floor = COS_FLOOR

    # --- initial reduced state ------------------------------------------------
    if mode == "kappa-tau":
        N0 = np.asarray(N0, dtype=float)
        _require_frame(T0, N0)
        B0 = np.cross(T0, N0)
        if chart == THETA_CHART:
            d = math.asin(_CLIP(float(T0[1])))
            y = (d, math.atan2(float(T0[2]), float(T0[0])),
                 theta_from_frame(T0, N0, B0))
        else:
            y = (math.asin(_CLIP(float(T0[0]))),
                 math.atan2(float(T0[2]), float(T0[1])),
                 phi_from_frame(T0, N0, B0))
    else:
        theta0 = thv[0]
        if chart == THETA_CHART:
            y = (math.asin(_CLIP(float(T0[1]))),
                 math.atan2(float(T0[2]), float(T0[0])))
        else:
            # the rotation prescription still defines the frame through the
            # j-aligned chart's geometry as long as T is not exactly +/-j
            if 1.0 - float(T0[1]) ** 2 < floor * floor:
                raise ChartSingular(
                    "rotation-prescribed synthesis is undefined at T0 = +/-j")
            st0 = ThetaState(float(pts_l[0]),
                             math.asin(_CLIP(float(T0[1]))),
                             math.atan2(float(T0[2]), float(T0[0])), theta0)
            Nn, Bb = normal_from_state(st0), binormal_from_state(st0)
            y = (math.asin(_CLIP(float(T0[0]))),
                 math.atan2(float(T0[2]), float(T0[1])),
                 phi_from_frame(T0, Nn, Bb))

    # --- right-hand sides over the half grid ----------------------------------
    sin, cos, tan = math.sin, math.cos, math.tan

    # Crossing T = +/-j inside the other chart flips this chart's principal
    # arcsine branch, so a prescribed rotation angle re-enters shifted by a
    # multiple of pi; th_off carries that shift for the current segment.
    th_off = 0.0

    if mode == "kappa-theta":
        def rhs_theta(i, y):
            d, b = y
            cd = cos(d)
            if cd < floor:
                raise ChartSingular(f"cos(delta) below floor near s={float(half[i])!r}")
            k = kap[i]
            th = thv[i] + th_off
            return (k * cos(th), k * sin(th) / cd)

        def rhs_phi(i, y):
            g, a, p = y
            cg = cos(g)
            if cg < floor:
                raise ChartSingular(f"cos(gamma) below floor near s={float(half[i])!r}")
            k = kap[i]
            sp, cp = sin(p), cos(p)
            # torsion implied by the rotation prescription, read off the frame
            Tj = cg * cos(a)
            om = 1.0 - Tj * Tj
            if om < floor * floor:
                raise ChartSingular(
                    f"rotation prescription singular (T at +/-j) near s={float(half[i])!r}")
            Bj = -sin(g) * cos(a) * sp - sin(a) * cp
            tau_loc = thd[i] + k * Tj * Bj / om
            return (-k * cp, k * sp / cg, tau_loc - k * tan(g) * sp)
    else:
        def rhs_theta(i, y):
            d, b, t = y
            cd = cos(d)
            if cd < floor:
                raise ChartSingular(f"cos(delta) below floor near s={float(half[i])!r}")
            k = kap[i]
            st, ct = sin(t), cos(t)
            return (k * ct, k * st / cd, tav[i] + k * tan(d) * st)

        def rhs_phi(i, y):
            g, a, p = y
            cg = cos(g)
            if cg < floor:
                raise ChartSingular(f"cos(gamma) below floor near s={float(half[i])!r}")
            k = kap[i]
            sp, cp = sin(p), cos(p)
            return (-k * cp, k * sp / cg, tav[i] - k * tan(g) * sp)

    def rk4_step(f, k, y):
        h = dt[k]
        i0 = 2 * k
        m = len(y)
        k1 = f(i0, y)
        h2 = 0.5 * h
        k2 = f(i0 + 1, tuple(y[j] + h2 * k1[j] for j in range(m)))
        k3 = f(i0 + 1, tuple(y[j] + h2 * k2[j] for j in range(m)))
        k4 = f(i0 + 2, tuple(y[j] + h * k3[j] for j in range(m)))
        w = h / 6.0
        return tuple(y[j] + w * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j])
                     for j in range(m))

    # --- output columns --------------------------------------------------------
    T_c = np.empty((n + 1, 3))
    N_c = np.empty((n + 1, 3))
    B_c = np.empty((n + 1, 3))
    kappa_c = np.empty(n + 1)
    tau_c = np.empty(n + 1)
    angle_c = np.empty(n + 1)
    chart_c: list[str] = []
    switch_log: list[SwitchEvent] = []

    def frame_of(k, chart, y):
        s = pts_l[k]
        if chart == THETA_CHART:
            th = thv[2 * k] + th_off if mode == "kappa-theta" else y[2]
            st = ThetaState(s, y[0], y[1], th)
            return (tangent_from_state(st), normal_from_state(st),
                    binormal_from_state(st), st)
        ps = PhiState(s, y[0], y[1], y[2])
        T, N, B = frame_from_phi_state(ps)
        return T, N, B, ps

    def emit(k, chart, y):
        T, N, B, state = frame_of(k, chart, y)
        kv = kap[2 * k]
        if chart == THETA_CHART:
            if mode == "kappa-theta":
                tau_v = torsion_from_theta_state(state, kv, thd[2 * k])
            else:
                tau_v = tav[2 * k]
            ang = state.theta
        else:
            if mode == "kappa-theta":
                Tj = float(T[1])
                om = 1.0 - Tj * Tj
                if om < floor * floor:
                    raise ChartSingular(
                        f"rotation prescription singular at s={pts_l[k]!r}")
                tau_v = thd[2 * k] + kv * Tj * float(B[1]) / om
            else:
                tau_v = tav[2 * k]
            ang = state.phi
        T_c[k] = T
        N_c[k] = N
        B_c[k] = B
        kappa_c[k] = kv
        tau_c[k] = tau_v
        angle_c[k] = ang
        chart_c.append(chart)

    def convert(k, chart, y, target):
        nonlocal th_off
        T, N, B, _ = frame_of(k, chart, y)
        sample = FrameSample(pts_l[k], np.zeros(3), T, N, B,
                             kap[2 * k], 0.0, 0.0, chart)
        new_state = switch_chart(sample, target)
        if target == THETA_CHART:
            Tn = tangent_from_state(new_state)
            Nn = normal_from_state(new_state)
            Bn = binormal_from_state(new_state)
            if mode == "kappa-theta":
                # re-anchor the prescription to this chart's current branch;
                # the true offset is an exact multiple of pi
                th_off = round((new_state.theta - thv[2 * k]) / math.pi) * math.pi
                y_new = (new_state.delta, new_state.beta)
            else:
                y_new = (new_state.delta, new_state.beta, new_state.theta)
        else:
            Tn, Nn, Bn = frame_from_phi_state(new_state)
            y_new = (new_state.gamma, new_state.alpha, new_state.phi)
        jump = max(float(np.linalg.norm(Tn - T)),
                   float(np.linalg.norm(Nn - N)),
                   float(np.linalg.norm(Bn - B)))
        return y_new, jump

    f_cur = rhs_theta if chart == THETA_CHART else rhs_phi
    emit(0, chart, y)

    for k in range(1, n + 1):
        y = rk4_step(f_cur, k - 1, y)
        if switching:
            if chart == THETA_CHART:
                Tj = sin(y[0])
                Ti = cos(y[0]) * cos(y[1])
            else:
                Ti = sin(y[0])
                Tj = cos(y[0]) * cos(y[1])
            target = next_chart(chart, (Ti, Tj, 0.0))
            if target != chart:
                y, jump = convert(k, chart, y, target)
                switch_log.append(SwitchEvent(float(pts_l[k]), chart, target, jump))
                chart = target
                f_cur = rhs_theta if chart == THETA_CHART else rhs_phi
        emit(k, chart, y)

    R_c = integrate_position(T_c, grid, R0)
    return CurveTrace(s=pts, R=R_c, T=T_c, N=N_c, B=B_c, kappa=kappa_c,
                      tau=tau_c, chart_angle=angle_c,
                      chart=np.array(chart_c), degenerate_kappa=kappa_c == 0.0,
                      grid=grid, switch_log=switch_log, mode=mode)
