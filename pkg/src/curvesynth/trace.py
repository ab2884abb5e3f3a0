"""Grid, frame-sample, and trace containers shared by the synthesis and oracle paths."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

THETA_CHART = "theta"
PHI_CHART = "phi"


@dataclass(frozen=True)
class Grid:
    """Uniform arc-length grid from s0 to s_end with step h.

    When h does not divide the span evenly the final interval is shorter than
    h; sample abscissae otherwise advance by exactly one step per index.
    """

    s0: float
    s_end: float
    h: float

    def __post_init__(self):
        if not self.h > 0.0:
            raise ValidationError(f"grid step h must be positive, got {self.h!r}")
        if not self.s_end > self.s0:
            raise ValidationError(f"grid needs s_end > s0, got [{self.s0!r}, {self.s_end!r}]")

    @property
    def n_uniform(self) -> int:
        """Number of full-width steps (the 1e-9 slack absorbs division noise)."""
        return int(math.floor((self.s_end - self.s0) / self.h + 1e-9))

    @property
    def tail(self) -> float:
        """Width of the short final interval, 0.0 when h divides the span."""
        t = (self.s_end - self.s0) - self.n_uniform * self.h
        return t if t > 1e-9 * self.h else 0.0

    def points(self) -> np.ndarray:
        pts = self.s0 + np.arange(self.n_uniform + 1) * self.h
        if self.tail > 0.0:
            return np.append(pts, self.s_end)
        pts[-1] = self.s_end  # snap accumulated rounding onto the endpoint
        return pts

    def half_points(self) -> np.ndarray:
        """Sample points interleaved with interval midpoints (for RK4 stages)."""
        pts = self.points()
        half = np.empty(2 * pts.size - 1)
        half[0::2] = pts
        half[1::2] = 0.5 * (pts[:-1] + pts[1:])
        return half


@dataclass(frozen=True)
class FrameSample:
    """One synthesized sample: position, Frenet frame, and scalar diagnostics."""

    s: float
    R: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float
    chart_angle: float
    chart: str
    degenerate_kappa: bool = False


@dataclass(frozen=True)
class SwitchEvent:
    """A chart hand-off: where it happened and how large the frame jump was."""

    s: float
    from_chart: str
    to_chart: str
    frame_jump: float


@dataclass
class CurveTrace:
    """Ordered frame samples on a grid, immutable once returned by a builder."""

    s: np.ndarray
    R: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    chart_angle: np.ndarray
    chart: np.ndarray
    degenerate_kappa: np.ndarray
    grid: Grid
    switch_log: list[SwitchEvent] = field(default_factory=list)
    mode: str = ""

    def __len__(self) -> int:
        return int(self.s.size)

    def sample(self, i: int) -> FrameSample:
        return FrameSample(
            s=float(self.s[i]),
            R=self.R[i].copy(),
            T=self.T[i].copy(),
            N=self.N[i].copy(),
            B=self.B[i].copy(),
            kappa=float(self.kappa[i]),
            tau=float(self.tau[i]),
            chart_angle=float(self.chart_angle[i]),
            chart=str(self.chart[i]),
            degenerate_kappa=bool(self.degenerate_kappa[i]),
        )
