"""CSV serialization of traces and JSON-ready comparison reports.

Floats are written with Python's shortest round-trip representation, so a
parsed CSV reproduces every column bit-exactly and identical runs produce
byte-identical files.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .oracle import ComparisonReport
from .trace import CurveTrace, Grid, SwitchEvent

COLUMNS = ("s", "Rx", "Ry", "Rz", "Tx", "Ty", "Tz", "Nx", "Ny", "Nz",
           "Bx", "By", "Bz", "kappa", "tau", "chart_angle", "chart",
           "degenerate_kappa")

_ANGLE_NOTE = ("# chart_angle is the active chart's plane-rotation angle; its "
               "meaning changes at switches (see the chart column)")


def _fmt(x) -> str:
    return repr(float(x))


def trace_to_csv(trace: CurveTrace) -> str:
    lines = ["# curvesynth trace"]
    if trace.mode:
        lines.append(f"# mode: {trace.mode}")
    g = trace.grid
    lines.append(f"# grid: s0={_fmt(g.s0)} s_end={_fmt(g.s_end)} h={_fmt(g.h)}")
    lines.append(_ANGLE_NOTE)
    for ev in trace.switch_log:
        lines.append(f"# switch: s={_fmt(ev.s)} from={ev.from_chart} "
                     f"to={ev.to_chart} frame_jump={_fmt(ev.frame_jump)}")
    lines.append(",".join(COLUMNS))
    R, T, N, B = trace.R, trace.T, trace.N, trace.B
    for i in range(len(trace)):
        row = [_fmt(trace.s[i]),
               _fmt(R[i, 0]), _fmt(R[i, 1]), _fmt(R[i, 2]),
               _fmt(T[i, 0]), _fmt(T[i, 1]), _fmt(T[i, 2]),
               _fmt(N[i, 0]), _fmt(N[i, 1]), _fmt(N[i, 2]),
               _fmt(B[i, 0]), _fmt(B[i, 1]), _fmt(B[i, 2]),
               _fmt(trace.kappa[i]), _fmt(trace.tau[i]),
               _fmt(trace.chart_angle[i]), str(trace.chart[i]),
               "1" if trace.degenerate_kappa[i] else "0"]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _parse_kv(line: str) -> dict:
    out = {}
    for token in line.split():
        if "=" in token:
            key, val = token.split("=", 1)
            out[key] = val
    return out


def trace_from_csv(text: str) -> CurveTrace:
    mode = ""
    grid = None
    switch_log: list[SwitchEvent] = []
    header = None
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("mode:"):
                mode = body[len("mode:"):].strip()
            elif body.startswith("grid:"):
                kv = _parse_kv(body)
                grid = Grid(float(kv["s0"]), float(kv["s_end"]), float(kv["h"]))
            elif body.startswith("switch:"):
                kv = _parse_kv(body)
                switch_log.append(SwitchEvent(float(kv["s"]), kv["from"],
                                              kv["to"], float(kv["frame_jump"])))
            continue
        if header is None:
            header = tuple(line.split(","))
            if header != COLUMNS:
                raise ValidationError(f"unexpected CSV columns: {header}")
            continue
        rows.append(line.split(","))
    if grid is None or header is None or not rows:
        raise ValidationError("not a trace CSV: missing grid header or data rows")
    data = np.array([[float(v) for v in row[:16]] for row in rows])
    chart = np.array([row[16] for row in rows])
    degen = np.array([row[17] == "1" for row in rows])
    return CurveTrace(s=data[:, 0], R=data[:, 1:4], T=data[:, 4:7],
                      N=data[:, 7:10], B=data[:, 10:13], kappa=data[:, 13],
                      tau=data[:, 14], chart_angle=data[:, 15], chart=chart,
                      degenerate_kappa=degen, grid=grid, switch_log=switch_log,
                      mode=mode)


def report_to_dict(report: ComparisonReport) -> dict:
    """JSON-ready summary of a comparison; per-sample arrays are not included."""
    return {
        "max_position_dev": report.max_position_dev,
        "max_tangent_dev": report.max_tangent_dev,
        "max_torsion_dev": report.max_torsion_dev,
        "mean_position_dev": report.mean_position_dev,
        "mean_tangent_dev": report.mean_tangent_dev,
        "mean_torsion_dev": report.mean_torsion_dev,
        "max_chart_angle_dev": report.max_chart_angle_dev,
        "samples": report.samples,
        "grid": {"s0": report.grid.s0, "s_end": report.grid.s_end,
                 "h": report.grid.h},
    }
