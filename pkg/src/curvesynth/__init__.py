"""Space-curve synthesis from curvature and osculating-plane rotation profiles."""

from .chart_manager import (integrate_position, switch_chart,
                            synthesize_from_kappa_tau,
                            synthesize_from_kappa_theta)
from .closed_forms import ClosedFormCase, closed_form_trace
from .errors import (BothChartsSingular, ChartSingular, CurveSynthError,
                     DomainError, GridMismatch, NegativeCurvature, NotUnit,
                     NumericalError, OutOfValidity, TooShort, ValidationError)
from .oracle import (ComparisonReport, FrenetState, compare_traces,
                     finite_diff_curvature, frenet_integrate, frenet_residuals)
from .profiles import (ConstantProfile, GaussianProfile, LinearProfile,
                       ScalarProfile, TabulatedProfile, eval_profile,
                       profile_from_spec)
from .trace import (PHI_CHART, THETA_CHART, CurveTrace, FrameSample, Grid,
                    SwitchEvent)

__all__ = [
    "BothChartsSingular", "ChartSingular", "ClosedFormCase", "ComparisonReport",
    "ConstantProfile", "CurveSynthError", "CurveTrace", "DomainError",
    "FrameSample", "FrenetState", "GaussianProfile", "Grid", "GridMismatch",
    "LinearProfile", "NegativeCurvature", "NotUnit", "NumericalError",
    "OutOfValidity", "PHI_CHART", "ScalarProfile", "SwitchEvent",
    "TabulatedProfile", "THETA_CHART", "TooShort", "ValidationError",
    "closed_form_trace", "compare_traces", "eval_profile",
    "finite_diff_curvature", "frenet_integrate", "frenet_residuals",
    "integrate_position", "profile_from_spec", "switch_chart",
    "synthesize_from_kappa_tau", "synthesize_from_kappa_theta",
]
