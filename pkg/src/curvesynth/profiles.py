"""Scalar functions of arc length used as curvature, rotation-angle, or torsion inputs.

Profiles are immutable after construction and safe to evaluate concurrently.
A profile carrying the "kappa" role must stay non-negative; evaluation raises
NegativeCurvature otherwise.
"""

from __future__ import annotations

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import DomainError, NegativeCurvature, ValidationError

KAPPA_ROLE = "kappa"

# slack for float noise when checking grid points against a declared domain
_DOMAIN_TOL = 1e-9


class ScalarProfile:
    """Base class for the four profile kinds (constant, linear, gaussian, tabulated)."""

    kind = "base"

    def __init__(self, role: str | None = None, domain: tuple[float, float] | None = None):
        self.role = role
        if domain is not None:
            domain = (float(domain[0]), float(domain[1]))
            if not domain[0] < domain[1]:
                raise ValidationError(f"profile domain must be increasing, got {domain}")
        self.domain = domain

    def __call__(self, s):
        """Evaluate at a scalar or ndarray of arc lengths; pure and deterministic."""
        scalar = np.ndim(s) == 0
        arr = np.atleast_1d(np.asarray(s, dtype=float))
        self._check_domain(arr)
        v = self._eval(arr)
        if self.role == KAPPA_ROLE and np.any(v < 0.0):
            i = int(np.argmax(v < 0.0))
            raise NegativeCurvature(
                f"curvature profile evaluates to {float(v[i])!r} < 0 at s={float(arr[i])!r}")
        return float(v[0]) if scalar else v

    def derivative(self, s):
        """d(profile)/ds at a scalar or ndarray of arc lengths."""
        scalar = np.ndim(s) == 0
        arr = np.atleast_1d(np.asarray(s, dtype=float))
        self._check_domain(arr)
        d = self._eval_derivative(arr)
        return float(d[0]) if scalar else d

    def covers(self, lo: float, hi: float) -> bool:
        """True when [lo, hi] lies inside the declared domain (unbounded if none)."""
        if self.domain is None:
            return True
        tol = _DOMAIN_TOL * max(1.0, abs(self.domain[0]), abs(self.domain[1]))
        return self.domain[0] - tol <= lo and hi <= self.domain[1] + tol

    def _check_domain(self, arr: np.ndarray) -> None:
        if self.domain is None or arr.size == 0:
            return
        lo, hi = self.domain
        tol = _DOMAIN_TOL * max(1.0, abs(lo), abs(hi))
        if arr.min() < lo - tol or arr.max() > hi + tol:
            s_bad = arr[int(np.argmax((arr < lo - tol) | (arr > hi + tol)))]
            raise DomainError(
                f"s={float(s_bad)!r} outside the profile domain [{lo!r}, {hi!r}]")

    def _eval(self, arr: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _eval_derivative(self, arr: np.ndarray) -> np.ndarray:
        raise NotImplementedError


class ConstantProfile(ScalarProfile):
    kind = "constant"

    def __init__(self, value: float, role=None, domain=None):
        super().__init__(role, domain)
        self.value = float(value)
        if self.role == KAPPA_ROLE and self.value < 0.0:
            raise NegativeCurvature(f"constant curvature {self.value!r} < 0")

    def _eval(self, arr):
        return np.full(arr.shape, self.value)

    def _eval_derivative(self, arr):
        return np.zeros(arr.shape)


class LinearProfile(ScalarProfile):
    """a*s + b."""

    kind = "linear"

    def __init__(self, slope: float, intercept: float, role=None, domain=None):
        super().__init__(role, domain)
        self.slope = float(slope)
        self.intercept = float(intercept)

    def _eval(self, arr):
        return self.slope * arr + self.intercept

    def _eval_derivative(self, arr):
        return np.full(arr.shape, self.slope)


class GaussianProfile(ScalarProfile):
    """amplitude * exp(-s^2)."""

    kind = "gaussian"

    def __init__(self, amplitude: float, role=None, domain=None):
        super().__init__(role, domain)
        self.amplitude = float(amplitude)
        if self.role == KAPPA_ROLE and self.amplitude < 0.0:
            raise NegativeCurvature(f"gaussian curvature amplitude {self.amplitude!r} < 0")

    def _eval(self, arr):
        return self.amplitude * np.exp(-arr * arr)

    def _eval_derivative(self, arr):
        return -2.0 * arr * self.amplitude * np.exp(-arr * arr)


class TabulatedProfile(ScalarProfile):
    """Monotone cubic (PCHIP / Fritsch-Carlson family) through strictly increasing knots.

    The interpolant cannot overshoot the local data range, so a non-negative
    table stays non-negative between knots. Knot values are reproduced exactly.
    No extrapolation: the domain is the knot range.
    """

    kind = "tabulated"

    def __init__(self, samples, role=None):
        s = np.asarray([p[0] for p in samples], dtype=float)
        v = np.asarray([p[1] for p in samples], dtype=float)
        if s.size < 2:
            raise ValidationError("tabulated profile needs at least two samples")
        if not np.all(np.diff(s) > 0.0):
            raise ValidationError("tabulated abscissae must be strictly increasing")
        super().__init__(role, (float(s[0]), float(s[-1])))
        if self.role == KAPPA_ROLE and np.any(v < 0.0):
            i = int(np.argmax(v < 0.0))
            raise NegativeCurvature(f"tabulated curvature {float(v[i])!r} < 0 at s={float(s[i])!r}")
        self._s = s
        self._v = v
        self._interp = PchipInterpolator(s, v, extrapolate=False)
        self._deriv = self._interp.derivative()

    def _eval(self, arr):
        # clip float noise at the edges (the domain check already ran), then
        # overwrite knot hits so table values are reproduced bit-exactly
        clipped = np.clip(arr, self._s[0], self._s[-1])
        out = self._interp(clipped)
        idx = np.clip(np.searchsorted(self._s, clipped), 0, self._s.size - 1)
        hit = self._s[idx] == clipped
        out[hit] = self._v[idx[hit]]
        return out

    def _eval_derivative(self, arr):
        clipped = np.clip(arr, self._s[0], self._s[-1])
        return self._deriv(clipped)


def eval_profile(profile: ScalarProfile, s):
    """Evaluate a profile; alias for calling it directly."""
    return profile(s)


def profile_from_spec(spec: dict, role: str | None = None) -> ScalarProfile:
    """Build a profile from its config-file representation.

    Schema: {"kind": "constant"|"linear"|"gaussian"|"tabulated", ...params},
    with optional "domain": [s0, s_end] on the analytic kinds.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValidationError(f"profile spec must be an object with a 'kind': {spec!r}")
    kind = spec["kind"]
    domain = spec.get("domain")
    try:
        if kind == "constant":
            return ConstantProfile(spec["value"], role=role, domain=domain)
        if kind == "linear":
            return LinearProfile(spec["slope"], spec["intercept"], role=role, domain=domain)
        if kind == "gaussian":
            return GaussianProfile(spec["amplitude"], role=role, domain=domain)
        if kind == "tabulated":
            return TabulatedProfile(spec["samples"], role=role)
    except KeyError as exc:
        raise ValidationError(f"profile spec for kind={kind!r} is missing {exc}") from None
    raise ValidationError(f"unknown profile kind {kind!r}")
