import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesynth.errors import DomainError, NegativeCurvature, ValidationError
from curvesynth.profiles import (ConstantProfile, GaussianProfile,
                                 LinearProfile, TabulatedProfile, eval_profile,
                                 profile_from_spec)


def test_constant_value_anywhere():
    assert eval_profile(ConstantProfile(1.5), 7.3) == 1.5


def test_gaussian_at_origin():
    assert GaussianProfile(2.0)(0.0) == 2.0


def test_gaussian_decay():
    p = GaussianProfile(2.0)
    assert p(1.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-15)


def test_linear():
    p = LinearProfile(2.0, -1.0)
    assert p(3.0) == 5.0
    assert p.derivative(123.0) == 2.0


def test_two_point_table_is_linear():
    # monotone cubic through two points degenerates to the secant line
    p = TabulatedProfile([(0.0, 0.0), (1.0, 2.0)])
    assert p(0.5) == 1.0


def test_tabulated_reproduces_knots_exactly():
    knots = [(0.0, 0.3), (0.7, -1.25), (1.1, -1.25), (math.pi, 4.0), (5.0, 0.125)]
    p = TabulatedProfile(knots)
    for s, v in knots:
        assert p(s) == v


def test_tabulated_requires_increasing_abscissae():
    with pytest.raises(ValidationError):
        TabulatedProfile([(0.0, 1.0), (0.0, 2.0)])


def test_tabulated_domain_enforced():
    p = TabulatedProfile([(0.0, 1.0), (1.0, 2.0)])
    with pytest.raises(DomainError):
        p(1.5)
    with pytest.raises(DomainError):
        p(-0.1)


def test_explicit_domain_on_analytic_profile():
    p = ConstantProfile(1.0, domain=(0.0, 2.0))
    assert p(1.0) == 1.0
    with pytest.raises(DomainError):
        p(2.5)
    assert p.covers(0.0, 2.0)
    assert not p.covers(0.0, 3.0)


def test_negative_curvature_rejected_at_eval():
    p = LinearProfile(-1.0, 0.5, role="kappa")
    assert p(0.0) == 0.5
    with pytest.raises(NegativeCurvature):
        p(1.0)


def test_negative_curvature_rejected_at_construction():
    with pytest.raises(NegativeCurvature):
        ConstantProfile(-1.0, role="kappa")
    with pytest.raises(NegativeCurvature):
        TabulatedProfile([(0.0, 1.0), (1.0, -0.5)], role="kappa")


def test_kappa_zero_is_allowed():
    assert ConstantProfile(0.0, role="kappa")(3.0) == 0.0


def test_non_kappa_role_may_go_negative():
    assert LinearProfile(-1.0, 0.0)(2.0) == -2.0


def test_array_eval_matches_scalar():
    p = TabulatedProfile([(0.0, 0.0), (0.5, 1.0), (1.5, 0.25), (2.0, 3.0)])
    s = np.linspace(0.0, 2.0, 101)
    vec = p(s)
    assert vec.shape == s.shape
    for i in (0, 17, 50, 100):
        assert vec[i] == p(float(s[i]))


def test_eval_is_pure():
    p = GaussianProfile(1.7)
    assert p(0.83) == p(0.83)


def test_derivative_matches_finite_difference():
    eps = 1e-6
    for p in (GaussianProfile(1.3),
              TabulatedProfile([(0.0, 0.0), (0.5, 1.0), (1.5, 0.25), (2.0, 3.0)])):
        for s in (0.3, 0.9, 1.4):
            fd = (p(s + eps) - p(s - eps)) / (2 * eps)
            assert p.derivative(s) == pytest.approx(fd, abs=1e-6)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-50, 50), min_size=3, max_size=8, unique=True),
       st.data())
def test_monotone_interpolation_never_overshoots(xs, data):
    xs = sorted(xs)
    if min(np.diff(xs)) < 1e-3:
        return
    ys = data.draw(st.lists(st.floats(-100, 100), min_size=len(xs),
                            max_size=len(xs)))
    p = TabulatedProfile(list(zip(xs, ys)))
    for i in range(len(xs) - 1):
        t = np.linspace(xs[i], xs[i + 1], 23)
        v = p(t)
        lo, hi = min(ys[i], ys[i + 1]), max(ys[i], ys[i + 1])
        span = max(1.0, hi - lo)
        assert np.all(v >= lo - 1e-12 * span)
        assert np.all(v <= hi + 1e-12 * span)


@pytest.mark.parametrize("spec, at, expect", [
    ({"kind": "constant", "value": 2.5}, 1.0, 2.5),
    ({"kind": "linear", "slope": 1.0, "intercept": 1.0}, 2.0, 3.0),
    ({"kind": "gaussian", "amplitude": 3.0}, 0.0, 3.0),
    ({"kind": "tabulated", "samples": [[0.0, 0.0], [1.0, 2.0]]}, 0.5, 1.0),
])
def test_profile_from_spec(spec, at, expect):
    assert profile_from_spec(spec)(at) == expect


def test_profile_from_spec_rejects_garbage():
    with pytest.raises(ValidationError):
        profile_from_spec({"kind": "spline"})
    with pytest.raises(ValidationError):
        profile_from_spec({"kind": "constant"})
    with pytest.raises(ValidationError):
        profile_from_spec("not a dict")
