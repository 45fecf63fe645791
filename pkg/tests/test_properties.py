"""Property-based checks over arbitrary screws, including exact and tiny rotations."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from se3tangent.algebra import ad
from se3tangent.derivatives import d2dexp, ddexp
from se3tangent.expmap import dexp, dexpinv, exp_se3, log_se3
from se3tangent.jacobians import jac_eval

finite = st.floats(-1.0, 1.0, allow_nan=False)
vec3 = st.tuples(finite, finite, finite).map(np.array)
angle = st.one_of(st.just(0.0), st.floats(1e-12, 1e-4), st.floats(1e-4, 3.0))


@st.composite
def screws(draw):
    axis = draw(vec3)
    n = np.linalg.norm(axis)
    x = draw(angle) * axis / n if n > 1e-3 else np.zeros(3)
    return np.concatenate([x, draw(vec3)])


vec6 = st.tuples(*[finite] * 6).map(np.array)
props = settings(max_examples=150, deadline=None)


@props
@given(screws())
def test_exp_log_round_trip(X):
    assert np.max(np.abs(log_se3(exp_se3(X)) - X)) < 1e-9


@props
@given(screws())
def test_dexp_fixes_its_argument_and_inverts(X):
    assert np.max(np.abs(dexp(X) @ X - X)) < 1e-14
    assert np.max(np.abs(dexp(X) @ dexpinv(X) - np.eye(6))) < 1e-12


@props
@given(screws(), vec6, vec6)
def test_second_derivative_symmetric(X, U, S):
    assert np.max(np.abs(d2dexp(X, U, S) - d2dexp(X, S, U))) < 1e-13
    assert np.max(np.abs(d2dexp(X, U, S, inverse=True) - d2dexp(X, S, U, inverse=True))) < 1e-13


@props
@given(screws(), vec6, vec6)
def test_jacobian_applies_directional_derivative(X, U, Z):
    for kind, inv in (("dexp", False), ("dexpinv", True)):
        assert np.max(np.abs(jac_eval(X, Z, kind) @ U - ddexp(X, U, inverse=inv) @ Z)) < 1e-12


@props
@given(vec6)
def test_derivatives_at_origin(U):
    assert np.array_equal(ddexp(np.zeros(6), U), 0.5 * ad(U))
    assert np.array_equal(ddexp(np.zeros(6), U, inverse=True), -0.5 * ad(U))
