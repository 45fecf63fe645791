import math

import numpy as np
import pytest
from conftest import maxabs, rot_z

from se3tangent.so3 import (
    SingularConfigurationError,
    dexp_so3,
    dexpinv_so3,
    exp_so3,
    log_so3,
    skew,
    unskew,
)


def random_rotvec(rng, phi):
    x = rng.normal(size=3)
    return phi * x / np.linalg.norm(x)


def test_skew_unskew(rng):
    v, w = rng.normal(size=3), rng.normal(size=3)
    assert np.allclose(skew(v) @ w, np.cross(v, w), atol=1e-15)
    assert np.array_equal(unskew(skew(v)), v)


def test_exp_identity():
    assert np.array_equal(exp_so3(np.zeros(3)), np.eye(3))


def test_exp_quarter_turn_about_z():
    R = exp_so3([0.0, 0.0, math.pi / 2])
    assert maxabs(R - np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])) < 1e-15


def test_exp_is_rotation_fixing_axis(rng):
    x = random_rotvec(rng, 1.3)
    R = exp_so3(x)
    assert maxabs(R.T @ R - np.eye(3)) < 1e-13
    assert abs(np.linalg.det(R) - 1) < 1e-13
    assert maxabs(R @ x - x) < 1e-13


def test_exp_of_negative_is_inverse(rng):
    for _ in range(20):
        x = random_rotvec(rng, rng.uniform(0, 3))
        assert maxabs(exp_so3(x) @ exp_so3(-x) - np.eye(3)) < 1e-14


def test_dexp_at_zero():
    assert np.array_equal(dexp_so3(np.zeros(3)), np.eye(3))
    assert np.array_equal(dexpinv_so3(np.zeros(3)), np.eye(3))


def test_dexp_inverse_pair(rng):
    x = random_rotvec(rng, 2.0)
    assert maxabs(dexp_so3(x) @ dexpinv_so3(x) - np.eye(3)) < 1e-13


def test_dexp_series(rng):
    for phi in (0.1, 1.0, 2.5):
        x = random_rotvec(rng, phi)
        xs = skew(x)
        S, P = np.zeros((3, 3)), np.eye(3)
        for i in range(31):
            S += P / math.factorial(i + 1)
            P = P @ xs
        assert maxabs(dexp_so3(x) - S) < 1e-13


def test_normalized_forms_agree(rng):
    for phi in np.geomspace(1e-6, 3.0, 25):
        x = random_rotvec(rng, phi)
        n2 = skew(x / phi) @ skew(x / phi)
        al = math.sin(phi) / phi
        be = (math.sin(phi / 2) / (phi / 2)) ** 2
        A = np.eye(3) + 0.5 * be * skew(x) + (1 - al) * n2
        B = np.eye(3) - 0.5 * skew(x) + (1 - al / be) * n2
        assert maxabs(dexp_so3(x) - A) < 1e-14
        assert maxabs(dexpinv_so3(x) - B) < 1e-14


def test_spatial_angular_velocity(rng):
    x0, xd = random_rotvec(rng, 1.1), rng.normal(size=3)
    h = 1e-5
    dR = (exp_so3(x0 + h * xd) - exp_so3(x0 - h * xd)) / (2 * h)
    omega = dR @ exp_so3(x0).T
    assert maxabs(omega - skew(dexp_so3(x0) @ xd)) < 1e-6


def test_log_identity_and_quarter_turn():
    assert np.array_equal(log_so3(np.eye(3)), np.zeros(3))
    assert maxabs(log_so3(rot_z(math.pi / 2)) - [0.0, 0.0, math.pi / 2]) < 1e-15


def test_log_round_trip(rng):
    worst = 0.0
    for _ in range(1000):
        x = random_rotvec(rng, rng.uniform(0.0, 3.0))
        worst = max(worst, np.linalg.norm(log_so3(exp_so3(x)) - x))
    assert worst < 1e-11


def test_log_tiny_angle():
    x = np.array([1e-9, -2e-9, 3e-10])
    assert maxabs(log_so3(exp_so3(x)) - x) < 1e-22


def test_log_rejects_near_pi():
    with pytest.raises(SingularConfigurationError):
        log_so3(rot_z(math.pi - 1e-8))
    assert isinstance(SingularConfigurationError(), ValueError)


def test_log_rejects_non_rotation():
    with pytest.raises(ValueError):
        log_so3(np.diag([1.0, 1.0, -1.0]))
    with pytest.raises(ValueError):
        log_so3(np.eye(3) * 1.01)


def test_input_validation():
    with pytest.raises(ValueError):
        exp_so3([1.0, 2.0])
    with pytest.raises(ValueError):
        exp_so3([np.nan, 0.0, 0.0])
