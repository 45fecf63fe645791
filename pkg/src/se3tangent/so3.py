"""Rotation group helpers: hat/vee, exponential, logarithm and dexp on so(3)."""

from __future__ import annotations

import math

import numpy as np

from . import kernels


class SingularConfigurationError(ValueError):
    """Raised when a logarithm is requested at (or too near) its cut locus."""


def as_vector(v, n, name="vector"):
    a = np.asarray(v, dtype=float)
    if a.shape != (n,):
        raise ValueError(f"{name} must have shape ({n},), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def skew(v):
    """3x3 skew-symmetric matrix with ``skew(v) @ w == cross(v, w)``."""
    x, y, z = np.asarray(v, dtype=float)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def unskew(m):
    """Inverse of :func:`skew`; uses the antisymmetric part of ``m``."""
    m = np.asarray(m, dtype=float)
    return 0.5 * np.array([m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1]])


def exp_so3(x, naive=False):
    """Rotation matrix ``exp(skew(x))``."""
    x = as_vector(x, 3, "x")
    c = kernels.base_coeffs(np.linalg.norm(x), naive=naive)
    xs = skew(x)
    return np.eye(3) + c.alpha * xs + 0.5 * c.beta * (xs @ xs)


def dexp_so3(x, naive=False):
    """Right-trivialized differential of ``exp_so3`` at ``x``."""
    x = as_vector(x, 3, "x")
    c = kernels.base_coeffs(np.linalg.norm(x), naive=naive)
    xs = skew(x)
    return np.eye(3) + 0.5 * c.beta * xs + c.delta * (xs @ xs)


def dexpinv_so3(x, naive=False):
    """Inverse of :func:`dexp_so3`."""
    x = as_vector(x, 3, "x")
    phi = np.linalg.norm(x)
    q = kernels.block_coeffs(phi, naive=naive)["so3_dexpinv_quad"]
    xs = skew(x)
    return np.eye(3) - 0.5 * xs + q * (xs @ xs)


def log_so3(R, tol=1e-9, cut=1e-6):
    """Rotation vector of ``R`` with angle in ``[0, pi)``.

    Raises :class:`SingularConfigurationError` when the angle is within ``cut``
    of pi, where the logarithm is not unique, and ``ValueError`` when ``R`` is
    not a proper rotation to within ``tol``.
    """
    R = np.asarray(R, dtype=float)
    if R.shape != (3, 3) or not np.all(np.isfinite(R)):
        raise ValueError("R must be a finite 3x3 matrix")
    if np.linalg.norm(R.T @ R - np.eye(3)) > tol or np.linalg.det(R) < 0:
        raise ValueError("R is not a rotation matrix")
    w = unskew(R)  # sin(phi) * n
    s = np.linalg.norm(w)
    c = 0.5 * (np.trace(R) - 1.0)
    phi = math.atan2(s, c)
    if phi > math.pi - cut:
        raise SingularConfigurationError(f"rotation angle {phi} is too close to pi")
    return w / kernels.base_coeffs(phi).alpha
