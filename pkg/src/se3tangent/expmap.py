"""Exponential map of SE(3) and its right-trivialized differential.

``dexp(X)`` is the 6x6 matrix with ``d/dt exp(X + tU) = dexp(X) U`` in the
right-trivialized sense, expanded as ``I + sum_i a_i ad_X**i`` (i = 1..4).
Its inverse only needs the powers 1, 2 and 4.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .algebra import ad, ad_powers, as_screw, hat, rotation_norm
from .so3 import dexpinv_so3, log_so3


def exp_se3(X, naive=False):
    """Homogeneous 4x4 transform ``exp(hat(X))`` via the quartic identity."""
    X = as_screw(X)
    c = kernels.base_coeffs(rotation_norm(X), naive=naive)
    Xh = hat(X)
    X2 = Xh @ Xh
    return np.eye(4) + Xh + 0.5 * c.beta * X2 + c.delta * (X2 @ Xh)


def log_se3(H):
    """Screw coordinates of a homogeneous transform (rotation angle < pi)."""
    H = np.asarray(H, dtype=float)
    if H.shape != (4, 4) or not np.allclose(H[3], [0.0, 0.0, 0.0, 1.0], atol=1e-12):
        raise ValueError("H must be a 4x4 homogeneous transform")
    x = log_so3(H[:3, :3])
    y = dexpinv_so3(x) @ H[:3, 3]
    return np.concatenate([x, y])


def dexp(X, naive=False):
    X = as_screw(X)
    c = kernels.dexp_coeffs(rotation_norm(X), naive=naive)
    P = ad_powers(X, 4)
    return P[0] + c.a1 * P[1] + c.a2 * P[2] + c.a3 * P[3] + c.a4 * P[4]


def dexpinv(X, naive=False):
    X = as_screw(X)
    c = kernels.dexp_coeffs(rotation_norm(X), naive=naive)
    P = ad_powers(X, 4)
    return P[0] + c.b1 * P[1] + c.b2 * P[2] + c.b4 * P[4]


def _normalized_powers(X):
    X = as_screw(X)
    phi = rotation_norm(X)
    if phi == 0.0:
        raise ValueError("the normalized form needs a nonzero rotation")
    N = ad(X / phi)
    A = ad(X)
    return phi, A, N, N @ N


def dexp_normalized(X):
    """dexp written with ``ad_N``, ``N = X/phi``, so no coefficient divides by phi.

    Equivalent to :func:`dexp` for ``phi > 0``; the ``(1 - alpha)`` factors make
    it lose accuracy for small ``phi``.
    """
    phi, A, N, N2 = _normalized_powers(X)
    c = kernels.base_coeffs(phi)
    al, be = c.alpha, c.beta
    A2 = A @ A
    return (
        np.eye(6)
        + (be - 0.5 * al) * A
        - 0.25 * be * A2
        + 2.5 * (1.0 - al) * N2
        + 0.5 * (be - al) * N2 @ A
        - 0.25 * be * N2 @ A2
        + 1.5 * (1.0 - al) * N2 @ N2
    )


def dexpinv_normalized(X):
    """dexp^-1 written with ``ad_N``, ``N = X/phi``."""
    phi, A, N, N2 = _normalized_powers(X)
    c = kernels.base_coeffs(phi)
    al, be = c.alpha, c.beta
    return (
        np.eye(6)
        - 0.5 * A
        + (2.0 - (1.0 + 3.0 * al) / (2.0 * be)) * N2
        + (1.0 - (1.0 + al) / (2.0 * be)) * N2 @ N2
    )


@lru_cache(maxsize=None)
def bernoulli_numbers(n):
    """Exact ``B_0..B_n`` with the convention ``B_1 = -1/2``."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(math.comb(m + 1, k) * B[k] for k in range(m)) / Fraction(m + 1))
    return tuple(B)


def dexp_weights(n, inverse=False):
    """Series weights ``w_i`` with ``dexp = sum_i w_i ad**i`` (i = 0..n)."""
    if inverse:
        B = bernoulli_numbers(n)
        return [B[i] / math.factorial(i) for i in range(n + 1)]
    return [Fraction(1, math.factorial(i + 1)) for i in range(n + 1)]


def dexp_series(X, degree=30, inverse=False):
    """Truncated power series of dexp (or dexp^-1) in ``ad_X``."""
    w = dexp_weights(degree, inverse)
    P = ad_powers(X, degree)
    out = np.zeros((6, 6))
    for wi, Pi in zip(w, P):
        if wi:
            out += float(wi) * Pi
    return out
