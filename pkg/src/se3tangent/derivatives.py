"""First and second directional derivatives of dexp and dexp^-1.

Everything is assembled from two ingredients: the derivatives of the powers
``P_i = ad_X**i``, which follow from the product rule, and the radial
derivatives of the scalar weights (see :mod:`se3tangent.kernels`).
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .algebra import ad, ad_powers, as_screw, rotation_norm
from .expmap import dexp, dexp_weights


def dP_list(X, U, n, P=None):
    """``[D P_0 (U), ..., D P_n (U)]`` with ``D P_i(U) = sum_j P_j ad_U P_{i-j-1}``."""
    if P is None:
        P = ad_powers(X, n)
    aU = ad(U)
    out = [np.zeros((6, 6))]
    for i in range(1, n + 1):
        out.append(sum(P[j] @ aU @ P[i - j - 1] for j in range(i)))
    return out


def d2P_list(X, U, S, n, P=None, dPS=None):
    """``[D^2 P_0 (U)(S), ..., D^2 P_n (U)(S)]``."""
    if P is None:
        P = ad_powers(X, n)
    if dPS is None:
        dPS = dP_list(X, S, n, P)
    aU = ad(U)
    out = [np.zeros((6, 6)), np.zeros((6, 6))]
    for i in range(2, n + 1):
        acc = np.zeros((6, 6))
        for j in range(1, i):
            acc += dPS[j] @ aU @ P[i - j - 1] + P[i - j - 1] @ aU @ dPS[j]
        out.append(acc)
    return out[: n + 1]


def dP(X, U, i):
    """Directional derivative of ``ad_X**i`` along ``U`` (``i`` in 1..4)."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"i must be in 1..4, got {i}")
    return dP_list(as_screw(X), as_screw(U, "U"), i)[i]


def d2P(X, U, S, i):
    """Second directional derivative of ``ad_X**i`` (``i`` in 2..4)."""
    if i not in (2, 3, 4):
        raise ValueError(f"i must be in 2..4, got {i}")
    return d2P_list(as_screw(X), as_screw(U, "U"), as_screw(S, "S"), i)[i]


def weight_families(X, inverse=False, naive=False, second=False):
    """Weights ``w[i]``, ``wbar[i]`` and (optionally) ``wbreve[i]`` for i = 0..4.

    ``w[0]`` is the identity weight; the derivative factors of constant
    weights are zero.
    """
    phi = rotation_norm(X)
    c = kernels.dexp_coeffs(phi, naive=naive)
    d = kernels.dexp_coeff_derivs(phi, naive=naive)
    if inverse:
        w = (1.0, c.b1, c.b2, 0.0, c.b4)
        wbar = (0.0, 0.0, d.bbar2, 0.0, d.bbar4)
        wbreve = (0.0, 0.0, d.bbreve2, 0.0, d.bbreve4)
    else:
        w = (1.0, c.a1, c.a2, c.a3, c.a4)
        wbar = (0.0, d.abar1, d.abar2, d.abar3, d.abar4)
        wbreve = (0.0, d.abreve1, d.abreve2, d.abreve3, d.abreve4)
    if second:
        return w, wbar, wbreve
    return w, wbar


def ddexp(X, U, inverse=False, naive=False):
    """``(D_X dexp)(U)``, or of dexp^-1 when ``inverse`` is set."""
    X, U = as_screw(X), as_screw(U, "U")
    w, wbar = weight_families(X, inverse, naive)
    P = ad_powers(X, 4)
    dPU = dP_list(X, U, 4, P)
    xu = X[:3] @ U[:3]
    out = np.zeros((6, 6))
    for i in range(1, 5):
        out += w[i] * dPU[i] + (xu * wbar[i]) * P[i]
    return out


def ddexpinv(X, U, naive=False):
    return ddexp(X, U, inverse=True, naive=naive)


def d2dexp(X, U, S, inverse=False, naive=False):
    """``(D^2_X dexp)(U)(S)``, or of dexp^-1 when ``inverse`` is set."""
    X, U, S = as_screw(X), as_screw(U, "U"), as_screw(S, "S")
    w, wbar, wbreve = weight_families(X, inverse, naive, second=True)
    P = ad_powers(X, 4)
    dPU = dP_list(X, U, 4, P)
    dPS = dP_list(X, S, 4, P)
    d2 = d2P_list(X, U, S, 4, P, dPS)
    x = X[:3]
    xu, xs, su = x @ U[:3], x @ S[:3], S[:3] @ U[:3]
    out = np.zeros((6, 6))
    for i in range(1, 5):
        out += (su * wbar[i] + xu * xs * wbreve[i]) * P[i]
        out += w[i] * d2[i]
        out += wbar[i] * (xu * dPS[i] + xs * dPU[i])
    return out


def d2dexpinv(X, U, S, naive=False):
    return d2dexp(X, U, S, inverse=True, naive=naive)


def ddexp_normalized(X, U):
    """``(D_X dexp)(U)`` written with ``N = X/phi``; needs ``phi > 0``."""
    X, U = as_screw(X), as_screw(U, "U")
    phi = rotation_norm(X)
    if phi == 0.0:
        raise ValueError("the normalized form needs a nonzero rotation")
    c = kernels.base_coeffs(phi)
    al, be = c.alpha, c.beta
    A, N, aU = ad(X), ad(X / phi), ad(U)
    N2 = N @ N
    N3 = N2 @ N
    xu = X[:3] @ U[:3]
    nu = xu / phi
    return (
        (be - 0.5 * al) * aU
        - 0.25 * be * (A @ aU + aU @ A)
        + (2.5 - 2.5 * al) / phi * (N @ aU + aU @ N)
        + 0.5 * (be - al) * (N2 @ aU + N @ aU @ N + aU @ N2)
        - 0.25 * be * A @ (N2 @ aU + aU @ N2)
        - 0.25 * be * (N2 @ aU + aU @ N2) @ A
        + (1.5 - 1.5 * al) / phi * (N3 @ aU + N2 @ aU @ N + N @ aU @ N2 + aU @ N3)
        + 0.25 * be * xu * A
        + (2.5 * al - 2.0 * be - 0.5) * nu * N
        + ((1.75 * be - 0.5 * al) * xu + 7.5 * (al - 1.0) * nu / phi) * N2
        + 0.25 * be * xu * N2 @ A
        + (2.5 * al - 2.0 * be - 0.5) * nu * N3
        + ((1.75 * be - 0.5 * al) * xu + 7.5 * (al - 1.0) * nu / phi) * N2 @ N2
    )


def ddexpinv_normalized(X, U):
    """``(D_X dexp^-1)(U)`` written with ``N = X/phi``; needs ``phi > 0``."""
    X, U = as_screw(X), as_screw(U, "U")
    phi = rotation_norm(X)
    if phi == 0.0:
        raise ValueError("the normalized form needs a nonzero rotation")
    c = kernels.base_coeffs(phi)
    al, be, ga = c.alpha, c.beta, c.gamma
    N, aU = ad(X / phi), ad(U)
    N2 = N @ N
    N3 = N2 @ N
    xu = X[:3] @ U[:3]
    nu = xu / phi
    return (
        -0.5 * aU
        + (2.0 - (1.0 + 3.0 * al) / (2.0 * be)) / phi * (N @ aU + aU @ N)
        + (1.0 - (1.0 + al) / (2.0 * be)) / phi * (N3 @ aU + N2 @ aU @ N + N @ aU @ N2 + aU @ N3)
        + (0.75 * xu + (ga * (1.5 + 1.0 / be + 3.0 * ga) - 1.5 / be - 4.0) * nu / phi) * N2
        + (0.25 * xu + (0.5 / be + 1.5 * ga + ga / be + ga * ga - 4.0) * nu / phi) * N2 @ N2
    )


def twist_derivatives(X, Xd, Xdd, Xddd):
    """Spatial twist ``V`` and its first two time derivatives along ``X(t)``."""
    X, Xd, Xdd, Xddd = (as_screw(v, n) for v, n in zip((X, Xd, Xdd, Xddd), "X Xd Xdd Xddd".split()))
    T = dexp(X)
    D1 = ddexp(X, Xd)
    V = T @ Xd
    Vd = T @ Xdd + D1 @ Xd
    Vdd = T @ Xddd + 2.0 * D1 @ Xdd + ddexp(X, Xdd) @ Xd + d2dexp(X, Xd, Xd) @ Xd
    return V, Vd, Vdd


def ddexp_series(X, U, degree=30, inverse=False):
    """Truncated series ``sum_{i<=degree} w_i D P_i (U)`` of the first derivative.

    The power derivatives come from ``D P_i = ad_X D P_{i-1} + ad_U P_{i-1}``,
    a recursion independent of the closed-form weights.
    """
    X, U = as_screw(X), as_screw(U, "U")
    w = dexp_weights(degree, inverse)
    A, aU = ad(X), ad(U)
    P, D = np.eye(6), np.zeros((6, 6))
    out = np.zeros((6, 6))
    for i in range(1, degree + 1):
        D = A @ D + aU @ P
        P = A @ P
        if w[i]:
            out += float(w[i]) * D
    return out
