"""Jacobians of the evaluation maps ``X -> dexp(X) Z`` and Hessians of ``Q^T dexp(X) Z``.

Notation: ``Z_i = ad_X**i Z``, ``Zbar_i = (ad_X**i)^T Z`` and ``Qbar_i = (ad_X**i)^T Q``.
The Jacobian of ``X -> P_i(X) Z`` is ``J_i = sum_j P_ij`` with
``P_ij = -P_j ad(Z_{i-j-1})``.
"""

from __future__ import annotations

import numpy as np

from .algebra import ad, ad_bar, ad_powers, as_screw
from .derivatives import weight_families

JAC_KINDS = ("dexp", "dexpinv", "dexpT")


def P_ij(X, Z, i, j, P=None):
    """``P_ij = -P_j ad(Z_{i-j-1})``, so that ``P_ij U = P_j ad_U P_{i-j-1} Z``."""
    if not 0 <= j < i:
        raise ValueError(f"need 0 <= j < i, got i={i}, j={j}")
    if P is None:
        P = ad_powers(X, i)
    return -P[j] @ ad(P[i - j - 1] @ as_screw(Z, "Z"))


def P_ij_recursive(X, Z, i, j):
    """Same as :func:`P_ij`, built by ``P_ij = ad_X P_{i-1,j} + P_j ad(Z_{i-j-2}) ad_X``."""
    if not 0 <= j < i:
        raise ValueError(f"need 0 <= j < i, got i={i}, j={j}")
    A = ad(X)
    P = ad_powers(X, i)
    Z = as_screw(Z, "Z")
    out = -P[j] @ ad(Z)  # P_{j+1, j}
    for m in range(j + 2, i + 1):
        out = A @ out + P[j] @ ad(P[m - j - 2] @ Z) @ A
    return out


def jac_terms(X, Z, n, P=None):
    """``[J_0, ..., J_n]`` with ``J_i`` the Jacobian of ``X -> P_i(X) Z``."""
    if P is None:
        P = ad_powers(X, n)
    adZ = [ad(P[k] @ Z) for k in range(n)]
    out = [np.zeros((6, 6))]
    for i in range(1, n + 1):
        out.append(-sum(P[j] @ adZ[i - j - 1] for j in range(i)))
    return out


def jac_terms_transposed(X, Z, n, P=None):
    """Jacobians of ``X -> P_i(X)^T Z`` for i = 0..n."""
    if P is None:
        P = ad_powers(X, n)
    bars = [ad_bar(P[k].T @ Z) for k in range(n)]
    out = [np.zeros((6, 6))]
    for i in range(1, n + 1):
        out.append(sum(P[i - j - 1].T @ bars[j] for j in range(i)))
    return out


def _radial_row(X):
    row = np.zeros(6)
    row[:3] = X[:3]
    return row


def jac_eval(X, Z, kind="dexp", naive=False):
    """Jacobian ``d/dX (M(X) Z)`` for ``M`` = dexp, dexp^-1 or their transposes."""
    if kind not in JAC_KINDS:
        raise ValueError(f"kind must be one of {JAC_KINDS}, got {kind!r}")
    X, Z = as_screw(X), as_screw(Z, "Z")
    inverse = kind.startswith("dexpinv")
    transposed = kind.endswith("T")
    w, wbar = weight_families(X, inverse, naive)
    P = ad_powers(X, 4)
    J = jac_terms_transposed(X, Z, 4, P) if transposed else jac_terms(X, Z, 4, P)
    out = np.zeros((6, 6))
    zsum = np.zeros(6)
    for i in range(1, 5):
        out += w[i] * J[i]
        zsum += wbar[i] * ((P[i].T if transposed else P[i]) @ Z)
    return out + np.outer(zsum, _radial_row(X))


def hbar_terms(X, Q, Z, n, P=None):
    """``[Hbar_0, ..., Hbar_n]``, ``Hbar_i = sum_{j<i} sum_{l<j} ad_bar(Qbar_{i-j-1}) P_l ad(Z_{j-l-1})``.

    ``Hbar_i + Hbar_i^T`` is the Hessian of ``X -> Q^T P_i(X) Z``.
    """
    if P is None:
        P = ad_powers(X, n)
    qbars = [ad_bar(P[k].T @ Q) for k in range(n)]
    adZ = [ad(P[k] @ Z) for k in range(n)]
    out = [np.zeros((6, 6)), np.zeros((6, 6))]
    for i in range(2, n + 1):
        acc = np.zeros((6, 6))
        for j in range(1, i):
            inner = sum(P[l] @ adZ[j - l - 1] for l in range(j))
            acc += qbars[i - j - 1] @ inner
        out.append(acc)
    return out[: n + 1]


def hessian_parts(X, Q, Z, inverse=False, naive=False):
    """The three contributions ``(H1, H2, H3)`` to the Hessian of ``Q^T M(X) Z``.

    ``H1`` collects second derivatives of the weights, ``H2`` the weights times
    second derivatives of ``P_i`` and ``H3`` the mixed terms.
    """
    X, Q, Z = as_screw(X), as_screw(Q, "Q"), as_screw(Z, "Z")
    w, wbar, wbreve = weight_families(X, inverse, naive, second=True)
    P = ad_powers(X, 4)
    J = jac_terms(X, Z, 4, P)
    Hb = hbar_terms(X, Q, Z, 4, P)
    x = X[:3]
    r = _radial_row(X)
    H1 = np.zeros((6, 6))
    H2 = np.zeros((6, 6))
    H3 = np.zeros((6, 6))
    for i in range(1, 5):
        qz = Q @ (P[i] @ Z)
        H1[:3, :3] += qz * (wbar[i] * np.eye(3) + wbreve[i] * np.outer(x, x))
        H2 += w[i] * (Hb[i] + Hb[i].T)
        m = wbar[i] * np.outer(r, Q @ J[i])
        H3 += m + m.T
    return H1, H2, H3


def hessian_eval(X, Q, Z, kind="dexp", naive=False):
    """Symmetric Hessian of ``X -> Q^T M(X) Z`` for ``M`` = dexp or dexp^-1."""
    if kind not in ("dexp", "dexpinv"):
        raise ValueError(f"kind must be 'dexp' or 'dexpinv', got {kind!r}")
    H = sum(hessian_parts(X, Q, Z, kind == "dexpinv", naive))
    return 0.5 * (H + H.T)
