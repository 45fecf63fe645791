"""Hand-expanded low-order truncations, written term by term.

Each function returns ``{order: matrix}`` built directly from ad-products,
without the generic series machinery.  Two kinds of rows exist:

* self-contained rows, which spell out every term;
* rows that refer to the truncation one order lower and add the new terms.
  Where the written reference points at the row itself, or at an order that
  does not exist, it is read as the next lower existing order.  Those rows
  are listed in ``READ_AS_PREVIOUS``.
"""

import numpy as np

from se3tangent.algebra import ad, ad_bar, ad_powers

# (table, column, order) of rows whose lower-order reference had to be reinterpreted
READ_AS_PREVIOUS = {
    ("ddexp", "D", 2),
    ("ddexp", "D", 3),
    ("ddexp", "J", 3),
    ("d2dexpinv", "D2", 2),
    ("hessian", "H", 2),
}


def _ctx(X, Z):
    P = ad_powers(X, 4)
    Zs = [P[i] @ Z for i in range(4)]
    return P, Zs


def power_derivative_rows(X, U):
    P, _ = _ctx(X, np.zeros(6))
    aU = ad(U)
    return {
        1: aU,
        2: aU @ P[1] + P[1] @ aU,
        3: aU @ P[2] + P[1] @ aU @ P[1] + P[2] @ aU,
        4: aU @ P[3] + P[2] @ aU @ P[1] + P[1] @ aU @ P[2] + P[3] @ aU,
    }


def pij_sum_rows(X, Z):
    P, Zs = _ctx(X, Z)
    return {
        1: -ad(Z),
        2: -ad(Zs[1]) - P[1] @ ad(Z),
        3: -ad(Zs[2]) - P[1] @ ad(Zs[1]) - P[2] @ ad(Z),
        4: -ad(Zs[3]) - P[1] @ ad(Zs[2]) - P[2] @ ad(Zs[1]) - P[3] @ ad(Z),
    }


def ddexp_rows(X, U, Z):
    P, Zs = _ctx(X, Z)
    aU = ad(U)
    D = {0: 0.5 * aU}
    D[1] = 0.5 * aU + (aU @ P[1] + P[1] @ aU) / 6
    # written as "(order 2) + ...": the previous order is meant
    D[2] = D[1] + (aU @ P[2] + P[1] @ aU @ P[1] + P[2] @ aU) / 24
    D[3] = D[2] + (aU @ P[3] + P[2] @ aU @ P[1] + P[1] @ aU @ P[2] + P[3] @ aU) / 120
    J = {0: -0.5 * ad(Z)}
    J[1] = -0.5 * ad(Z) - (ad(Zs[1]) + P[1] @ ad(Z)) / 6
    J[2] = J[1] - (ad(Zs[2]) + P[1] @ ad(Zs[1]) + P[2] @ ad(Z)) / 24
    # written as the order-2 Jacobian alone; the order-3 term is added here
    J[3] = J[2] - (ad(Zs[3]) + P[1] @ ad(Zs[2]) + P[2] @ ad(Zs[1]) + P[3] @ ad(Z)) / 120
    return D, J


def ddexp_order3_jacobian_as_written(X, Z):
    return ddexp_rows(X, np.zeros(6), Z)[1][2]


def ddexpinv_rows(X, U, Z):
    P, Zs = _ctx(X, Z)
    aU = ad(U)
    D = {0: -0.5 * aU}
    D[1] = -0.5 * aU + (aU @ P[1] + P[1] @ aU) / 12
    D[3] = D[1] - (aU @ P[3] + P[2] @ aU @ P[1] + P[1] @ aU @ P[2] + P[3] @ aU) / 720
    J = {0: 0.5 * ad(Z)}
    J[1] = 0.5 * ad(Z) - (ad(Zs[1]) + P[1] @ ad(Z)) / 12
    J[3] = J[1] + (ad(Zs[3]) + P[1] @ ad(Zs[2]) + P[2] @ ad(Zs[1]) + P[3] @ ad(Z)) / 720
    return D, J


def _d2_terms(X, U, S):
    P, _ = _ctx(X, np.zeros(6))
    aU, aS = ad(U), ad(S)
    t2 = aS @ aU + aU @ aS
    t3 = (P[1] @ aS + aS @ P[1]) @ aU + (aU @ aS + aS @ aU) @ P[1] + (aU @ P[1] + P[1] @ aU) @ aS
    t4 = (
        aS @ (P[2] @ aU + aU @ P[2] + P[1] @ aU @ P[1])
        + aU @ (P[2] @ aS + aS @ P[2] + P[1] @ aS @ P[1])
        + P[2] @ (aS @ aU + aU @ aS)
        + P[1] @ (aS @ (P[1] @ aU + aU @ P[1]) + aU @ (P[1] @ aS + aS @ P[1]))
    )
    return t2, t3, t4


def d2dexp_rows(X, U, S):
    t2, t3, t4 = _d2_terms(X, U, S)
    R = {0: t2 / 6}
    R[1] = t2 / 6 + t3 / 24
    R[2] = R[1] + t4 / 120
    return R


def d2dexpinv_rows(X, U, S):
    t2, _, t4 = _d2_terms(X, U, S)
    R = {0: t2 / 12}
    # written as "(order 1) - ...", but order 1 does not exist; it equals order 0
    R[2] = R[0] - t4 / 720
    return R


def hbar_rows(X, Q, Z):
    """``{2: Hbar_2, 3: Hbar_3, 4: Hbar_4}``; the written rows are labelled 0, 1, 2."""
    P, Zs = _ctx(X, Z)
    Qb = [ad_bar(P[i].T @ Q) for i in range(3)]
    return {
        2: Qb[0] @ ad(Z),
        3: Qb[0] @ (P[1] @ ad(Z) + ad(Zs[1])) + Qb[1] @ ad(Z),
        4: Qb[0] @ (P[2] @ ad(Z) + P[1] @ ad(Zs[1]) + ad(Zs[2]))
        + Qb[1] @ (P[1] @ ad(Z) + ad(Zs[1]))
        + Qb[2] @ ad(Z),
    }


def hessian_rows(X, Q, Z):
    Hb = hbar_rows(X, Q, Z)
    s = {i: Hb[i] + Hb[i].T for i in Hb}
    H = {0: s[2] / 6}
    H[1] = H[0] + s[3] / 24
    # written with the label 3 on the left; it is the order-2 truncation
    H[2] = H[1] + s[4] / 120
    Hinv = {0: s[2] / 12}
    Hinv[2] = Hinv[0] - s[4] / 720
    return H, Hinv
