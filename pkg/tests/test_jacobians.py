import numpy as np
import pytest
from conftest import maxabs, random_screw

from se3tangent.algebra import ad, ad_bar, ad_powers
from se3tangent.derivatives import d2dexp, ddexp, weight_families
from se3tangent.expmap import dexp, dexpinv
from se3tangent.fd import fd_directional, fd_hessian, fd_jacobian
from se3tangent.jacobians import (
    P_ij,
    P_ij_recursive,
    hbar_terms,
    hessian_eval,
    hessian_parts,
    jac_eval,
    jac_terms,
    jac_terms_transposed,
)

MAPS = {
    "dexp": lambda Z: lambda Y: dexp(Y) @ Z,
    "dexpinv": lambda Z: lambda Y: dexpinv(Y) @ Z,
    "dexpT": lambda Z: lambda Y: dexp(Y).T @ Z,
}


def test_P_ij_basic(rng):
    X, Z = rng.normal(size=6), rng.normal(size=6)
    assert np.array_equal(P_ij(X, Z, 1, 0), -ad(Z))
    total = P_ij(X, Z, 2, 0) + P_ij(X, Z, 2, 1)
    assert maxabs(total - (-ad(ad(X) @ Z) - ad(X) @ ad(Z))) < 1e-14


def test_P_ij_action_and_recursion(rng):
    X, Z, U = (rng.normal(size=6) for _ in range(3))
    P = ad_powers(X, 5)
    for i in range(1, 6):
        for j in range(i):
            M = P_ij(X, Z, i, j)
            assert maxabs(M @ U - P[j] @ ad(U) @ P[i - j - 1] @ Z) < 1e-12
            assert maxabs(P_ij_recursive(X, Z, i, j) - M) < 1e-12
    assert maxabs(P_ij_recursive(X, Z, 4, 2) - P_ij(X, Z, 4, 2)) < 1e-14
    with pytest.raises(ValueError):
        P_ij(X, Z, 2, 2)


def test_jac_terms_are_power_jacobians(rng):
    X, Z = rng.normal(size=6), rng.normal(size=6)
    J = jac_terms(X, Z, 4)
    JT = jac_terms_transposed(X, Z, 4)
    for i in range(1, 5):
        f = lambda Y, i=i: np.linalg.matrix_power(ad(Y), i) @ Z  # noqa: E731
        g = lambda Y, i=i: np.linalg.matrix_power(ad(Y), i).T @ Z  # noqa: E731
        assert maxabs(J[i] - fd_jacobian(f, X)) < 1e-8
        assert maxabs(JT[i] - fd_jacobian(g, X)) < 1e-8


def test_limits_at_zero(rng):
    Z = rng.normal(size=6)
    assert maxabs(jac_eval(np.zeros(6), Z, "dexp") + 0.5 * ad(Z)) == 0
    assert maxabs(jac_eval(np.zeros(6), Z, "dexpinv") - 0.5 * ad(Z)) == 0
    assert maxabs(jac_eval(np.zeros(6), Z, "dexpT") - 0.5 * ad_bar(Z)) == 0


@pytest.mark.parametrize("kind", ["dexp", "dexpinv", "dexpT"])
def test_jacobian_matches_fd_and_directional(rng, kind):
    for _ in range(5):
        X, Z = random_screw(rng, 0.01, 3.0), rng.normal(size=6)
        J = jac_eval(X, Z, kind)
        assert maxabs(J - fd_jacobian(MAPS[kind](Z), X)) < 1e-7
        inverse = kind == "dexpinv"
        for _ in range(20):
            U = rng.normal(size=6)
            D = ddexp(X, U, inverse=inverse)
            ref = D.T @ Z if kind == "dexpT" else D @ Z
            assert maxabs(J @ U - ref) < 1e-11


def test_column_extraction(rng):
    X, Z = random_screw(rng), rng.normal(size=6)
    J = jac_eval(X, Z, "dexp")
    for j, e in enumerate(np.eye(6)):
        assert maxabs(J[:, j] - ddexp(X, e) @ Z) < 1e-13


def test_radial_part_has_zero_translation_columns(rng):
    X, Z = random_screw(rng), rng.normal(size=6)
    w, wbar = weight_families(X)
    P = ad_powers(X, 4)
    J = jac_terms(X, Z, 4, P)
    radial = jac_eval(X, Z, "dexp") - sum(w[i] * J[i] for i in range(1, 5))
    assert np.array_equal(radial[:, 3:], np.zeros((6, 3)))


def test_hessian_at_zero(rng):
    Q, Z = rng.normal(size=6), rng.normal(size=6)
    Hb = ad_bar(Q) @ ad(Z)
    assert maxabs(hessian_eval(np.zeros(6), Q, Z) - (Hb + Hb.T) / 6) < 1e-15
    assert maxabs(hessian_eval(np.zeros(6), Q, Z, "dexpinv") - (Hb + Hb.T) / 12) < 1e-15


@pytest.mark.parametrize("kind", ["dexp", "dexpinv"])
def test_hessian_symmetry_before_symmetrization(rng, kind):
    for _ in range(50):
        X, Q, Z = random_screw(rng), rng.normal(size=6), rng.normal(size=6)
        H = sum(hessian_parts(X, Q, Z, kind == "dexpinv"))
        assert maxabs(H - H.T) < 1e-12


@pytest.mark.parametrize("kind", ["dexp", "dexpinv"])
def test_hessian_matches_fd_and_bilinear_form(rng, kind):
    inverse = kind == "dexpinv"
    M = dexpinv if inverse else dexp
    for _ in range(3):
        X, Q, Z = random_screw(rng, 0.05, 3.0), rng.normal(size=6), rng.normal(size=6)
        H = hessian_eval(X, Q, Z, kind)
        assert maxabs(H - fd_hessian(lambda Y: Q @ M(Y) @ Z, X)) < 1e-5
        for _ in range(20):
            U, S = rng.normal(size=6), rng.normal(size=6)
            assert abs(S @ H @ U - Q @ d2dexp(X, U, S, inverse=inverse) @ Z) < 1e-11


def test_hbar_sum_starts_at_two(rng):
    X, Q, Z = (rng.normal(size=6) for _ in range(3))
    Hb = hbar_terms(X, Q, Z, 4)
    assert np.array_equal(Hb[0], np.zeros((6, 6))) and np.array_equal(Hb[1], np.zeros((6, 6)))
    for i in (2, 3, 4):
        f = lambda Y, i=i: Q @ np.linalg.matrix_power(ad(Y), i) @ Z  # noqa: E731
        assert maxabs(Hb[i] + Hb[i].T - fd_hessian(f, X)) < 1e-6


def test_transpose_duality(rng):
    X, Z, U = random_screw(rng), rng.normal(size=6), rng.normal(size=6)
    assert maxabs(jac_eval(X, Z, "dexpT") @ U - ddexp(X, U).T @ Z) < 1e-12


def test_bad_kind(rng):
    X = rng.normal(size=6)
    with pytest.raises(ValueError):
        jac_eval(X, X, "dexpinvT")
    with pytest.raises(ValueError):
        hessian_eval(X, X, X, "dexpT")


def test_fd_directional_on_map(rng):
    X, Z, U = random_screw(rng), rng.normal(size=6), rng.normal(size=6)
    assert maxabs(fd_directional(MAPS["dexp"](Z), X, U) - jac_eval(X, Z) @ U) < 1e-8
