import numpy as np
from conftest import maxabs, random_screw, screw_with_norm

from se3tangent.algebra import ad, ad_bar, ad_powers, adjoint_of_transform, bracket, hat, vee
from se3tangent.expmap import dexp, exp_se3
from se3tangent.so3 import skew


def test_hat_vee(rng):
    X = rng.normal(size=6)
    assert np.array_equal(vee(hat(X)), X)


def test_ad_is_bracket_of_hats(rng):
    X, U = rng.normal(size=6), rng.normal(size=6)
    comm = hat(X) @ hat(U) - hat(U) @ hat(X)
    assert maxabs(hat(bracket(X, U)) - comm) < 1e-14


def test_ad_block_structure(rng):
    X = rng.normal(size=6)
    A = ad(X)
    assert np.array_equal(A[:3, 3:], np.zeros((3, 3)))
    assert np.array_equal(A[:3, :3], skew(X[:3]))
    assert np.array_equal(A[3:, :3], skew(X[3:]))


def test_ad_powers(rng):
    X = rng.normal(size=6)
    P = ad_powers(X, 5)
    assert np.array_equal(P[0], np.eye(6))
    assert maxabs(P[5] - np.linalg.matrix_power(ad(X), 5)) < 1e-12


def test_ad_bar_defining_property(rng):
    assert np.array_equal(ad_bar(np.zeros(6)), np.zeros((6, 6)))
    for _ in range(20):
        X, U = rng.normal(size=6), rng.normal(size=6)
        assert maxabs(ad(X).T @ U - ad_bar(U) @ X) < 1e-14
        B = ad_bar(U)
        assert np.array_equal(B + B.T, np.zeros((6, 6)))


def test_jacobi_identity(rng):
    for _ in range(20):
        X, Z = rng.normal(size=6), rng.normal(size=6)
        assert maxabs(ad(bracket(X, Z)) - (ad(X) @ ad(Z) - ad(Z) @ ad(X))) < 1e-13


def test_characteristic_identity(rng):
    # hat(X)**4 + phi**2 hat(X)**2 = 0 holds; the variant with hat(X)**1 does not
    worst_true, best_false = 0.0, np.inf
    for _ in range(50):
        X = random_screw(rng, 0.1, 3.0)
        Xh = hat(X)
        phi2 = X[:3] @ X[:3]
        X2 = Xh @ Xh
        worst_true = max(worst_true, maxabs(X2 @ X2 + phi2 * X2))
        best_false = min(best_false, maxabs(X2 @ X2 + phi2 * Xh))
    assert worst_true < 1e-12
    assert best_false > 1e-3


def test_adjoint_identity_and_translation(rng):
    assert np.array_equal(adjoint_of_transform(np.eye(4)), np.eye(6))
    r = rng.normal(size=3)
    H = np.eye(4)
    H[:3, 3] = r
    expected = np.eye(6)
    expected[3:, :3] = skew(r)
    assert np.array_equal(adjoint_of_transform(H), expected)


def test_adjoint_is_homomorphism(rng):
    H1, H2 = exp_se3(random_screw(rng)), exp_se3(random_screw(rng))
    lhs = adjoint_of_transform(H1 @ H2)
    assert maxabs(lhs - adjoint_of_transform(H1) @ adjoint_of_transform(H2)) < 1e-13


def test_adjoint_conjugates_hat(rng):
    H, U = exp_se3(random_screw(rng)), rng.normal(size=6)
    assert maxabs(hat(adjoint_of_transform(H) @ U) - H @ hat(U) @ np.linalg.inv(H)) < 1e-13


def test_left_right_trivialization(rng):
    for _ in range(20):
        X = screw_with_norm(rng, rng.uniform(0, 3))
        assert maxabs(dexp(X) - adjoint_of_transform(exp_se3(X)) @ dexp(-X)) < 1e-12
