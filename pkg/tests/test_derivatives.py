import numpy as np
import pytest
from conftest import maxabs, random_screw, screw_with_norm

from se3tangent.algebra import ad, ad_powers
from se3tangent.block import ddexp_block
from se3tangent.derivatives import (
    d2dexp,
    d2P,
    ddexp,
    ddexp_normalized,
    ddexp_series,
    ddexpinv,
    ddexpinv_normalized,
    dP,
    twist_derivatives,
)
from se3tangent.expmap import dexp, dexp_series, dexpinv
from se3tangent.fd import FdScheme, fd_directional, fd_second


def power(i):
    return lambda Y: np.linalg.matrix_power(ad(Y), i)


def test_dP1_is_ad_U(rng):
    X, U = rng.normal(size=6), rng.normal(size=6)
    assert np.array_equal(dP(X, U, 1), ad(U))


def test_dP_vanishes_at_zero(rng):
    U = rng.normal(size=6)
    for i in (2, 3, 4):
        assert np.array_equal(dP(np.zeros(6), U, i), np.zeros((6, 6)))


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_dP_matches_fd(rng, i):
    X, U = rng.normal(size=6), rng.normal(size=6)
    assert maxabs(dP(X, U, i) - fd_directional(power(i), X, U)) < 1e-7


def test_expanded_dP_list_slips(rng):
    # The hand-expanded forms "A U + A U" (i = 2) and "A^2 U + A U A + A U^2"
    # (i = 3) are not derivatives of the powers; the sum formula is.
    X, U = rng.normal(size=6), rng.normal(size=6)
    A, aU = ad(X), ad(U)
    slip2 = A @ aU + A @ aU
    slip3 = A @ A @ aU + A @ aU @ A + A @ aU @ aU
    assert maxabs(slip2 - fd_directional(power(2), X, U)) > 1e-2
    assert maxabs(slip3 - fd_directional(power(3), X, U)) > 1e-2
    assert maxabs(dP(X, U, 2) - (A @ aU + aU @ A)) < 1e-14


def test_d2P2_closed_form(rng):
    X, U, S = (rng.normal(size=6) for _ in range(3))
    assert maxabs(d2P(X, U, S, 2) - (ad(S) @ ad(U) + ad(U) @ ad(S))) < 1e-14


@pytest.mark.parametrize("i", [2, 3, 4])
def test_d2P_matches_fd_and_is_symmetric(rng, i):
    X, U, S = (rng.normal(size=6) for _ in range(3))
    fd = fd_second(power(i), X, U, S, FdScheme(order=2, step=1e-4))
    assert maxabs(d2P(X, U, S, i) - fd) < 1e-5
    assert maxabs(d2P(X, U, S, i) - d2P(X, S, U, i)) < 1e-13


def test_index_errors(rng):
    X = rng.normal(size=6)
    with pytest.raises(ValueError):
        dP(X, X, 5)
    with pytest.raises(ValueError):
        d2P(X, X, X, 1)


def test_ddexp_at_zero(rng):
    U = rng.normal(size=6)
    assert maxabs(ddexp(np.zeros(6), U) - 0.5 * ad(U)) == 0
    assert maxabs(ddexpinv(np.zeros(6), U) + 0.5 * ad(U)) == 0


@pytest.mark.parametrize("inverse", [False, True])
def test_ddexp_matches_fd_and_block(rng, inverse):
    X, U = screw_with_norm(rng, 1.2), rng.normal(size=6)
    M = dexpinv if inverse else dexp
    D = ddexp(X, U, inverse=inverse)
    assert maxabs(D - fd_directional(M, X, U)) < 1e-8
    assert maxabs(D - ddexp_block(X, U, inverse)) < 1e-12


def test_ddexp_linear_in_direction(rng):
    X, U1, U2 = (rng.normal(size=6) for _ in range(3))
    a, b = 0.7, -1.9
    for inv in (False, True):
        lhs = ddexp(X, a * U1 + b * U2, inverse=inv)
        rhs = a * ddexp(X, U1, inverse=inv) + b * ddexp(X, U2, inverse=inv)
        assert maxabs(lhs - rhs) < 1e-13


def test_derivative_of_inverse_pair(rng):
    for _ in range(100):
        X, U = random_screw(rng), rng.normal(size=6)
        res = ddexp(X, U) @ dexpinv(X) + dexp(X) @ ddexpinv(X, U)
        assert maxabs(res) < 1e-11


def test_normalized_derivative_forms(rng):
    for phi in (1e-2, 0.8, 2.9):
        X, U = screw_with_norm(rng, phi), rng.normal(size=6)
        assert maxabs(ddexp_normalized(X, U) - ddexp(X, U)) < 1e-10
        assert maxabs(ddexpinv_normalized(X, U) - ddexpinv(X, U)) < 1e-10


def test_series_consistency_small_rotation(rng):
    X, U = screw_with_norm(rng, 1e-2), rng.normal(size=6)
    for inv in (False, True):
        assert maxabs(ddexp(X, U, inverse=inv) - ddexp_series(X, U, 8, inv)) < 1e-14


def test_d2dexp_at_zero(rng):
    U, S = rng.normal(size=6), rng.normal(size=6)
    base = ad(S) @ ad(U) + ad(U) @ ad(S)
    assert maxabs(d2dexp(np.zeros(6), U, S) - base / 6) < 1e-15
    assert maxabs(d2dexp(np.zeros(6), U, S, inverse=True) - base / 12) < 1e-15


@pytest.mark.parametrize("inverse", [False, True])
def test_d2dexp_matches_fd_and_is_symmetric(rng, inverse):
    for _ in range(5):
        X, U, S = random_screw(rng, 0.05, 3.0), rng.normal(size=6), rng.normal(size=6)
        M = dexpinv if inverse else dexp
        D2 = d2dexp(X, U, S, inverse=inverse)
        assert maxabs(D2 - fd_second(M, X, U, S)) < 1e-5
        assert maxabs(D2 - d2dexp(X, S, U, inverse=inverse)) < 1e-13


def test_d2dexp_small_rotation_is_finite(rng):
    X, U, S = screw_with_norm(rng, 1e-9), rng.normal(size=6), rng.normal(size=6)
    for inv in (False, True):
        D2 = d2dexp(X, U, S, inverse=inv)
        D20 = d2dexp(np.concatenate([np.zeros(3), X[3:]]), U, S, inverse=inv)
        assert maxabs(D2 - D20) < 1e-7


def test_twist_derivatives_trivial():
    z = np.zeros(6)
    for v in twist_derivatives(z, z, z, z):
        assert np.array_equal(v, z)


def test_twist_derivatives_translation():
    c = np.array([0.0, 0.0, 0.0, 1.0, -2.0, 0.5])
    V, Vd, Vdd = twist_derivatives(0.3 * c, c, np.zeros(6), np.zeros(6))
    assert np.array_equal(V, c)
    assert maxabs(Vd) == 0 and maxabs(Vdd) == 0


def test_twist_derivatives_match_fd(rng):
    c = [rng.normal(size=6) * 0.6 for _ in range(4)]
    X = lambda t: c[0] + c[1] * t + c[2] * t**2 + c[3] * t**3  # noqa: E731
    Xd = lambda t: c[1] + 2 * c[2] * t + 3 * c[3] * t**2  # noqa: E731
    Xdd = lambda t: 2 * c[2] + 6 * c[3] * t  # noqa: E731
    Xddd = lambda t: 6 * c[3]  # noqa: E731
    V = lambda t: twist_derivatives(X(t), Xd(t), Xdd(t), Xddd(t))[0]  # noqa: E731
    t, h = 0.2, 1e-3
    _, Vd, Vdd = twist_derivatives(X(t), Xd(t), Xdd(t), Xddd(t))
    fd1 = (-V(t + 2 * h) + 8 * V(t + h) - 8 * V(t - h) + V(t - 2 * h)) / (12 * h)
    fd2 = (-V(t + 2 * h) + 16 * V(t + h) - 30 * V(t) + 16 * V(t - h) - V(t - 2 * h)) / (12 * h * h)
    assert maxabs(Vd - fd1) < 1e-6
    assert maxabs(Vdd - fd2) < 1e-6
    assert maxabs(V(t) - dexp(X(t)) @ Xd(t)) < 1e-15


def test_powers_used_consistently(rng):
    X = rng.normal(size=6)
    P = ad_powers(X, 4)
    assert maxabs(P[4] - power(4)(X)) < 1e-12


def test_inverse_series_needs_more_terms_near_rotation_three():
    # the dexp^-1 series converges only for |x| < 2 pi; at |x| = 3 the terms
    # decay like (3 / 2 pi)**i, so 30 terms leave about 1e-9 while 60 reach rounding
    rng = np.random.default_rng(20240611)
    worst30, worst60 = 0.0, 0.0
    for _ in range(1000):
        X, U = random_screw(rng, 1e-3, 3.0), rng.normal(size=6)
        for inv in (False, True):
            D = ddexp(X, U, inverse=inv)
            worst60 = max(worst60, maxabs(D - ddexp_series(X, U, 60, inv)))
            worst60 = max(worst60, maxabs((dexpinv(X) if inv else dexp(X)) - dexp_series(X, 60, inv)))
        worst30 = max(worst30, maxabs(ddexp(X, U, inverse=True) - ddexp_series(X, U, 30, True)))
    assert worst60 < 1e-12
    assert worst30 > 1e-10
