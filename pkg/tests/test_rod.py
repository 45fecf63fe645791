import numpy as np
import pytest
from conftest import maxabs

from se3tangent.approx import SwitchPolicy
from se3tangent.derivatives import ddexp
from se3tangent.expmap import exp_se3, log_se3
from se3tangent.fd import fd_directional, fd_hessian, fd_jacobian
from se3tangent.rod import (
    STRAIGHT_CHI,
    RodConfig,
    build_reference,
    deformation,
    deformation_jacobian,
    deformation_rates,
    direct_strain,
    potential,
    potential_gradient,
    potential_hessian,
    prescribed_displacement,
    reference_rod,
    stiffness,
    switch_boundaries,
    switch_error,
    switch_jump,
)
from se3tangent.so3 import exp_so3


@pytest.fixture(scope="module")
def rod():
    return reference_rod()


def _rates_fd(rod, tau, h=1e-3):
    c = (4 / 5, -1 / 5, 4 / 105, -1 / 280)

    def chi(t):
        X, Xp = rod.screw_derivatives(t)[:2]
        return deformation(X, Xp)

    def d(f, t):
        return sum(ck * (f(t + (k + 1) * h) - f(t - (k + 1) * h)) for k, ck in enumerate(c)) / h

    return d(chi, tau), d(lambda t: d(chi, t), tau)


def test_stiffness_default():
    K = stiffness()
    expected = np.array([0.3 * 8**4 / 6, 10 * 8**4 / 12, 10 * 8**4 / 12, 640.0, 19.2, 19.2]) / 100
    assert maxabs(np.diag(K) - expected) < 1e-12
    assert maxabs(K - np.diag(np.diag(K))) == 0.0


def test_rectangular_section():
    cfg = RodConfig(width=2.0, height=4.0)
    assert cfg.iyy == pytest.approx(2 * 64 / 12)
    assert cfg.izz == pytest.approx(4 * 8 / 12)
    assert cfg.jx == pytest.approx(cfg.iyy + cfg.izz)


@pytest.mark.parametrize("field", ["length", "width", "height", "youngs", "shear"])
def test_config_validation(field):
    with pytest.raises(ValueError):
        RodConfig(**{field: 0.0})
    with pytest.raises(ValueError):
        RodConfig(**{field: float("nan")})


def test_prescribed_displacement():
    x, rho = prescribed_displacement(0.25)
    assert maxabs(x - [0.5, 0.5 * np.cos(np.pi / 4), 0.5]) < 1e-15
    assert np.linalg.norm(rho) == pytest.approx(1.0)
    x0, rho0 = prescribed_displacement(0.0)
    assert maxabs(rho0 - [1, 0, 0]) < 1e-15
    for bad in (-1e-9, 1.0 + 1e-9):
        with pytest.raises(ValueError):
            prescribed_displacement(bad)


def test_reference_screw_vanishing_rotation_at_midpoint(rod):
    assert np.linalg.norm(rod.screw(0.5)[:3]) < 1e-13
    assert np.linalg.norm(rod.screw(0.25)[:3]) > 0.1


def test_reference_round_trip(rod):
    for tau in np.linspace(0, 1, 11):
        assert maxabs(exp_se3(rod.screw(tau)) - rod.transform(tau)) < 1e-10
        assert maxabs(rod.transform(tau)[:3, :3] - exp_so3(prescribed_displacement(tau)[0])) < 1e-15
    assert maxabs(rod.position(0.0)) < 1e-14


def test_position_derivative_is_rotated_strain(rod):
    for tau in (0.1, 0.5, 0.9):
        dr = fd_directional(lambda t: rod.position(t[0]), np.array([tau]), np.array([1.0]))
        x, rho = prescribed_displacement(tau)
        assert maxabs(dr - exp_so3(x) @ rho) < 1e-9


def test_build_reference(rod):
    grid = [0.0, 0.3, 1.0]
    out = build_reference(grid)
    assert len(out) == 3 and all(len(o) == 4 for o in out)
    assert maxabs(out[1][0] - rod.screw(0.3)) == 0.0
    with pytest.raises(ValueError):
        build_reference([0.5, 0.2])
    with pytest.raises(ValueError):
        build_reference([0.0, 1.5])


def test_straight_rod():
    for c in (0.5, 2.0):
        X, Xp = np.zeros(6), np.array([0, 0, 0, c, 0, 0.0])
        # X(tau) = tau * Xp is a straight rod stretched by c
        for tau in (0.0, 0.7):
            assert maxabs(deformation(tau * Xp, Xp) - Xp) < 1e-15
            rates = deformation_rates(tau * Xp, Xp, np.zeros(6), np.zeros(6))
            assert maxabs(rates[0]) < 1e-15 and maxabs(rates[1]) < 1e-15
    assert potential(np.zeros(6), STRAIGHT_CHI) == 0.0


def test_deformation_matches_direct_strain(rod):
    for tau in (0.1, 0.25, 0.5, 0.8):
        X, Xp = rod.screw_derivatives(tau)[:2]
        assert maxabs(deformation(X, Xp) - direct_strain(tau)) < 1e-8


def test_uniform_helix_constant_strain():
    chi = np.array([0.2, -0.1, 0.3, 1.0, 0.1, 0.0])
    for tau in (0.3, 1.7):
        assert maxabs(deformation(tau * chi, chi) - chi) < 1e-14


def test_rates_match_fd(rod):
    for tau in (0.3, 0.5):
        args = rod.screw_derivatives(tau)
        dchi, ddchi = deformation_rates(*args)
        fd1, fd2 = _rates_fd(rod, tau)
        assert maxabs(dchi - fd1) < 1e-6
        assert maxabs(ddchi - fd2) < 1e-4
        assert maxabs(dchi - rod.strain_rate_reference(tau)) < 1e-6


def test_gradient_and_hessian_match_fd(rod):
    for tau in (0.2, 0.5 + 1e-3):
        X, Xp = rod.screw_derivatives(tau)[:2]
        g = potential_gradient(X, Xp)
        H = potential_hessian(X, Xp)
        fd_g = fd_jacobian(lambda Y: np.atleast_1d(potential(Y, Xp)), X)[0]
        assert maxabs(g - fd_g) < 1e-5 * max(1.0, maxabs(g))
        assert maxabs(H - fd_hessian(lambda Y: potential(Y, Xp), X)) < 1e-5 * max(1.0, maxabs(H))
        assert maxabs(H - fd_jacobian(lambda Y: potential_gradient(Y, Xp), X)) < 1e-6 * max(1.0, maxabs(H))


def test_equilibrium_when_chi_equals_chi0(rod):
    X, Xp = rod.screw_derivatives(0.4)[:2]
    chi0 = deformation(X, Xp)
    assert maxabs(potential_gradient(X, Xp, chi0=chi0)) < 1e-12
    H = potential_hessian(X, Xp, chi0=chi0)
    assert np.linalg.eigvalsh(H).min() > -1e-10


def test_deformation_jacobian_columns(rod):
    # column j of d chi / dX is -(D_{-X} dexp)(e_j) X'
    X, Xp = rod.screw_derivatives(0.15)[:2]
    J = deformation_jacobian(X, Xp)
    cols = np.column_stack([-ddexp(-X, e) @ Xp for e in np.eye(6)])
    assert maxabs(J - cols) < 1e-11


def test_deformation_left_invariant(rod):
    # moving the whole rod rigidly leaves chi unchanged
    G = exp_se3(np.array([0.3, -1.2, 0.8, 5.0, -2.0, 1.0]))
    tau, h = 0.35, 1e-3
    logs = lambda t: log_se3(G @ rod.transform(t))  # noqa: E731
    Xg = logs(tau)
    c = (4 / 5, -1 / 5, 4 / 105, -1 / 280)
    Xg_p = sum(ck * (logs(tau + (k + 1) * h) - logs(tau - (k + 1) * h)) for k, ck in enumerate(c)) / h
    X, Xp = rod.screw_derivatives(tau)[:2]
    assert maxabs(deformation(Xg, Xg_p) - deformation(X, Xp)) < 1e-8


def test_naive_evaluation_breaks_at_midpoint(rod):
    args = rod.screw_derivatives(0.5)
    naive = deformation_rates(*args, naive=True)[0]
    robust = deformation_rates(*args)[0]
    assert maxabs(naive - robust) > 1e-1
    assert maxabs(robust - rod.strain_rate_reference(0.5)) < 1e-8


def test_switch_boundaries():
    lo, hi = switch_boundaries(1e-3)
    assert lo < 0.5 < hi
    assert np.linalg.norm(prescribed_displacement(lo)[0]) == pytest.approx(1e-3, rel=1e-12)
    with pytest.raises(ValueError):
        switch_boundaries(0.0)


def test_switch_jump_shrinks_with_order():
    q = lambda *a: deformation_rates(*a[:4], policy=a[4])[0]  # noqa: E731
    jumps = [switch_jump(q, SwitchPolicy(epsilon=1e-2, order=k)) for k in (0, 1, 2)]
    assert jumps[0] > jumps[1] > jumps[2]


def test_switch_error_profile():
    taus = np.array([0.3, 0.5, 0.7])
    err = switch_error(taus, 1e-2, 2)
    assert err.shape == (3,)
    assert np.all(err < 1e-6)
    coarse = switch_error(np.array([0.5]), 1e-2, 0)
    assert coarse[0] > err[1]
