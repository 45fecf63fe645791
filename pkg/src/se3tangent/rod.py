"""Kinematics and elastic potential of a Cosserat rod with prescribed displacement.

The rod is parameterized by normalized arc length ``tau`` in [0, 1].  Its
cross-section frames ``H(tau) = (R, r)`` follow from a prescribed rotation
vector field ``x(tau)`` and translational strain ``rho(tau)``:
``R = exp_so3(x)`` and ``r' = R rho`` with ``r(0) = 0``.  The screw
coordinates ``X(tau) = log(H(tau))`` then define the deformation measure
``chi = dexp(-X) X'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Chebyshev
from numpy.polynomial import chebyshev as cheb
from scipy.optimize import brentq

from .algebra import as_screw, rotation_norm
from .approx import SwitchPolicy, robust_eval
from .derivatives import d2dexp, ddexp
from .expmap import dexp, log_se3
from .jacobians import hessian_eval, jac_eval
from .so3 import exp_so3, unskew

STRAIGHT_CHI = np.array([0.0, 0.0, 0.0, 1.0, 0.0, 0.0])


@dataclass(frozen=True)
class RodConfig:
    """Rectangular cross-section rod; lengths in mm, moduli in MPa (N/mm^2)."""

    length: float = 100.0
    width: float = 8.0
    height: float = 8.0
    youngs: float = 10.0
    shear: float = 0.3

    def __post_init__(self):
        for name in ("length", "width", "height", "youngs", "shear"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")

    @property
    def area(self):
        return self.width * self.height

    @property
    def iyy(self):
        return self.width * self.height**3 / 12.0

    @property
    def izz(self):
        return self.height * self.width**3 / 12.0

    @property
    def jx(self):
        # polar area moment of the section
        return self.iyy + self.izz


def stiffness(cfg=RodConfig()):
    """``K = diag(G Jx, E Iyy, E Izz, E A, G A, G A) / L``."""
    E, G = cfg.youngs, cfg.shear
    d = [G * cfg.jx, E * cfg.iyy, E * cfg.izz, E * cfg.area, G * cfg.area, G * cfg.area]
    return np.diag(d) / cfg.length


def _fields(tau):
    s2 = math.sin(2.0 * math.pi * tau)
    x = np.array([0.5 * s2, 0.5 * math.cos(math.pi * tau), 0.5 * s2])
    a = 0.1 * s2
    rho = np.array([math.cos(a), math.sin(a) * math.cos(s2), math.sin(a) * math.sin(s2)])
    return x, rho


def prescribed_displacement(tau):
    """Rotation vector ``x(tau)`` and translational strain ``rho(tau)``."""
    tau = float(tau)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    return _fields(tau)


def rotation(tau):
    return exp_so3(_fields(tau)[0])


# The prescribed fields are analytic, so the interpolants live on a padded
# interval; this keeps the endpoint growth of high derivatives away from [0, 1].
_FIT_DOMAIN = (-0.25, 1.25)


def _cheb_fit(fun, degree):
    a, b = _FIT_DOMAIN
    t = a + 0.5 * (b - a) * (cheb.chebpts1(degree + 1) + 1.0)
    vals = np.array([fun(ti) for ti in t])
    return [Chebyshev.fit(t, vals[:, k], degree, domain=list(_FIT_DOMAIN)) for k in range(vals.shape[1])]


class ReferenceRod:
    """Reference configuration ``H(tau)`` and its screw coordinates.

    ``r(tau)`` is the integral of a Chebyshev interpolant of ``R rho``, and
    ``X(tau) = log(H(tau))`` is again interpolated, so that its first three
    derivatives come from differentiating the interpolant.  With the default
    degree the interpolants are accurate to rounding level.
    """

    def __init__(self, degree=96):
        self.degree = degree
        self._r = [
            p.integ(lbnd=0.0)
            for p in _cheb_fit(lambda t: exp_so3(_fields(t)[0]) @ _fields(t)[1], degree)
        ]
        self._X = _cheb_fit(lambda t: log_se3(self.transform(t)), degree)
        self._dX = [[p.deriv(m) for p in self._X] for m in (1, 2, 3)]
        self._chi_direct = None

    def position(self, tau):
        return np.array([p(tau) for p in self._r])

    def transform(self, tau):
        H = np.eye(4)
        H[:3, :3] = exp_so3(_fields(tau)[0])
        H[:3, 3] = self.position(tau)
        return H

    def screw(self, tau):
        return np.array([p(tau) for p in self._X])

    def screw_derivatives(self, tau):
        """``(X, X', X'', X''')`` at ``tau``."""
        out = [self.screw(tau)]
        for ps in self._dX:
            out.append(np.array([p(tau) for p in ps]))
        return tuple(out)

    def strain_rate_reference(self, tau):
        """``chi'`` from differentiating an interpolant of :func:`direct_strain`.

        This never touches ``dexp`` and so serves as an independent reference.
        """
        if self._chi_direct is None:
            self._chi_direct = [p.deriv() for p in _cheb_fit(direct_strain, self.degree)]
        return np.array([p(tau) for p in self._chi_direct])


_REFERENCE_CACHE = {}


def reference_rod(degree=96):
    """Shared :class:`ReferenceRod` instance (construction takes a fraction of a second)."""
    if degree not in _REFERENCE_CACHE:
        _REFERENCE_CACHE[degree] = ReferenceRod(degree)
    return _REFERENCE_CACHE[degree]


def build_reference(grid, degree=96):
    """``[(X, X', X'', X'''), ...]`` for every ``tau`` in the sorted ``grid``."""
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or np.any(np.diff(grid) < 0) or grid.min() < 0 or grid.max() > 1:
        raise ValueError("grid must be a sorted sequence in [0, 1]")
    rod = reference_rod(degree)
    return [rod.screw_derivatives(t) for t in grid]


def direct_strain(tau, h=1e-3):
    """``chi = (unskew(R^T R'), rho)`` with ``R'`` from an 8th-order central difference."""
    c = (4 / 5, -1 / 5, 4 / 105, -1 / 280)
    dR = sum(ck * (rotation(tau + (k + 1) * h) - rotation(tau - (k + 1) * h)) for k, ck in enumerate(c))
    dR /= h
    return np.concatenate([unskew(rotation(tau).T @ dR), _fields(tau)[1]])


# ---------------------------------------------------------------------------
# deformation and its tau-derivatives


def _ops(policy, naive):
    """Return (dexp, ddexp, d2dexp) evaluators honouring an optional switch policy."""
    if policy is None:
        return (
            lambda X: dexp(X, naive=naive),
            lambda X, U: ddexp(X, U, naive=naive),
            lambda X, U, S: d2dexp(X, U, S, naive=naive),
        )
    return (
        lambda X: robust_eval("dexp", X, policy=policy),
        lambda X, U: robust_eval("ddexp", X, U, policy=policy),
        lambda X, U, S: robust_eval("d2dexp", X, U, S, policy=policy),
    )


def deformation(X, Xp, policy: SwitchPolicy | None = None, naive=False):
    """``chi = dexp(-X) X'`` (body-fixed deformation measure)."""
    X, Xp = as_screw(X), as_screw(Xp, "Xp")
    T, _, _ = _ops(policy, naive)
    return T(-X) @ Xp


def deformation_rates(X, Xp, Xpp, Xppp, policy: SwitchPolicy | None = None, naive=False):
    """``(chi', chi'')`` along the rod.

    Derivatives of ``dexp(-X)`` with respect to ``tau`` pick up a sign for
    every directional derivative taken at ``-X``.
    """
    X, Xp, Xpp, Xppp = (as_screw(v) for v in (X, Xp, Xpp, Xppp))
    T, D1, D2 = _ops(policy, naive)
    Y = -X
    D1p = D1(Y, Xp)
    chi_p = T(Y) @ Xpp - D1p @ Xp
    chi_pp = T(Y) @ Xppp - 2.0 * D1p @ Xpp - D1(Y, Xpp) @ Xp + D2(Y, Xp, Xp) @ Xp
    return chi_p, chi_pp


def deformation_jacobian(X, Xp, policy: SwitchPolicy | None = None, naive=False):
    """``d chi / d X`` with ``X'`` held fixed: ``-jac(-X, X')``."""
    X, Xp = as_screw(X), as_screw(Xp, "Xp")
    if policy is None:
        return -jac_eval(-X, Xp, "dexp", naive=naive)
    return -robust_eval("jac_dexp", -X, Xp, policy=policy)


def _deformation_hessian_form(X, Xp, a, policy, naive):
    # Hessian of X -> a^T dexp(-X) X'; the two sign flips cancel
    if policy is None:
        return hessian_eval(-X, a, Xp, "dexp", naive=naive)
    return robust_eval("hessian_dexp", -X, a, Xp, policy=policy)


def potential(X, Xp, chi0=STRAIGHT_CHI, K=None, policy=None, naive=False):
    """Strain energy density ``0.5 (chi - chi0)^T K (chi - chi0)``."""
    K = stiffness() if K is None else np.asarray(K, dtype=float)
    e = deformation(X, Xp, policy, naive) - chi0
    return 0.5 * e @ K @ e


def potential_gradient(X, Xp, chi0=STRAIGHT_CHI, K=None, policy=None, naive=False):
    """Gradient of :func:`potential` with respect to ``X``."""
    K = stiffness() if K is None else np.asarray(K, dtype=float)
    e = deformation(X, Xp, policy, naive) - chi0
    return deformation_jacobian(X, Xp, policy, naive).T @ (K @ e)


def potential_hessian(X, Xp, chi0=STRAIGHT_CHI, K=None, policy=None, naive=False):
    """Hessian of :func:`potential` with respect to ``X``."""
    K = stiffness() if K is None else np.asarray(K, dtype=float)
    X, Xp = as_screw(X), as_screw(Xp, "Xp")
    a = K @ (deformation(X, Xp, policy, naive) - chi0)
    J = deformation_jacobian(X, Xp, policy, naive)
    H = J.T @ K @ J + _deformation_hessian_form(X, Xp, a, policy, naive)
    return 0.5 * (H + H.T)


# ---------------------------------------------------------------------------
# the singular point tau = 0.5


def switch_boundaries(epsilon):
    """The two ``tau`` around 0.5 where ``|x(tau)| = epsilon``."""
    if not 0.0 < epsilon < 0.3:
        raise ValueError("epsilon must lie in (0, 0.3)")

    def g(t):
        return float(np.linalg.norm(_fields(t)[0])) - epsilon

    lo = brentq(g, 0.4, 0.5, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    hi = brentq(g, 0.5, 0.6, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return lo, hi


def switch_jump(quantity, policy, degree=96):
    """Largest change of ``quantity`` across the switch boundaries of ``policy``.

    ``quantity(X, X', X'', X''', policy)`` is evaluated at each boundary once
    with the closed-form branch and once with the approximation branch; the
    difference is the discontinuity introduced by switching.
    """
    rod = reference_rod(degree)
    worst = 0.0
    for tb in switch_boundaries(policy.epsilon):
        args = rod.screw_derivatives(tb)
        phi = rotation_norm(args[0])
        outside = SwitchPolicy(epsilon=0.5 * phi, order=policy.order)
        inside = SwitchPolicy(epsilon=2.0 * phi, order=policy.order)
        diff = np.asarray(quantity(*args, outside)) - np.asarray(quantity(*args, inside))
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def switched_strain_rate(tau, policy, degree=96):
    """``chi'`` at ``tau`` of the reference rod, switching according to ``policy``."""
    return deformation_rates(*reference_rod(degree).screw_derivatives(tau), policy=policy)[0]


def switch_error(taus, epsilon, order, degree=96):
    """``|chi'_ref - chi'|`` along ``taus`` with order-``order`` switching below ``epsilon``."""
    rod = reference_rod(degree)
    policy = SwitchPolicy(epsilon=epsilon, order=order)
    return np.array(
        [
            np.linalg.norm(rod.strain_rate_reference(t) - switched_strain_rate(t, policy, degree))
            for t in taus
        ]
    )
