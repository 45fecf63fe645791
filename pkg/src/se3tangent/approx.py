"""Truncated-series approximations of dexp, dexp^-1 and their derivatives.

An approximation of order ``k`` keeps every series term of polynomial degree
``<= k`` in ``X``.  For the maps themselves that is ``ad_X**i`` with ``i <= k``,
for first derivatives ``D P_i`` with ``i <= k + 1`` and for second derivatives
``D^2 P_i`` with ``i <= k + 2``.  The weights are ``1/(i+1)!`` for dexp and
``B_i/i!`` for dexp^-1; since odd Bernoulli numbers beyond ``B_1`` vanish, some
orders of the inverse family coincide with the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ad_powers, as_screw, rotation_norm
from .derivatives import d2dexp, d2P_list, ddexp, dP_list
from .expmap import dexp, dexp_weights, dexpinv
from .jacobians import hbar_terms, hessian_eval, jac_eval, jac_terms, jac_terms_transposed

MAX_ORDER = 8

# For the inverse family an even order k >= 2 of a first derivative is the
# same truncation as order k - 1 and is accepted as an alias.  For second
# derivatives the odd orders would only repeat the previous one; they are
# rejected because no such approximation exists.


def _weights(n, inverse):
    return [float(w) for w in dexp_weights(n, inverse)]


def _check_order(k, inverse, second=False):
    if not isinstance(k, (int, np.integer)) or k < 0 or k > MAX_ORDER:
        raise ValueError(f"order must be an integer in 0..{MAX_ORDER}, got {k!r}")
    if inverse and second and k % 2 == 1:
        raise ValueError(
            f"order {k} does not exist for second derivatives of dexp^-1 "
            "(the added Bernoulli weight is zero)"
        )
    return int(k)


def dexp_approx(X, k, inverse=False):
    """``sum_{i<=k} w_i ad_X**i``."""
    k = _check_order(k, False)
    X = as_screw(X)
    w = _weights(k, inverse)
    P = ad_powers(X, k)
    return sum(wi * Pi for wi, Pi in zip(w, P))


def ddexp_approx(X, U, k, inverse=False):
    """Order-``k`` approximation of ``(D_X dexp)(U)``."""
    k = _check_order(k, inverse)
    X, U = as_screw(X), as_screw(U, "U")
    n = k + 1
    w = _weights(n, inverse)
    dPU = dP_list(X, U, n)
    return sum(w[i] * dPU[i] for i in range(1, n + 1))


def jac_approx(X, Z, k, kind="dexp"):
    """Order-``k`` approximation of the evaluation-map Jacobian (see ``jac_eval``)."""
    inverse = kind.startswith("dexpinv")
    k = _check_order(k, inverse)
    X, Z = as_screw(X), as_screw(Z, "Z")
    n = k + 1
    w = _weights(n, inverse)
    J = jac_terms_transposed(X, Z, n) if kind.endswith("T") else jac_terms(X, Z, n)
    return sum(w[i] * J[i] for i in range(1, n + 1))


def d2dexp_approx(X, U, S, k, inverse=False):
    """Order-``k`` approximation of ``(D^2_X dexp)(U)(S)``."""
    k = _check_order(k, inverse, second=True)
    X, U, S = as_screw(X), as_screw(U, "U"), as_screw(S, "S")
    n = k + 2
    w = _weights(n, inverse)
    d2 = d2P_list(X, U, S, n)
    return sum(w[i] * d2[i] for i in range(2, n + 1))


def hessian_approx(X, Q, Z, k, kind="dexp"):
    """Order-``k`` approximation of the Hessian of ``Q^T M(X) Z``."""
    inverse = kind == "dexpinv"
    k = _check_order(k, inverse, second=True)
    X, Q, Z = as_screw(X), as_screw(Q, "Q"), as_screw(Z, "Z")
    n = k + 2
    w = _weights(n, inverse)
    Hb = hbar_terms(X, Q, Z, n)
    return sum(w[i] * (Hb[i] + Hb[i].T) for i in range(2, n + 1))


# ---------------------------------------------------------------------------
# switching between closed forms and approximations


@dataclass(frozen=True)
class SwitchPolicy:
    """Use the closed form when ``|x| > epsilon``, else an order-``order`` truncation.

    ``order=None`` selects the default order of each target.  ``naive`` makes
    the closed-form branch evaluate the scalar weights exactly as written,
    without the series kernels.
    """

    epsilon: float = 1e-4
    order: int | None = None
    naive: bool = False

    def __post_init__(self):
        if not (self.epsilon > 0.0 and np.isfinite(self.epsilon)):
            raise ValueError(f"epsilon must be positive and finite, got {self.epsilon}")
        if self.order is not None:
            _check_order(self.order, False)


DEFAULT_POLICY = SwitchPolicy()

# target -> (closed form, approximation, default order, argument count)
_TARGETS = {
    "dexp": (lambda X, naive: dexp(X, naive=naive), lambda X, k: dexp_approx(X, k), 3),
    "dexpinv": (
        lambda X, naive: dexpinv(X, naive=naive),
        lambda X, k: dexp_approx(X, k, inverse=True),
        2,
    ),
    "ddexp": (
        lambda X, U, naive: ddexp(X, U, naive=naive),
        lambda X, U, k: ddexp_approx(X, U, k),
        3,
    ),
    "ddexpinv": (
        lambda X, U, naive: ddexp(X, U, inverse=True, naive=naive),
        lambda X, U, k: ddexp_approx(X, U, k, inverse=True),
        3,
    ),
    "d2dexp": (
        lambda X, U, S, naive: d2dexp(X, U, S, naive=naive),
        lambda X, U, S, k: d2dexp_approx(X, U, S, k),
        2,
    ),
    "d2dexpinv": (
        lambda X, U, S, naive: d2dexp(X, U, S, inverse=True, naive=naive),
        lambda X, U, S, k: d2dexp_approx(X, U, S, k, inverse=True),
        2,
    ),
    "hessian_dexp": (
        lambda X, Q, Z, naive: hessian_eval(X, Q, Z, "dexp", naive=naive),
        lambda X, Q, Z, k: hessian_approx(X, Q, Z, k, "dexp"),
        2,
    ),
    "hessian_dexpinv": (
        lambda X, Q, Z, naive: hessian_eval(X, Q, Z, "dexpinv", naive=naive),
        lambda X, Q, Z, k: hessian_approx(X, Q, Z, k, "dexpinv"),
        2,
    ),
}
for _kind in ("dexp", "dexpinv", "dexpT"):
    _TARGETS["jac_" + _kind] = (
        (lambda kind: lambda X, Z, naive: jac_eval(X, Z, kind, naive=naive))(_kind),
        (lambda kind: lambda X, Z, k: jac_approx(X, Z, k, kind))(_kind),
        3,
    )

TARGETS = tuple(_TARGETS)
_SECOND_ORDER_TARGETS = ("d2dexp", "d2dexpinv", "hessian_dexp", "hessian_dexpinv")


def default_order(target):
    return _TARGETS[target][2]


def robust_eval(target, X, *args, policy=DEFAULT_POLICY):
    """Evaluate ``target`` at ``X`` (plus its extra arguments) under ``policy``."""
    if target not in _TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    exact, approx, k_default = _TARGETS[target]
    k = k_default if policy.order is None else policy.order
    _check_order(k, target.endswith("inv"), second=target in _SECOND_ORDER_TARGETS)
    X = as_screw(X)
    if rotation_norm(X) > policy.epsilon:
        return exact(X, *args, policy.naive)
    return approx(X, *args, k)

