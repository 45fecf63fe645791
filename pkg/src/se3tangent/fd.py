"""Central finite differences used as an independent check of closed-form derivatives."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_STENCILS = {
    2: ((1, 0.5), (-1, -0.5)),
    4: ((2, -1 / 12), (1, 8 / 12), (-1, -8 / 12), (-2, 1 / 12)),
}


@dataclass(frozen=True)
class FdScheme:
    """Central stencil of accuracy ``order`` with step ``step`` (None: automatic)."""

    order: int = 4
    step: float | None = None

    def __post_init__(self):
        if self.order not in _STENCILS:
            raise ValueError(f"order must be 2 or 4, got {self.order}")
        if self.step is not None and not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")


def _step(scheme, X, default):
    if scheme.step is not None:
        return scheme.step
    return default * max(1.0, float(np.linalg.norm(X)))


def fd_directional(fun, X, U, scheme=None):
    """Approximate ``d/dt fun(X + t U)`` at ``t = 0``."""
    scheme = scheme or FdScheme()
    X = np.asarray(X, dtype=float)
    U = np.asarray(U, dtype=float)
    h = _step(scheme, X, 1e-4)
    return sum(c * np.asarray(fun(X + m * h * U)) for m, c in _STENCILS[scheme.order]) / h


def fd_second(fun, X, U, S, scheme=None):
    """Approximate ``d/ds d/dt fun(X + t U + s S)`` at zero by nested differences."""
    scheme = scheme or FdScheme(step=1e-3)
    return fd_directional(lambda Y: fd_directional(fun, Y, U, scheme), X, S, scheme)


def fd_jacobian(fun, X, scheme=None):
    """Jacobian of a vector-valued ``fun``; column ``j`` is the derivative along ``e_j``."""
    X = np.asarray(X, dtype=float)
    E = np.eye(X.size)
    return np.column_stack([fd_directional(fun, X, E[j], scheme) for j in range(X.size)])


def fd_hessian(fun, X, scheme=None):
    """Hessian of a scalar ``fun`` from mixed second differences."""
    scheme = scheme or FdScheme(step=1e-3)
    X = np.asarray(X, dtype=float)
    n = X.size
    E = np.eye(n)
    H = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            H[i, j] = H[j, i] = fd_second(fun, X, E[i], E[j], scheme)
    return H
