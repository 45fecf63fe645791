"""se(3) algebra in screw coordinates ``X = (x, y)``.

``x`` is the rotational and ``y`` the translational part.  ``ad_X`` is the 6x6
matrix of the Lie bracket, ``ad_X @ U == [X, U]``.
"""

from __future__ import annotations

import numpy as np

from .so3 import as_vector, skew, unskew


def as_screw(X, name="X"):
    return as_vector(X, 6, name)


def hat(X):
    """4x4 matrix representation of a twist."""
    X = as_screw(X)
    m = np.zeros((4, 4))
    m[:3, :3] = skew(X[:3])
    m[:3, 3] = X[3:]
    return m


def vee(m):
    """Inverse of :func:`hat`."""
    m = np.asarray(m, dtype=float)
    return np.concatenate([unskew(m[:3, :3]), m[:3, 3]])


def ad(X):
    """Adjoint matrix ``[[x~, 0], [y~, x~]]``."""
    X = as_screw(X)
    xs = skew(X[:3])
    out = np.zeros((6, 6))
    out[:3, :3] = xs
    out[3:, 3:] = xs
    out[3:, :3] = skew(X[3:])
    return out


def ad_bar(U):
    """Matrix with ``ad(X).T @ U == ad_bar(U) @ X`` for all ``X``."""
    U = as_screw(U, "U")
    us, vs = skew(U[:3]), skew(U[3:])
    out = np.zeros((6, 6))
    out[:3, :3] = us
    out[:3, 3:] = vs
    out[3:, :3] = vs
    return out


def bracket(X, U):
    return ad(X) @ as_screw(U, "U")


def ad_powers(X, n):
    """``[I, ad_X, ad_X**2, ..., ad_X**n]``."""
    A = ad(X)
    out = [np.eye(6)]
    for _ in range(n):
        out.append(A @ out[-1])
    return out


def rotation_norm(X):
    """Norm of the rotational part, which sets the scalar kernels."""
    return float(np.linalg.norm(as_screw(X)[:3]))


def adjoint_of_transform(H):
    """Adjoint ``[[R, 0], [r~ R, R]]`` of a homogeneous transform ``(R, r)``."""
    H = np.asarray(H, dtype=float)
    if H.shape != (4, 4):
        raise ValueError(f"H must be 4x4, got shape {H.shape}")
    R, r = H[:3, :3], H[:3, 3]
    out = np.zeros((6, 6))
    out[:3, :3] = R
    out[3:, 3:] = R
    out[3:, :3] = skew(r) @ R
    return out
