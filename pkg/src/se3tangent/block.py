"""3x3 block form of exp, dexp, dexp^-1 and their first derivatives on SE(3).

This is a second, independent route to the same quantities as
:mod:`se3tangent.expmap` and :mod:`se3tangent.derivatives`: it works with the
semidirect-product blocks ``[[A, 0], [B, A]]`` where ``A`` is the SO(3)
differential and ``B`` its directional derivative along the translation part.
It exists for cross-validation.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .algebra import as_screw
from .so3 import as_vector, dexp_so3, dexpinv_so3, exp_so3, skew


def _assemble(diag, offdiag):
    out = np.zeros((6, 6))
    out[:3, :3] = diag
    out[3:, 3:] = diag
    out[3:, :3] = offdiag
    return out


def exp_block(X):
    """``exp`` with translation ``((I - R) x~ y + (x.y) x) / |x|^2``."""
    X = as_screw(X)
    x, y = X[:3], X[3:]
    H = np.eye(4)
    phi2 = x @ x
    if phi2 == 0.0:
        H[:3, 3] = y
        return H
    R = exp_so3(x)
    H[:3, :3] = R
    H[:3, 3] = ((np.eye(3) - R) @ skew(x) @ y + (x @ y) * x) / phi2
    return H


def ddexp_so3_block(x, y, inverse=False):
    """Directional derivative of ``dexp_so3`` (or its inverse) at ``x`` along ``y``."""
    x, y = as_vector(x, 3, "x"), as_vector(y, 3, "y")
    phi = np.linalg.norm(x)
    xs, ys = skew(x), skew(y)
    sym = xs @ ys + ys @ xs
    xy = x @ y
    k = kernels.block_coeffs(phi)
    if inverse:
        return -0.5 * ys + k["so3_dexpinv_quad"] * sym + xy * k["blk_inv_quad"] * (xs @ xs)
    b = kernels.base_coeffs(phi)
    return (
        0.5 * b.beta * ys
        + b.delta * sym
        + xy * k["blk_alpha_beta"] * xs
        + xy * k["blk_beta_delta"] * (xs @ xs)
    )


def dexp_block(X, inverse=False):
    X = as_screw(X)
    x, y = X[:3], X[3:]
    diag = dexpinv_so3(x) if inverse else dexp_so3(x)
    return _assemble(diag, ddexp_so3_block(x, y, inverse))


def _d_offdiag(X, U, inverse):
    # derivative of the off-diagonal block (D_x dexp)(y) along U = (u, v)
    x, y, u, v = X[:3], X[3:], U[:3], U[3:]
    phi = np.linalg.norm(x)
    xs, ys, us, vs = skew(x), skew(y), skew(u), skew(v)
    x2 = xs @ xs
    xy, xu, mixed = x @ y, x @ u, x @ v + y @ u
    k = kernels.block_coeffs(phi)
    cross = xs @ vs + vs @ xs + ys @ us + us @ ys
    sym_xy = xs @ ys + ys @ xs
    sym_xu = xs @ us + us @ xs
    if inverse:
        return (
            -0.5 * vs
            + k["so3_dexpinv_quad"] * cross
            + xu * k["blk_inv_dquad"] * sym_xy
            + k["blk_inv_quad"] * (xy * sym_xu + mixed * x2)
            + xy * xu * k["blk_inv_ddquad"] * x2
        )
    b = kernels.base_coeffs(phi)
    return (
        0.5 * b.beta * vs
        + k["blk_alpha_beta"] * (xu * ys + mixed * xs + xy * us)
        + b.delta * cross
        + k["blk_beta_delta"] * (xy * sym_xu + xu * sym_xy + mixed * x2)
        + xy * xu * (k["blk_xx_lin"] * xs + k["blk_xx_quad"] * x2)
    )


def ddexp_block(X, U, inverse=False):
    """``(D_X dexp)(U)`` (or of dexp^-1) assembled from 3x3 blocks."""
    X, U = as_screw(X), as_screw(U, "U")
    return _assemble(ddexp_so3_block(X[:3], U[:3], inverse), _d_offdiag(X, U, inverse))
