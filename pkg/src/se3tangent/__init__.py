"""Closed forms, series approximations and derivatives of the SE(3) exponential.

The central objects are ``dexp`` (the right-trivialized differential of the
exponential map in screw coordinates), its inverse, their first and second
directional derivatives, and the Jacobians and Hessians of the evaluation
maps ``X -> dexp(X) Z``.  Every closed form is evaluated through scalar
kernels that stay accurate at zero rotation.
"""

from .algebra import ad, ad_bar, ad_powers, adjoint_of_transform, bracket, hat, vee
from .approx import (
    SwitchPolicy,
    d2dexp_approx,
    ddexp_approx,
    dexp_approx,
    hessian_approx,
    jac_approx,
    robust_eval,
)
from .block import ddexp_block, ddexp_so3_block, dexp_block, exp_block
from .derivatives import d2dexp, d2dexpinv, d2P, ddexp, ddexp_series, ddexpinv, dP, twist_derivatives
from .expmap import dexp, dexp_series, dexpinv, exp_se3, log_se3
from .fd import FdScheme, fd_directional, fd_hessian, fd_jacobian, fd_second
from .jacobians import P_ij, hessian_eval, jac_eval
from .kernels import base_coeffs, dexp_coeff_derivs, dexp_coeffs
from .so3 import SingularConfigurationError, dexp_so3, dexpinv_so3, exp_so3, log_so3

__version__ = "0.1.0"

__all__ = [
    "FdScheme",
    "P_ij",
    "SingularConfigurationError",
    "SwitchPolicy",
    "ad",
    "ad_bar",
    "ad_powers",
    "adjoint_of_transform",
    "base_coeffs",
    "bracket",
    "d2P",
    "d2dexp",
    "d2dexp_approx",
    "d2dexpinv",
    "dP",
    "ddexp",
    "ddexp_approx",
    "ddexp_block",
    "ddexp_series",
    "ddexp_so3_block",
    "ddexpinv",
    "dexp",
    "dexp_approx",
    "dexp_block",
    "dexp_coeff_derivs",
    "dexp_coeffs",
    "dexp_series",
    "dexp_so3",
    "dexpinv",
    "dexpinv_so3",
    "exp_block",
    "exp_se3",
    "exp_so3",
    "fd_directional",
    "fd_hessian",
    "fd_jacobian",
    "fd_second",
    "hat",
    "hessian_approx",
    "hessian_eval",
    "jac_approx",
    "jac_eval",
    "log_se3",
    "log_so3",
    "robust_eval",
    "twist_derivatives",
    "vee",
]
