"""Scalar kernels shared by the SO(3)/SE(3) tangent operators.

Every coefficient is written once as a rational expression in
``alpha = sinc(phi)``, ``beta = sinc(phi/2)**2``, ``gamma = alpha/beta``,
``delta = (1 - alpha)/phi**2`` and ``t = phi**2``.  The same expression is
evaluated in two ways:

* directly in floating point (the closed form), used for large ``phi``;
* on exact rational power series in ``t``, which yields the Taylor
  coefficients of the coefficient itself.  The truncated series is used for
  small ``phi`` where the closed form suffers from cancellation.

Because the series are produced from the closed-form expression, the two
branches can only disagree by rounding and truncation.  The exact arithmetic
takes most of a second, so the rounded coefficients are shipped in
``_series_table`` (regenerate with ``python tools/generate_series_table.py``); a test
checks the table against the exact series.  Negative powers of
``t`` are checked to cancel exactly, so a formula that is genuinely singular at
``phi = 0`` raises instead of silently producing a wrong series.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi

# number of series terms carried before any division by powers of t
_RAW_TERMS = 50
# number of terms kept for evaluation
_EVAL_TERMS = 42


class BaseCoeffs(NamedTuple):
    alpha: float
    beta: float
    gamma: float
    delta: float


class DexpCoeffs(NamedTuple):
    """Weights of ``ad^i`` in dexp (``a``) and its inverse (``b``)."""

    a1: float
    a2: float
    a3: float
    a4: float
    b1: float
    b2: float
    b4: float


class DexpCoeffDerivs(NamedTuple):
    """Radial derivative factors of the dexp weights.

    ``abar_i`` satisfies ``D a_i(U) = (x.u) abar_i`` and ``abreve_i`` satisfies
    ``D^2 a_i(U)(S) = (s.u) abar_i + (x.u)(x.s) abreve_i``; likewise for ``b``.
    """

    abar1: float
    abar2: float
    abar3: float
    abar4: float
    bbar2: float
    bbar4: float
    abreve1: float
    abreve2: float
    abreve3: float
    abreve4: float
    bbreve2: float
    bbreve4: float


# ---------------------------------------------------------------------------
# exact truncated power series in t


class _Series:
    """Truncated Laurent series in ``t`` with rational coefficients.

    Represents ``sum(c[k] * t**(v + k))`` where only ``len(c)`` coefficients
    are known.  Negative powers may appear in intermediate results; they must
    cancel by the time a kernel is finished.
    """

    __slots__ = ("c", "v")

    def __init__(self, c, v=0):
        self.c = list(c)
        self.v = v

    @property
    def top(self):
        # first power whose coefficient is unknown
        return self.v + len(self.c)

    @staticmethod
    def _lift(other):
        if isinstance(other, _Series):
            return other
        return _Series([Fraction(other)] + [Fraction(0)] * (4 * _RAW_TERMS), 0)

    def coeff(self, k):
        i = k - self.v
        return self.c[i] if 0 <= i < len(self.c) else Fraction(0)

    def __add__(self, other):
        o = self._lift(other)
        v = min(self.v, o.v)
        top = min(self.top, o.top)
        return _Series([self.coeff(k) + o.coeff(k) for k in range(v, top)], v)

    __radd__ = __add__

    def __neg__(self):
        return _Series([-x for x in self.c], self.v)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, _Series):
            f = Fraction(other)
            return _Series([x * f for x in self.c], self.v)
        n = min(len(self.c), len(other.c))
        a, b = self.c, other.c
        return _Series(
            [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)], self.v + other.v
        )

    __rmul__ = __mul__

    def __pow__(self, m):
        out = self._lift(1)
        for _ in range(m):
            out = out * self
        return out

    def _normalized(self):
        for k, x in enumerate(self.c):
            if x != 0:
                return _Series(self.c[k:], self.v + k)
        raise ZeroDivisionError("division by a series with no known nonzero term")

    def __truediv__(self, other):
        if not isinstance(other, _Series):
            f = Fraction(other)
            return _Series([x / f for x in self.c], self.v)
        den = other._normalized()
        num = self.c
        n = min(len(num), len(den.c))
        q = []
        d = den.c
        for k in range(n):
            acc = num[k] - sum(q[i] * d[k - i] for i in range(k))
            q.append(acc / d[0])
        return _Series(q, self.v - den.v)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def regular_part(self):
        """Coefficients of t**0, t**1, ...; negative powers must vanish."""
        for k in range(self.v, 0):
            if self.coeff(k) != 0:
                raise ArithmeticError("expression is singular at phi = 0")
        return [self.coeff(k) for k in range(0, self.top)]


@lru_cache(maxsize=None)
def _base_series(n=_RAW_TERMS):
    fact = [math.factorial(k) for k in range(2 * n + 4)]
    al = _Series([Fraction((-1) ** k, fact[2 * k + 1]) for k in range(n)])
    be = _Series([Fraction(2 * (-1) ** k, fact[2 * k + 2]) for k in range(n)])
    de = _Series([Fraction((-1) ** k, fact[2 * k + 3]) for k in range(n)])
    t = _Series([Fraction(1)] + [Fraction(0)] * (n - 1), 1)
    return al, be, al / be, de, t


# ---------------------------------------------------------------------------
# coefficient formulas; each takes (alpha, beta, gamma, delta, t)

_Formula = Callable[..., object]

_FORMULAS: dict[str, _Formula] = {
    "alpha": lambda al, be, ga, de, t: al,
    "beta": lambda al, be, ga, de, t: be,
    "gamma": lambda al, be, ga, de, t: ga,
    "delta": lambda al, be, ga, de, t: de,
    # dexp / dexpinv weights
    "a1": lambda al, be, ga, de, t: be - al / 2,
    "a2": lambda al, be, ga, de, t: (10 * de - be) / 4,
    "a3": lambda al, be, ga, de, t: (be - al) / (2 * t),
    "a4": lambda al, be, ga, de, t: (6 * de - be) / (4 * t),
    "b1": lambda al, be, ga, de, t: -(1 + 0 * al) / 2,
    "b2": lambda al, be, ga, de, t: (2 - (1 + 3 * al) / (2 * be)) / t,
    "b4": lambda al, be, ga, de, t: (1 - (1 + al) / (2 * be)) / t**2,
    # first radial derivative factors
    "abar1": lambda al, be, ga, de, t: _abar1(al, be, t),
    "abar2": lambda al, be, ga, de, t: _abar2(al, be, t),
    "abar3": lambda al, be, ga, de, t: _abar1(al, be, t) / t,
    "abar4": lambda al, be, ga, de, t: _abar2(al, be, t) / t,
    "bbar2": lambda al, be, ga, de, t: 3 / (4 * t)
    + (ga * (3 + 2 / be + 6 * ga) - 3 / be - 8) / (2 * t**2),
    "bbar4": lambda al, be, ga, de, t: 1 / (4 * t**2)
    + (1 / be + 3 * ga + 2 * ga / be + 2 * ga * ga - 8) / (2 * t**3),
    # second radial derivative factors
    "abreve1": lambda al, be, ga, de, t: (2 * al - 7 * be) / (4 * t)
    + (7 - 23 * al + 16 * be) / (2 * t**2),
    "abreve2": lambda al, be, ga, de, t: be / (4 * t)
    + (20 * al - 43 * be - 2) / (4 * t**2)
    + 75 * (1 - al) / (2 * t**3),
    "abreve3": lambda al, be, ga, de, t: (2 * al - 9 * be) / (4 * t**2)
    + (9 - 33 * al + 24 * be) / (2 * t**3),
    "abreve4": lambda al, be, ga, de, t: be / (4 * t**2)
    + (24 * al - 2 - 57 * be) / (4 * t**3)
    + 105 * (1 - al) / (2 * t**4),
    "bbreve2": lambda al, be, ga, de, t: (
        16
        + 1 / (be * be)
        + (16 / be - 9) * ga / 2
        - (9 + 4 / be) * ga * ga
        - 12 * ga**3
        + 9 / (2 * be)
    )
    / t**3
    - (9 + 12 * ga + 2 / be) / (4 * t**2),
    "bbreve4": lambda al, be, ga, de, t: (
        24 - 2 / be - (15 + 8 / be) * ga / 2 - (11 + 6 / be) * ga * ga / 2 - 2 * ga**3
    )
    / t**4
    - (11 + 2 / be + 4 * ga) / (8 * t**3),
    # scalars of the 3x3 block form of the SE(3) exponential and its derivatives
    "so3_dexp_quad": lambda al, be, ga, de, t: (1 - al) / t,
    "so3_dexpinv_quad": lambda al, be, ga, de, t: (1 - ga) / t,
    "blk_alpha_beta": lambda al, be, ga, de, t: (al - be) / t,
    "blk_beta_delta": lambda al, be, ga, de, t: (be - 6 * de) / (2 * t),
    "blk_xx_lin": lambda al, be, ga, de, t: (1 - 5 * al + 4 * be) / t**2 - be / (2 * t),
    "blk_xx_quad": lambda al, be, ga, de, t: (2 * al - 7 * be + 30 * de) / (2 * t**2),
    "blk_inv_quad": lambda al, be, ga, de, t: (1 / be + ga - 2) / t**2,
    "blk_inv_dquad": lambda al, be, ga, de, t: 1 / (4 * t) - (1 - ga) * (2 + ga) / t**2,
    "blk_inv_ddquad": lambda al, be, ga, de, t: -1 / (4 * t**2)
    + (8 - 3 * ga - ga * ga - 2 / be - 2 * ga / be) / t**3,
}


def _abar1(al, be, t):
    return be / 4 + (5 * al - 4 * be - 1) / (2 * t)


def _abar2(al, be, t):
    return (7 * be - 2 * al) / (4 * t) + 15 * (al - 1) / (2 * t**2)


DEXP_NAMES = DexpCoeffs._fields
DERIV_NAMES = DexpCoeffDerivs._fields
BLOCK_NAMES = (
    "so3_dexp_quad",
    "so3_dexpinv_quad",
    "blk_alpha_beta",
    "blk_beta_delta",
    "blk_xx_lin",
    "blk_xx_quad",
    "blk_inv_quad",
    "blk_inv_dquad",
    "blk_inv_ddquad",
)

# Below this radius the truncated series is used, above it the closed form.
# The closed forms of the higher derivative factors lose digits to
# cancellation roughly like phi**(-2m) near the origin (about 1e-13 relative
# at phi = 2.5 for the worst ones), while the series, whose radius of
# convergence is 2*pi for the beta-dependent kernels, still reaches full
# double precision at 3.5 with 42 terms.  Both branches are within a few
# 1e-15 relative of a 60-digit reference on either side of the switch.
SERIES_RADIUS = 3.5


def taylor_coefficients(name: str, nterms: int | None = None) -> list[Fraction]:
    """Exact Taylor coefficients of a kernel in powers of ``t = phi**2``."""
    coeffs = _exact_series(name)
    if nterms is None:
        return list(coeffs)
    if nterms > len(coeffs):
        raise ValueError(f"only {len(coeffs)} exact terms are available for {name!r}")
    return list(coeffs[:nterms])


@lru_cache(maxsize=None)
def _exact_series(name):
    out = _FORMULAS[name](*_base_series())
    return tuple(out.regular_part())


def exact_series_floats(name):
    """First ``_EVAL_TERMS`` exact Taylor coefficients of a kernel, rounded to float."""
    c = _exact_series(name)
    if len(c) < _EVAL_TERMS:
        raise RuntimeError(f"series for {name!r} too short ({len(c)} terms)")
    return tuple(float(v) for v in c[:_EVAL_TERMS])


def series_table_source():
    """Source text of ``_series_table``, holding every kernel's rounded coefficients."""
    lines = [
        '"""Taylor coefficients in t = phi**2 of every kernel, rounded from exact rationals.',
        "",
        "Generated by tools/generate_series_table.py; do not edit.",
        '"""',
        "",
        "COEFFS = {",
    ]
    for name in _FORMULAS:
        lines.append(f"    {name!r}: (")
        lines += [f"        float.fromhex({v.hex()!r})," for v in exact_series_floats(name)]
        lines.append("    ),")
    lines.append("}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _series_matrix(names):
    from ._series_table import COEFFS

    return np.array([COEFFS[name][:_EVAL_TERMS] for name in names])


def _check_phi(phi):
    phi = float(phi)
    if not math.isfinite(phi) or phi < 0.0:
        raise ValueError(f"phi must be a finite non-negative number, got {phi}")
    if phi >= TWO_PI:
        raise ValueError(f"phi = {phi} is outside the domain [0, 2*pi)")
    return phi


def _closed_base(phi):
    al = math.sin(phi) / phi
    h = math.sin(0.5 * phi) / (0.5 * phi)
    be = h * h
    return al, be, al / be, (1.0 - al) / (phi * phi), phi * phi


def _naive_base(phi):
    # plain closed forms with IEEE semantics: phi = 0 gives nan
    with np.errstate(divide="ignore", invalid="ignore"):
        p = np.float64(phi)
        al = np.sin(p) / p
        h = np.sin(0.5 * p) / (0.5 * p)
        be = h * h
        return al, be, al / be, (1.0 - al) / (p * p), p * p


def _evaluate(names, phi, family, naive=False):
    if naive:
        args = _naive_base(phi)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return [float(_as_float(_FORMULAS[n](*args))) for n in names]
    if phi < SERIES_RADIUS:
        t = phi * phi
        powers = t ** np.arange(_EVAL_TERMS)
        return list(_series_matrix(tuple(names)) @ powers)
    args = _closed_base(phi)
    return [float(_as_float(_FORMULAS[n](*args))) for n in names]


def _as_float(v):
    if isinstance(v, Fraction):
        return float(v)
    return v


def base_coeffs(phi: float, naive: bool = False) -> BaseCoeffs:
    """``(alpha, beta, gamma, delta)`` at rotation angle ``phi``."""
    phi = _check_phi(phi)
    return BaseCoeffs(*_evaluate(BaseCoeffs._fields, phi, "base", naive))


def dexp_coeffs(phi: float, naive: bool = False) -> DexpCoeffs:
    """Weights of the powers of ``ad_X`` in dexp and dexp^-1.

    With ``naive=True`` the closed forms are evaluated as written at every
    ``phi``, which reproduces the cancellation artifacts near the origin.
    """
    phi = _check_phi(phi)
    return DexpCoeffs(*_evaluate(DEXP_NAMES, phi, "dexp", naive))


def dexp_coeff_derivs(phi: float, naive: bool = False) -> DexpCoeffDerivs:
    """Radial derivative factors of the dexp and dexp^-1 weights."""
    phi = _check_phi(phi)
    return DexpCoeffDerivs(*_evaluate(DERIV_NAMES, phi, "deriv", naive))


def block_coeffs(phi: float, naive: bool = False) -> dict[str, float]:
    """Scalars used by the 3x3 block formulas (see :mod:`se3tangent.block`)."""
    phi = _check_phi(phi)
    return dict(zip(BLOCK_NAMES, _evaluate(BLOCK_NAMES, phi, "block", naive)))


def kernel(name: str, phi: float, naive: bool = False) -> float:
    """Evaluate a single named kernel, mostly for diagnostics and tests."""
    phi = _check_phi(phi)
    for family, names in (
        ("base", BaseCoeffs._fields),
        ("dexp", DEXP_NAMES),
        ("deriv", DERIV_NAMES),
        ("block", BLOCK_NAMES),
    ):
        if name in names:
            return _evaluate((name,), phi, family, naive)[0]
    raise KeyError(name)


def closed_form(name: str, phi, alpha, beta, gamma, delta):
    """Evaluate the closed-form expression of a kernel for arbitrary number types.

    Works with any scalar type supporting field arithmetic (floats, mpmath
    numbers), which lets tests evaluate the same expression at high precision.
    """
    return _FORMULAS[name](alpha, beta, gamma, delta, phi * phi)

