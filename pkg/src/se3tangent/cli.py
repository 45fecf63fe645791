"""Command-line front end: approximation-error sweeps, rod studies and a self-check.

Every command writes CSV with a header row and 17 significant digits, so
identical flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import approx, block, derivatives, expmap, jacobians, kernels, rod
from .fd import FdScheme, fd_directional, fd_second

SEED = 20240611

# fixed vectors of the error sweep; X(s) = s * (x / |x|, y)
SWEEP_X = np.array([0.3, -0.4, 1.0])
SWEEP_Y = np.array([0.1, 0.2, -0.4])
SWEEP_U = np.array([0.1, 1.0, -1.0, 0.9, 0.5, 0.3])
SWEEP_S = np.array([1.7, -2.9, -9.2, 7.6, 6.7, 2.4])

# target -> (exact, approximation, norm); see sweep_point
_SWEEP = {
    "dexp": (
        lambda X: expmap.dexp(X),
        lambda X, k: approx.dexp_approx(X, k),
        2,
    ),
    "dexpinv": (
        lambda X: expmap.dexpinv(X),
        lambda X, k: approx.dexp_approx(X, k, inverse=True),
        2,
    ),
    "ddexp": (
        lambda X: derivatives.ddexp(X, SWEEP_U),
        lambda X, k: approx.ddexp_approx(X, SWEEP_U, k),
        "fro",
    ),
    "ddexpinv": (
        lambda X: derivatives.ddexp(X, SWEEP_U, inverse=True),
        lambda X, k: approx.ddexp_approx(X, SWEEP_U, k, inverse=True),
        "fro",
    ),
    "jac_dexp": (
        lambda X: jacobians.jac_eval(X, SWEEP_U, "dexp"),
        lambda X, k: approx.jac_approx(X, SWEEP_U, k, "dexp"),
        2,
    ),
    "jac_dexpinv": (
        lambda X: jacobians.jac_eval(X, SWEEP_U, "dexpinv"),
        lambda X, k: approx.jac_approx(X, SWEEP_U, k, "dexpinv"),
        2,
    ),
    "d2dexp": (
        lambda X: derivatives.d2dexp(X, SWEEP_U, SWEEP_S),
        lambda X, k: approx.d2dexp_approx(X, SWEEP_U, SWEEP_S, k),
        2,
    ),
    "d2dexpinv": (
        lambda X: derivatives.d2dexp(X, SWEEP_U, SWEEP_S, inverse=True),
        lambda X, k: approx.d2dexp_approx(X, SWEEP_U, SWEEP_S, k, inverse=True),
        2,
    ),
    "hessian_dexp": (
        lambda X: jacobians.hessian_eval(X, SWEEP_U, SWEEP_S, "dexp"),
        lambda X, k: approx.hessian_approx(X, SWEEP_U, SWEEP_S, k, "dexp"),
        2,
    ),
    "hessian_dexpinv": (
        lambda X: jacobians.hessian_eval(X, SWEEP_U, SWEEP_S, "dexpinv"),
        lambda X, k: approx.hessian_approx(X, SWEEP_U, SWEEP_S, k, "dexpinv"),
        2,
    ),
}

# orders that are distinct truncations; the others repeat a lower order
DEFAULT_TARGETS = (
    ("dexp", (0, 1, 2, 3)),
    ("dexpinv", (0, 1, 2)),
    ("ddexp", (0, 1, 2, 3)),
    ("ddexpinv", (0, 1, 3)),
    ("jac_dexp", (0, 1, 2, 3)),
    ("jac_dexpinv", (0, 1, 3)),
    ("d2dexp", (0, 1, 2)),
    ("d2dexpinv", (0, 2)),
    ("hessian_dexp", (0, 1, 2)),
    ("hessian_dexpinv", (0, 2)),
)


def sweep_screw(s):
    return s * np.concatenate([SWEEP_X / np.linalg.norm(SWEEP_X), SWEEP_Y])


def sweep_point(target, k, s):
    """Error of the order-``k`` approximation of ``target`` at ``X(s)``.

    Maps, second derivatives, Jacobians and Hessians use the matrix 2-norm,
    first derivatives the Frobenius norm.
    """
    exact, approximation, norm = _SWEEP[target]
    X = sweep_screw(s)
    return float(np.linalg.norm(approximation(X, k) - exact(X), norm))


@dataclass(frozen=True)
class SweepSpec:
    s_min: float = 0.0
    s_max: float = 0.1
    samples: int = 101
    log: bool = False
    targets: tuple = field(default=DEFAULT_TARGETS)

    def __post_init__(self):
        if not self.s_min < self.s_max:
            raise ValueError("s_min must be smaller than s_max")
        if self.samples < 2:
            raise ValueError("samples must be at least 2")
        if self.log and self.s_min <= 0:
            raise ValueError("log spacing needs s_min > 0")
        for name, orders in self.targets:
            if name not in _SWEEP:
                raise ValueError(f"unknown target {name!r}; expected one of {tuple(_SWEEP)}")
            for k in orders:
                inverse = name.endswith("inv")
                approx._check_order(k, inverse, second=name.startswith(("d2", "hessian")))

    def grid(self):
        if self.log:
            return np.geomspace(self.s_min, self.s_max, self.samples)
        return np.linspace(self.s_min, self.s_max, self.samples)

    def columns(self):
        return [f"{name}_k{k}" for name, orders in self.targets for k in orders]


def sweep_errors(spec: SweepSpec):
    """``(s, errors)`` with one error column per ``(target, k)``."""
    s = spec.grid()
    cols = [(name, k) for name, orders in spec.targets for k in orders]
    err = np.array([[sweep_point(name, k, si) for name, k in cols] for si in s])
    return s, err


def _fmt(v):
    return format(float(v), ".17g")


def write_csv(path, header, rows):
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
    return path


def cmd_errors(spec: SweepSpec, out):
    s, err = sweep_errors(spec)
    return write_csv(out, ["s", *spec.columns()], np.column_stack([s, err]))


def parse_targets(tokens):
    """``["dexp=0,1,2", "ddexpinv=0,1,3"]`` -> ``(("dexp", (0, 1, 2)), ...)``."""
    out = []
    for tok in tokens:
        name, sep, orders = tok.partition("=")
        if not sep or not orders:
            raise ValueError(f"target {tok!r} must look like name=k1,k2")
        out.append((name, tuple(int(k) for k in orders.split(","))))
    return tuple(out)


# ---------------------------------------------------------------------------
# rod


_RATE_NAMES = ("kappa_x", "kappa_y", "kappa_z", "rho_x", "rho_y", "rho_z")
_GRAD_NAMES = ("gx1", "gx2", "gx3", "gy1", "gy2", "gy3")


def rod_table(cfg: rod.RodConfig, taus, policy, potential_policy):
    """Rows of ``tau``, then chi, chi', chi'', gradient and Hessian norm.

    Each quantity appears twice: evaluated with the closed forms as written
    (``naive``) and with switching (``robust``).
    """
    K = rod.stiffness(cfg)
    ref = rod.reference_rod()
    header = ["tau"]
    for mode in ("naive", "robust"):
        for q in ("chi", "dchi", "ddchi"):
            header += [f"{q}_{c}_{mode}" for c in _RATE_NAMES]
        header += [f"grad_{c}_{mode}" for c in _GRAD_NAMES]
        header.append(f"hess_norm_{mode}")
    rows = []
    for t in taus:
        args = ref.screw_derivatives(t)
        row = [t]
        for mode in ("naive", "robust"):
            pol, ppol = (None, None) if mode == "naive" else (policy, potential_policy)
            naive = mode == "naive"
            with np.errstate(all="ignore"):
                chi = rod.deformation(args[0], args[1], pol, naive)
                chip, chipp = rod.deformation_rates(*args, policy=pol, naive=naive)
                g = rod.potential_gradient(args[0], args[1], K=K, policy=ppol, naive=naive)
                H = rod.potential_hessian(args[0], args[1], K=K, policy=ppol, naive=naive)
                hn = np.linalg.norm(H, 2) if np.all(np.isfinite(H)) else np.nan
            row += [*chi, *chip, *chipp, *g, hn]
        rows.append(row)
    return header, rows


def switch_study(epsilon, orders=(0, 1, 2, 3), samples=201):
    """Rows ``tau, err_k...`` around the zero rotation at ``tau = 0.5``.

    The window spans twice the region where ``|x| <= epsilon``.
    """
    lo, hi = rod.switch_boundaries(epsilon)
    half = hi - lo
    taus = np.linspace(0.5 - half, 0.5 + half, samples)
    errs = [rod.switch_error(taus, epsilon, k) for k in orders]
    return ["tau", *[f"err_k{k}" for k in orders]], np.column_stack([taus, *errs])


def cmd_rod(cfg: rod.RodConfig, out_dir, epsilon=1e-5, order=2, potential_order=3, tau_samples=201):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    policy = approx.SwitchPolicy(epsilon=epsilon, order=order)
    ppolicy = approx.SwitchPolicy(epsilon=epsilon, order=potential_order)
    taus = np.linspace(0.0, 1.0, tau_samples)
    header, rows = rod_table(cfg, taus, policy, ppolicy)
    paths = [write_csv(out_dir / "rod.csv", header, rows)]
    for eps in (1e-2, 1e-3):
        h, r = switch_study(eps)
        paths.append(write_csv(out_dir / f"switch_eps{eps:.0e}.csv", h, r))
    return paths


# ---------------------------------------------------------------------------
# self-check


# radial derivative limits at zero rotation, from exact Taylor expansion
LIMITS = {
    "abar3": -1 / 180,
    "abar4": -1 / 1260,
    "bbar4": -1 / 7560,
    "abreve1": -1 / 90,
    "abreve2": -1 / 630,
    "abreve3": 1 / 1680,
    "abreve4": 1 / 15120,
    "bbreve2": -1 / 3780,
    "bbreve4": -1 / 50400,
}


def _random_screws(n, rng, lo=1e-3, hi=3.0):
    out = []
    for _ in range(n):
        x = rng.normal(size=3)
        x *= 10 ** rng.uniform(np.log10(lo), np.log10(hi)) / np.linalg.norm(x)
        out.append(np.concatenate([x, rng.normal(size=3)]))
    return out


def _suite_limits():
    d = kernels.dexp_coeff_derivs(0.0)._asdict()
    return max(abs(d[k] - v) for k, v in LIMITS.items()), 1e-15


def _suite_series(n=100):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for X in _random_screws(n, rng):
        U = rng.normal(size=6)
        for inv in (False, True):
            M = expmap.dexpinv(X) if inv else expmap.dexp(X)
            worst = max(worst, np.abs(M - expmap.dexp_series(X, 60, inv)).max())
            D = derivatives.ddexp(X, U, inverse=inv)
            worst = max(worst, np.abs(D - derivatives.ddexp_series(X, U, 60, inv)).max())
    return worst, 1e-12


def _suite_block(n=100):
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    for X in _random_screws(n, rng):
        U = rng.normal(size=6)
        worst = max(worst, np.abs(expmap.exp_se3(X) - block.exp_block(X)).max())
        for inv in (False, True):
            M = expmap.dexpinv(X) if inv else expmap.dexp(X)
            worst = max(worst, np.abs(M - block.dexp_block(X, inv)).max())
            D = derivatives.ddexp(X, U, inverse=inv)
            worst = max(worst, np.abs(D - block.ddexp_block(X, U, inv)).max())
    return worst, 1e-11


def _suite_fd_first(n=20):
    rng = np.random.default_rng(SEED + 2)
    worst = 0.0
    for X in _random_screws(n, rng, 0.05, 2.5):
        U, Z = rng.normal(size=6), rng.normal(size=6)
        for inv in (False, True):
            M = expmap.dexpinv if inv else expmap.dexp
            fd = fd_directional(M, X, U)
            worst = max(worst, np.abs(derivatives.ddexp(X, U, inverse=inv) - fd).max())
        for kind in jacobians.JAC_KINDS:
            M = expmap.dexpinv if kind.startswith("dexpinv") else expmap.dexp
            if kind.endswith("T"):
                fun = lambda Y, M=M: M(Y).T @ Z  # noqa: E731
            else:
                fun = lambda Y, M=M: M(Y) @ Z  # noqa: E731
            J = jacobians.jac_eval(X, Z, kind)
            fdJ = np.column_stack([fd_directional(fun, X, e) for e in np.eye(6)])
            worst = max(worst, np.abs(J - fdJ).max())
    return worst, 1e-7


def _suite_fd_second(n=10):
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    scheme = FdScheme(order=4, step=1e-3)
    for X in _random_screws(n, rng, 0.05, 2.5):
        U, S, Q, Z = (rng.normal(size=6) for _ in range(4))
        for inv in (False, True):
            M = expmap.dexpinv if inv else expmap.dexp
            fd = fd_second(M, X, U, S, scheme)
            worst = max(worst, np.abs(derivatives.d2dexp(X, U, S, inverse=inv) - fd).max())
            kind = "dexpinv" if inv else "dexp"
            H = jacobians.hessian_eval(X, Q, Z, kind)
            fdH = np.column_stack(
                [fd_directional(lambda Y: jacobians.jac_eval(Y, Z, kind).T @ Q, X, e, scheme) for e in np.eye(6)]
            )
            worst = max(worst, np.abs(H - fdH).max())
    return worst, 1e-5


def _suite_identities(n=50):
    rng = np.random.default_rng(SEED + 4)
    worst = 0.0
    for X in _random_screws(n, rng):
        U, S, Q, Z = (rng.normal(size=6) for _ in range(4))
        A, B = expmap.dexp(X), expmap.dexpinv(X)
        worst = max(worst, np.abs(A @ B - np.eye(6)).max())
        # D(dexp^-1) = -dexp^-1 D(dexp) dexp^-1
        lhs = derivatives.ddexp(X, U, inverse=True)
        worst = max(worst, np.abs(lhs + B @ derivatives.ddexp(X, U) @ B).max())
        for kind in ("dexp", "dexpinv"):
            H = jacobians.hessian_eval(X, Q, Z, kind)
            worst = max(worst, np.abs(H - H.T).max())
        worst = max(worst, np.abs(derivatives.d2dexp(X, U, S) - derivatives.d2dexp(X, S, U)).max())
    return worst, 1e-11


SUITES = {
    "limits": _suite_limits,
    "series": _suite_series,
    "block": _suite_block,
    "fd_first": _suite_fd_first,
    "fd_second": _suite_fd_second,
    "identities": _suite_identities,
}


def run_checks():
    """``[(suite, max deviation, tolerance, passed), ...]``."""
    out = []
    for name, fun in SUITES.items():
        dev, tol = fun()
        dev = float(dev)
        out.append((name, dev, tol, bool(np.isfinite(dev) and dev <= tol)))
    return out


def cmd_check(verbose=False, stream=None):
    stream = stream or sys.stdout
    results = run_checks()
    width = max(len(r[0]) for r in results)
    for name, dev, tol, ok in results:
        status = "PASS" if ok else "FAIL"
        if verbose or not ok:
            print(f"{status}  {name:<{width}}  max deviation {dev:.3e}  (tol {tol:.0e})", file=stream)
    failed = sum(not r[3] for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed", file=stream)
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="se3tangent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("errors", help="approximation error sweep along X(s)")
    e.add_argument("--s-min", type=float, default=0.0)
    e.add_argument("--s-max", type=float, default=0.1)
    e.add_argument("--samples", type=int, default=101)
    e.add_argument("--log", action="store_true", help="logarithmic spacing in s")
    e.add_argument(
        "--targets",
        nargs="+",
        metavar="NAME=K,...",
        help="targets and orders, e.g. dexp=0,1,2 ddexpinv=0,1,3 (default: all)",
    )
    e.add_argument("--out", default="errors.csv")

    r = sub.add_parser("rod", help="deformation, potential and switching study of the reference rod")
    r.add_argument("--epsilon", type=float, default=1e-5)
    r.add_argument("--order", type=int, default=2, help="approximation order for chi and its rates")
    r.add_argument("--potential-order", type=int, default=3, help="approximation order for gradient and Hessian")
    r.add_argument("--tau-samples", type=int, default=201)
    r.add_argument("--L", dest="length", type=float, default=100.0, help="rod length [mm]")
    r.add_argument("--E", dest="youngs", type=float, default=10.0, help="Young's modulus [MPa]")
    r.add_argument("--G", dest="shear", type=float, default=0.3, help="shear modulus [MPa]")
    r.add_argument("--width", type=float, default=8.0, help="section width [mm]")
    r.add_argument("--height", type=float, default=8.0, help="section height [mm]")
    r.add_argument("--out-dir", default="rod_out")

    c = sub.add_parser("check", help="run the oracle suites; exit status 0 iff all pass")
    c.add_argument("--verbose", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "errors":
            targets = parse_targets(args.targets) if args.targets else DEFAULT_TARGETS
            spec = SweepSpec(args.s_min, args.s_max, args.samples, args.log, targets)
            print(cmd_errors(spec, args.out))
        elif args.command == "rod":
            if args.tau_samples < 2:
                raise ValueError("tau-samples must be at least 2")
            cfg = rod.RodConfig(args.length, args.width, args.height, args.youngs, args.shear)
            for path in cmd_rod(cfg, args.out_dir, args.epsilon, args.order, args.potential_order, args.tau_samples):
                print(path)
        else:
            return cmd_check(args.verbose)
    except (ValueError, OSError) as exc:
        parser.exit(2, f"se3tangent: error: {exc}\n")
    return 0
