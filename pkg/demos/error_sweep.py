"""Approximation error of the truncated series along a line through the origin.

X(s) = s * (x / |x|, y) with fixed x, y.  For every target and order the
script prints the error at s = 1e-2 and the log-log slope over
s in [1e-3, 1e-1], which should be about k + 1 for an order-k truncation.

    python demos/error_sweep.py [out.csv]
"""

import sys

import numpy as np

from se3tangent import cli

s = np.geomspace(1e-3, 1e-1, 21)
print(f"{'target':<16} {'k':>2} {'error at 1e-2':>14} {'slope':>6}")
for name, orders in cli.DEFAULT_TARGETS:
    for k in orders:
        err = np.array([cli.sweep_point(name, k, si) for si in s])
        slope = np.polyfit(np.log10(s), np.log10(err), 1)[0]
        print(f"{name:<16} {k:>2} {cli.sweep_point(name, k, 1e-2):>14.6e} {slope:>6.2f}")

if len(sys.argv) > 1:
    spec = cli.SweepSpec(s_min=1e-3, s_max=1e-1, samples=61, log=True)
    print("wrote", cli.cmd_errors(spec, sys.argv[1]))
