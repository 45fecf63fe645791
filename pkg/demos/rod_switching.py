"""Why the closed forms need switching near a vanishing rotation.

The reference rod's rotation vector passes through zero at tau = 0.5.  The
rate chi' evaluated with the closed-form weights exactly as written is
wrong there, while the switched evaluation stays on the independent
reference obtained from the rotation field directly.

    python demos/rod_switching.py
"""

import numpy as np

from se3tangent import rod
from se3tangent.approx import SwitchPolicy

ref = rod.reference_rod()

print("chi'_y near tau = 0.5 (reference, as written, switched with eps=1e-5, k=2)")
policy = SwitchPolicy(epsilon=1e-5, order=2)
for tau in (0.5 - 1e-4, 0.5 - 1e-7, 0.5, 0.5 + 1e-7, 0.5 + 1e-4):
    args = ref.screw_derivatives(tau)
    with np.errstate(all="ignore"):
        naive = rod.deformation_rates(*args, naive=True)[0]
    robust = rod.deformation_rates(*args, policy=policy)[0]
    print(f"  tau = {tau:.7f}  {ref.strain_rate_reference(tau)[4]: .10f}  {naive[4]: .10f}  {robust[4]: .10f}")

print()
print("largest branch difference of chi' at the switch boundaries")
for eps in (1e-2, 1e-3, 1e-5):
    jumps = [
        rod.switch_jump(lambda *a: rod.deformation_rates(*a[:4], policy=a[4])[0], SwitchPolicy(eps, k))
        for k in range(4)
    ]
    print(f"  eps = {eps:.0e}: " + "  ".join(f"k={k} {j:.1e}" for k, j in enumerate(jumps)))

print()
X, Xp = ref.screw_derivatives(0.5)[:2]
g = rod.potential_gradient(X, Xp, policy=SwitchPolicy(1e-5, 3))
with np.errstate(all="ignore"):
    g_naive = rod.potential_gradient(X, Xp, naive=True)
print("potential gradient at tau = 0.5")
print("  switched  ", np.array2string(g, precision=6))
print("  as written", np.array2string(g_naive, precision=6))
