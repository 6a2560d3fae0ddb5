"""----------------------------------------------------------------------
PyLGA: example run at the Hopf point of the focal-value figures

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

import time
from fractions import Fraction

import matplotlib.pyplot as plt
import numpy as np

from lgallee.equilibria import all_equilibria
from lgallee.focal import focal_values, recover_z
from lgallee.model import Params
from lgallee.simulate import find_limit_cycles, integrate

# ==================================================================================================================================================================================
# Parameters of the weak focus of order 4
p = Params(
    alpha=Fraction(13, 2500),
    beta=Fraction(163, 10000),
    gamma=Fraction(809, 100),
    delta=Fraction(1, 10),
    eta=Fraction(1, 100),
)

# Record start time
Time = time.time()

for e in all_equilibria(p):
    print("%-4s (%.6f, %.6f)  %s" % (e.label, *e.location_floats(), e.kind))

# ==================================================================================================================================================================================
# Focal values at the recovered Hopf point

for rec in recover_z(p):
    report = focal_values(rec.point, max_order=2)
    print("z = %s: L1 = %s, L2 = %s" % (rec.point.z, *(float(v) for v in report.L)))

# ==================================================================================================================================================================================
# Orbits and limit cycles around the positive focus

focus = [e for e in all_equilibria(p) if e.kind.endswith("Focus")][-1]
center = focus.location_floats()
cycles = find_limit_cycles(p, center, np.geomspace(1e-3, 5e-2, 14), tol=(1e-11, 1e-11))
for c in cycles:
    print("limit cycle: r = %.8f, period = %.4f, %s" % (c.radius, c.period, c.stability))

fig1 = plt.figure()
ax1 = fig1.add_subplot(1, 1, 1)
plt.xlabel("Prey x")
plt.ylabel("Predator y")
for r in (0.005, 0.02, 0.05):
    orbit = integrate(p, (center[0] + r, center[1]), 3000.0)
    ax1.plot(orbit.states[:, 0], orbit.states[:, 1], linewidth=0.6, label="r0 = %g" % r)
ax1.plot(*center, "ko")
ax1.legend()

# Print elapsed time of simulation
SimDuration = time.time() - Time
print()
print("Elapsed Time: ", SimDuration, "sec")

plt.show()
