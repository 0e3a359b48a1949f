"""
Orbits over small finite rings
==============================

Enumerate unimodular rows and unit-sphere points over Z/m, split them into
E_n and EO_2n orbits, and check that v ↦ (v, w) matches the classes.
"""

import time

from suslin_forge.orbits import bijection_check, enumerate_sphere, enumerate_um
from suslin_forge.rings import IntegersMod

for m in (2, 3, 4, 5, 6):
    R = IntegersMod(m)
    t0 = time.perf_counter()
    rep = bijection_check(R, 3)
    dt = time.perf_counter() - t0
    print(f"Z/{m}: |Um| = {rep.um_size:5d}  |sphere| = {rep.sphere_size:6d}  "
          f"classes {rep.um_orbit_count} ↔ {rep.sphere_orbit_count}  bijective = {rep.ok}  ({dt:.2f} s)")

# a look at the smallest case
R = IntegersMod(2)
print(enumerate_um(R, 3))
print(len(enumerate_sphere(R, 3)), "points on the unit sphere of H((Z/2)^3)")
