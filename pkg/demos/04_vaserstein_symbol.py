"""
The Vaserstein matrix
=====================

V(v, w) = β S₂(v, w) J₂ βᵀ is alternating with Pfaffian v·wᵀ.  Moving S by a
Spin element g corresponds to moving V by g' = β g βᵀ.
"""

import random

from suslin_forge.checks import point_fixers, random_spin_element
from suslin_forge.rings import IntegersMod
from suslin_forge.sampling import random_unit_point
from suslin_forge.vaserstein import sp4_fixer_check, transport_action, vaserstein_matrix

R = IntegersMod(5)
rng = random.Random(1)

p = random_unit_point(R, 3, rng)
v = vaserstein_matrix(p)
print(v.body)
print("pf =", v.pfaffian.payload, " v·wᵀ =", p.q())

g = random_spin_element(R, rng, 3)
res = transport_action(g, p)
print("image point:", res.image.v, res.image.w)
print("V moves with g':", res.v_prime.body == vaserstein_matrix(res.image).body)

# elements fixing S(e₁, f₁) = I are symplectic
fixers = point_fixers(R, rng, 10)
print(len(fixers), "fixers, all symplectic:", all(sp4_fixer_check(f) for f in fixers))
