"""
Composition laws
================

Z-matrices over split quaternions and split octonions compose with ⊙ and
q(X ⊙ Y) = q(X) q(Y).  For quaternions ⊙ is associative; for octonions it
is not.  Over unimodular rows it reproduces van der Kallen's composition.
"""

import random

from suslin_forge import composition as comp
from suslin_forge.rings import IntegersMod
from suslin_forge.sampling import random_unit_point, unit_point_with_tail

R = IntegersMod(7)
rng = random.Random(5)

v = [R.random(rng) for _ in range(3)]
x = comp.z_matrix(comp.AlgElement.random("quaternion", R, rng), v, [R.random(rng) for _ in v])
y = comp.z_matrix(comp.AlgElement.random("quaternion", R, rng), v, [R.random(rng) for _ in v])
z = comp.compose(x, y)
print("q(X) =", x.q.payload, " q(Y) =", y.q.payload, " q(X ⊙ Y) =", z.q.payload)

# octonions: a non-associative triple on the unit sphere over Z/3
x, y, w = comp.find_nonassociative_triple(IntegersMod(3))
print("(X⊙Y)⊙W == X⊙(Y⊙W)?", comp.compose(comp.compose(x, y), w) == comp.compose(x, comp.compose(y, w)))

# unimodular rows sharing a₃, ..., a_n
S = IntegersMod(5)
p1 = random_unit_point(S, 4, rng)
p2 = unit_point_with_tail(S, p1.v[2:], rng)
p3 = comp.vdk_compose(p1, p2)
print(p1.v, "∘", p2.v, "=", p3.v, " unimodular:", p3.is_unit())
