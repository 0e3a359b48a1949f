"""
Suslin matrices
===============

Build S(v, w) and its bar for a point of H(R^n) and watch the basic
identities hold exactly over the integers.
"""

from suslin_forge.rings import ZZ, PolynomialRing, IntegersMod
from suslin_forge.suslin import SpherePoint, j_matrix, star, suslin_pair

# a point of H(Z^3); q(v, w) = v·wᵀ
p = SpherePoint.of(ZZ, (2, -1, 3), (1, 4, 0))
s, s_bar = suslin_pair(ZZ, p.v, p.w)
print("q =", p.q())
print(s)

# the product with the bar is q times the identity
print("S·bar S scalar:", (s @ s_bar).is_scalar(p.q()))

# bar S(v, w) is S(w, v) transposed
print("bar swaps v, w:", s_bar == suslin_pair(ZZ, p.w, p.v)[0].transpose())

# J_n is orthogonal and the star involution is S or bar S depending on parity
j = j_matrix(2, ZZ)
print("J Jᵀ = I:", (j @ j.transpose()).is_identity())
print("S* = S for length 3:", star(s, 2) == s)

# the same code runs over any commutative ring, e.g. Z/5[x1, x2]
R = PolynomialRing(IntegersMod(5), 2)
x1, x2 = R.gen(0), R.gen(1)
p = SpherePoint.of(R, (x1, 1, x2), (x2, x1 * x2, 3))
s, s_bar = suslin_pair(R, p.v, p.w)
print("over", R, "the product is", (s @ s_bar)[0, 0])
