"""
Epin generators acting on sphere points
=======================================

Conjugation by 1 + λx₁xᵢ moves a point of the unit sphere of H(R^3).
The move can be read off in closed form, and it always agrees with the
action of an elementary matrix σ on v (and σ^{⊺,-1} on w).
"""

import random

from suslin_forge.epin import (
    EpinGenerator,
    act_by_elementary,
    act_on_point,
    closed_form_action,
    epin_matrix,
    extract_sigma,
    transitive_witness,
)
from suslin_forge.rings import IntegersMod
from suslin_forge.sampling import random_unit_point, random_word, second_lift

R = IntegersMod(6)
rng = random.Random(0)

p = random_unit_point(R, 3, rng)
print("start:", p.v, p.w, "q =", p.q())

g = EpinGenerator("f", "e", 3, 2, 3, R)
print(epin_matrix(g))

# conjugation and the closed form give the same point
out = act_on_point(g, p)
print("after g:", out.v, out.w, "closed form agrees:", out == closed_form_action(g, p))

# a word of generators is matched by one elementary σ
word = random_word(R, 3, 5, rng)
image, sigma = extract_sigma(word, p)
print("σ reproduces the word:", act_by_elementary(sigma, p) == image)

# two lifts w₁, w₂ of the same v are related by ε = I + vᵀ(w₂ - w₁)
w2 = p.w
while w2 == p.w:
    w2 = second_lift(p, rng)
print("w₁ =", p.w, " w₂ =", w2)
wit = transitive_witness(p.v, p.w, w2, R)
print(wit.epsilon.body)
