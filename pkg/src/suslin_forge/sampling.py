"""Random test data: points, unit-sphere points, generators and words.

Every function takes an explicit ``random.Random`` so that runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .epin import EpinGenerator, apply_orthogonal, eo_generator, partner
from .matrix import dot
from .rings import Ring
from .suslin import SpherePoint


def suite_rng(seed: int, name: str) -> random.Random:
    """A generator that depends only on (seed, name), stable across processes."""
    return random.Random(f"{seed}:{name}")


def random_scalar(ring: Ring, rng: random.Random):
    """For Z uniform in [-9, 9]; for finite rings uniform over the ring."""
    return ring.random(rng)


def random_vector(ring: Ring, n: int, rng: random.Random) -> tuple:
    return tuple(ring.random(rng) for _ in range(n))


def random_point(ring: Ring, n: int, rng: random.Random) -> SpherePoint:
    return SpherePoint(ring, random_vector(ring, n, rng), random_vector(ring, n, rng))


def scramble(p: SpherePoint, rng: random.Random, steps: int = 3) -> SpherePoint:
    """Move p by ``steps`` random elementary orthogonal generators."""
    ring, n = p.owner, p.n
    for _ in range(steps):
        i = rng.randrange(1, 2 * n + 1)
        j = rng.choice([k for k in range(1, 2 * n + 1) if k not in (i, partner(i, n))])
        p = apply_orthogonal(eo_generator(i, j, ring.random(rng), n, ring).body, p)
    return p


def random_unit_point(ring: Ring, n: int, rng: random.Random, steps: int = 3) -> SpherePoint:
    """A point with v·wᵀ = 1: start from v₁ = 1, solve for w₁, then scramble."""
    v = (ring.one,) + random_vector(ring, n - 1, rng)
    w_tail = random_vector(ring, n - 1, rng)
    w1 = ring.sub(ring.one, dot(ring, v[1:], w_tail))
    p = SpherePoint(ring, v, (w1,) + w_tail)
    return scramble(p, rng, steps) if n >= 2 and steps else p


def second_lift(p: SpherePoint, rng: random.Random) -> tuple:
    """Another w' with v·w'ᵀ = 1: w' = w + u - (v·uᵀ)w for random u."""
    ring = p.owner
    u = random_vector(ring, p.n, rng)
    c = dot(ring, p.v, u)
    return tuple(ring.sub(ring.add(w, x), ring.mul(c, w)) for w, x in zip(p.w, u))


def unit_point_with_tail(ring: Ring, tail: Sequence, rng: random.Random) -> SpherePoint:
    """A unit point whose v agrees with ``tail`` from the third coordinate on.

    Starts from v = (1, c₂, tail) and applies random E₁₂ / E₂₁ moves, which
    touch only the first two coordinates.
    """
    tail = tuple(tail)
    n = len(tail) + 2
    v = [ring.one, ring.random(rng), *tail]
    w_rest = [ring.random(rng) for _ in range(n - 1)]
    w = [ring.sub(ring.one, dot(ring, v[1:], w_rest)), *w_rest]
    for _ in range(3):
        lam = ring.random(rng)
        if rng.random() < 0.5:
            # v·E₁₂(λ): a₂ += λa₁;  w·E₂₁(-λ): b₁ -= λb₂
            v[1] = ring.add(v[1], ring.mul(lam, v[0]))
            w[0] = ring.sub(w[0], ring.mul(lam, w[1]))
        else:
            v[0] = ring.add(v[0], ring.mul(lam, v[1]))
            w[1] = ring.sub(w[1], ring.mul(lam, w[0]))
    return SpherePoint(ring, tuple(v), tuple(w))


def random_generator(ring: Ring, n: int, rng: random.Random) -> EpinGenerator:
    return EpinGenerator(rng.choice("ef"), rng.choice("ef"), rng.randrange(2, n + 1), ring.random(rng), n, ring)


def random_word(ring: Ring, n: int, length: int, rng: random.Random) -> list[EpinGenerator]:
    return [random_generator(ring, n, rng) for _ in range(length)]
