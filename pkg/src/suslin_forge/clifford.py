"""The hyperbolic space H(R^n) and its Clifford embedding into M_{2^n}(R)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .matrix import MatrixR, dot
from .rings import RingValue
from .suslin import SpherePoint, suslin_pair


@dataclass(frozen=True)
class CliffordImage:
    n: int
    body: MatrixR

    def is_odd(self) -> bool:
        return is_odd(self.body)


def q_form(p: SpherePoint) -> RingValue:
    return RingValue(p.owner, p.q())


def bilinear(p1: SpherePoint, p2: SpherePoint) -> RingValue:
    """<p1, p2> = v1·w2ᵀ + v2·w1ᵀ."""
    if p1.owner != p2.owner or p1.n != p2.n:
        raise PreconditionError("points must share ring and length")
    ring = p1.owner
    return RingValue(ring, ring.add(dot(ring, p1.v, p2.w), dot(ring, p2.v, p1.w)))


def phi_matrix(p: SpherePoint) -> MatrixR:
    s, b = suslin_pair(p.owner, p.v, p.w)
    z = MatrixR.zeros(p.owner, s.dim)
    return MatrixR.block(z, s, b, z)


def phi_embed(p: SpherePoint) -> CliffordImage:
    """phi(v, w) = [[0, S(v, w)], [bar S(v, w), 0]], of size 2**n."""
    if p.n < 2:
        raise PreconditionError("phi_embed needs n >= 2")
    return CliffordImage(p.n, phi_matrix(p))


def is_even(m: MatrixR) -> bool:
    """Zero off-diagonal blocks."""
    _, b, c, _ = m.quadrants()
    return b.is_zero() and c.is_zero()


def is_odd(m: MatrixR) -> bool:
    """Zero diagonal blocks."""
    a, _, _, d = m.quadrants()
    return a.is_zero() and d.is_zero()


def anticommutator(x: MatrixR, y: MatrixR) -> MatrixR:
    return x @ y + y @ x
