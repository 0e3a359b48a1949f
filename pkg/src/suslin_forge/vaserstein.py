"""Alternating 4x4 matrices attached to points of H(R^3), Pfaffians, and the
SL_4 action that mirrors the Spin_6 action on Suslin matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistencyError, PreconditionError
from .matrix import MatrixR, det_berkowitz
from .rings import Ring, RingValue, ZZ
from .suslin import SpherePoint, decode_suslin, j_matrix, star, suslin_pair

_BETA = ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))


def is_alternating(m: MatrixR) -> bool:
    ring = m.owner
    n = m.dim
    for i in range(n):
        if not ring.is_zero(m[i, i]):
            return False
        for j in range(i + 1, n):
            if not ring.is_zero(ring.add(m[i, j], m[j, i])):
                return False
    return True


@dataclass(frozen=True)
class AlternatingMatrix4:
    body: MatrixR

    def __post_init__(self):
        if self.body.dim != 4 or not is_alternating(self.body):
            raise PreconditionError("not a 4x4 alternating matrix")

    @property
    def pfaffian(self) -> RingValue:
        return pfaffian4(self.body)


@dataclass(frozen=True)
class WittElementRaw:
    """A Pfaffian-one alternating 4x4 matrix standing for its class in W_E(R).

    No stable equivalence is decided here; representatives are kept as is.
    """

    body: AlternatingMatrix4

    def __post_init__(self):
        if self.body.pfaffian != 1:
            raise PreconditionError("W_E representatives need Pfaffian 1")


def beta_matrix(ring: Ring = ZZ) -> MatrixR:
    return MatrixR.from_rows(ring, _BETA)


def vaserstein_matrix(p: SpherePoint) -> AlternatingMatrix4:
    """V(v, w) = β·S₂(v, w)·J₂·βᵀ."""
    if p.n != 3:
        raise PreconditionError(f"V(v, w) is defined for n = 3, got n = {p.n}")
    ring = p.owner
    beta = beta_matrix(ring)
    s = suslin_pair(ring, p.v, p.w)[0]
    return AlternatingMatrix4(beta @ s @ j_matrix(2, ring) @ beta.transpose())


def vaserstein_display(p: SpherePoint) -> MatrixR:
    """V(v, w) written out entrywise."""
    ring = p.owner
    (a1, a2, a3), (b1, b2, b3) = p.v, p.w
    n = ring.neg
    z = ring.zero
    rows = (
        (z, n(a1), n(a2), n(a3)),
        (a1, z, n(b3), b2),
        (a2, b3, z, n(b1)),
        (a3, n(b2), b1, z),
    )
    return MatrixR(ring, rows)


def pfaffian4(a: MatrixR | AlternatingMatrix4) -> RingValue:
    """a12·a34 - a13·a24 + a14·a23."""
    m = a.body if isinstance(a, AlternatingMatrix4) else a
    if m.dim != 4 or not is_alternating(m):
        raise PreconditionError("pfaffian4 needs a 4x4 alternating matrix")
    r = m.owner
    t = r.sub(r.mul(m[0, 1], m[2, 3]), r.mul(m[0, 2], m[1, 3]))
    return RingValue(r, r.add(t, r.mul(m[0, 3], m[1, 2])))


def pfaffian(m: MatrixR) -> RingValue:
    """Pfaffian of any even alternating matrix, by expansion along the first row."""
    if not is_alternating(m):
        raise PreconditionError("pfaffian needs an alternating matrix")
    ring = m.owner
    if m.dim % 2:
        return RingValue(ring, ring.zero)

    def rec(idx: tuple):
        if not idx:
            return ring.one
        i = idx[0]
        total = ring.zero
        for pos in range(1, len(idx)):
            j = idx[pos]
            x = m[i, j]
            if not x:
                continue
            term = ring.mul(x, rec(idx[1:pos] + idx[pos + 1:]))
            total = ring.sub(total, term) if pos % 2 == 0 else ring.add(total, term)
        return total

    return RingValue(ring, rec(tuple(range(m.dim))))


def perp(a: MatrixR, b: MatrixR) -> MatrixR:
    """Orthogonal sum a ⊥ b = diag(a, b) of alternating matrices."""
    if not (is_alternating(a) and is_alternating(b)):
        raise PreconditionError("perp needs alternating inputs")
    return MatrixR.block_diag(a, b)


def psi(r: int, ring: Ring = ZZ) -> MatrixR:
    """ψ_r = ψ_{r-1} ⊥ ψ_1 with ψ_1 = [[0, 1], [-1, 0]]."""
    if r < 1:
        raise PreconditionError("psi needs r >= 1")
    psi1 = MatrixR.from_rows(ring, ((0, 1), (-1, 0)))
    out = psi1
    for _ in range(r - 1):
        out = perp(out, psi1)
    return out


def spin_action(g: MatrixR, s: MatrixR) -> MatrixR:
    """g • S = g·S·g* on 4x4 matrices."""
    return g @ s @ star(g, 2)


@dataclass(frozen=True)
class TransportResult:
    g_prime: MatrixR
    v_prime: AlternatingMatrix4
    image: SpherePoint


def transport_action(g: MatrixR, p: SpherePoint) -> TransportResult:
    """Move p by g • S(p) and carry V along: V(p') = g'·V(p)·g'ᵀ with g' = β g βᵀ.

    ``g`` must have determinant 1 and g•S(p) must again be a Suslin matrix.
    """
    ring = p.owner
    if g.dim != 4 or p.n != 3:
        raise PreconditionError("transport works with 4x4 g and n = 3")
    if not ring.is_zero(ring.sub(det_berkowitz(g), ring.one)):
        raise PreconditionError("g must have determinant 1")
    moved = spin_action(g, suslin_pair(ring, p.v, p.w)[0])
    image = decode_suslin(moved)
    beta = beta_matrix(ring)
    gp = beta @ g @ beta.transpose()
    vp = gp @ vaserstein_matrix(p).body @ gp.transpose()
    result = TransportResult(gp, AlternatingMatrix4(vp), image)
    if vp != vaserstein_matrix(image).body:
        raise InconsistencyError("V(g•S) differs from g'·V·g'ᵀ")
    return result


def sp4_fixer_check(g: MatrixR) -> bool:
    """True iff g·J·gᵀ = J, J = J₂."""
    j = j_matrix(2, g.owner)
    return g @ j @ g.transpose() == j


def fixes_base_point(g: MatrixR) -> bool:
    """Whether g • S(e₁, f₁) = S(e₁, f₁); note S(e₁, f₁) = I."""
    ring = g.owner
    base = SpherePoint.of(ring, (1, 0, 0), (1, 0, 0))
    s = suslin_pair(ring, base.v, base.w)[0]
    return spin_action(g, s) == s


def top_block_word(blocks: Sequence[MatrixR], ring: Ring) -> MatrixR:
    """Product of top blocks, the first one acting first."""
    out = MatrixR.identity(ring, 4)
    for b in blocks:
        out = b @ out
    return out
