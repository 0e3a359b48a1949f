"""Split quaternions, split octonions, Z-matrices and the composition law ⊙.

Split quaternions are 2x2 matrices (conjugate = adjugate, norm = det).
Split octonions are Zorn vector matrices ``(a, x; y, b)`` with scalars a, b and
x, y in R^3, stored as the 8 coordinates ``(a, x1, x2, x3, y1, y2, y3, b)``:

    (a, x; y, b)(a', x'; y', b') = (aa' + x·y',  ax' + b'x - y×y';
                                    a'y + by' + x×x',  bb' + y·x')

with norm ab - x·y and conjugate (b, -x; -y, a).  A point (v, w) of H(R^4)
is identified with the octonion a = v1, b = w1, x = (v2, v3, v4),
y = -(w2, w3, w4), so that norm = v·wᵀ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistencyError, PreconditionError
from .matrix import MatrixR
from .rings import Ring, RingValue
from .suslin import SpherePoint

QUATERNION = "split_quaternion"
OCTONION = "split_octonion"
_ALIASES = {"quaternion": QUATERNION, QUATERNION: QUATERNION, "octonion": OCTONION, OCTONION: OCTONION}


def algebra_name(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise PreconditionError(f"unknown algebra {name!r}") from None


@dataclass(frozen=True)
class AlgElement:
    """An element of a split composition algebra.

    ``coords`` holds 4 payloads (quaternion, row-major 2x2 matrix) or 8
    (octonion, Zorn coordinates).
    """

    algebra: str
    owner: Ring
    coords: tuple

    def __post_init__(self):
        want = 4 if self.algebra == QUATERNION else 8
        if self.algebra not in (QUATERNION, OCTONION) or len(self.coords) != want:
            raise PreconditionError(f"bad element for {self.algebra}")

    # -- constructors --------------------------------------------------------
    @classmethod
    def of(cls, algebra: str, ring: Ring, coords: Sequence) -> "AlgElement":
        return cls(algebra_name(algebra), ring, tuple(ring.coerce(c) for c in coords))

    @classmethod
    def quaternion(cls, m: MatrixR) -> "AlgElement":
        if m.dim != 2:
            raise PreconditionError("split quaternions are 2x2 matrices")
        return cls(QUATERNION, m.owner, m.rows[0] + m.rows[1])

    @classmethod
    def octonion(cls, ring: Ring, a, x: Sequence, y: Sequence, b) -> "AlgElement":
        return cls.of(OCTONION, ring, (a, *x, *y, b))

    @classmethod
    def scalar(cls, algebra: str, ring: Ring, c) -> "AlgElement":
        algebra = algebra_name(algebra)
        c = ring.coerce(c)
        z = ring.zero
        if algebra == QUATERNION:
            return cls(algebra, ring, (c, z, z, c))
        return cls(algebra, ring, (c, z, z, z, z, z, z, c))

    @classmethod
    def one(cls, algebra: str, ring: Ring) -> "AlgElement":
        return cls.scalar(algebra, ring, 1)

    @classmethod
    def zero(cls, algebra: str, ring: Ring) -> "AlgElement":
        return cls.scalar(algebra, ring, 0)

    @classmethod
    def random(cls, algebra: str, ring: Ring, rng) -> "AlgElement":
        algebra = algebra_name(algebra)
        k = 4 if algebra == QUATERNION else 8
        return cls(algebra, ring, tuple(ring.random(rng) for _ in range(k)))

    # -- structure -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.coords)

    def as_matrix(self) -> MatrixR:
        """The 2x2 matrix of a quaternion."""
        if self.algebra != QUATERNION:
            raise PreconditionError("only quaternions are matrices")
        a, b, c, d = self.coords
        return MatrixR(self.owner, ((a, b), (c, d)))

    def _check(self, other: "AlgElement"):
        if self.algebra != other.algebra or self.owner != other.owner:
            raise PreconditionError("elements from different algebras")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, self.owner, tuple(map(self.owner.add, self.coords, other.coords)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, self.owner, tuple(map(self.owner.sub, self.coords, other.coords)))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.algebra, self.owner, tuple(map(self.owner.neg, self.coords)))

    def scale(self, c) -> "AlgElement":
        c = self.owner.coerce(c)
        return AlgElement(self.algebra, self.owner, tuple(self.owner.mul(c, x) for x in self.coords))

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        return alg_mul(self, other)

    def conj(self) -> "AlgElement":
        return alg_conj(self)

    def norm(self) -> RingValue:
        return alg_norm(self)

    def to_json(self):
        f = self.owner.value_to_json
        c = [f(x) for x in self.coords]
        if self.algebra == QUATERNION:
            return [c[:2], c[2:]]
        return {"a": c[0], "x": c[1:4], "y": c[4:7], "b": c[7]}

    @classmethod
    def from_json(cls, algebra: str, ring: Ring, obj) -> "AlgElement":
        algebra = algebra_name(algebra)
        f = ring.value_from_json
        if algebra == QUATERNION:
            return cls(algebra, ring, tuple(f(x) for row in obj for x in row))
        return cls(algebra, ring, (f(obj["a"]), *map(f, obj["x"]), *map(f, obj["y"]), f(obj["b"])))


def _cross(ring: Ring, x, y):
    m, s = ring.mul, ring.sub
    return (
        s(m(x[1], y[2]), m(x[2], y[1])),
        s(m(x[2], y[0]), m(x[0], y[2])),
        s(m(x[0], y[1]), m(x[1], y[0])),
    )


def _dot3(ring: Ring, x, y):
    return ring.add(ring.add(ring.mul(x[0], y[0]), ring.mul(x[1], y[1])), ring.mul(x[2], y[2]))


def alg_mul(alpha: AlgElement, beta: AlgElement) -> AlgElement:
    alpha._check(beta)
    r = alpha.owner
    add, sub, mul = r.add, r.sub, r.mul
    if alpha.algebra == QUATERNION:
        return AlgElement.quaternion(alpha.as_matrix() @ beta.as_matrix())
    a, x, y, b = alpha.coords[0], alpha.coords[1:4], alpha.coords[4:7], alpha.coords[7]
    a2, x2, y2, b2 = beta.coords[0], beta.coords[1:4], beta.coords[4:7], beta.coords[7]
    yy = _cross(r, y, y2)
    xx = _cross(r, x, x2)
    na = add(mul(a, a2), _dot3(r, x, y2))
    nx = tuple(sub(add(mul(a, x2[k]), mul(b2, x[k])), yy[k]) for k in range(3))
    ny = tuple(add(add(mul(a2, y[k]), mul(b, y2[k])), xx[k]) for k in range(3))
    nb = add(mul(b, b2), _dot3(r, y, x2))
    return AlgElement(OCTONION, r, (na, *nx, *ny, nb))


def alg_conj(alpha: AlgElement) -> AlgElement:
    r = alpha.owner
    if alpha.algebra == QUATERNION:
        a, b, c, d = alpha.coords
        return AlgElement(QUATERNION, r, (d, r.neg(b), r.neg(c), a))
    a, x, y, b = alpha.coords[0], alpha.coords[1:4], alpha.coords[4:7], alpha.coords[7]
    return AlgElement(OCTONION, r, (b, *map(r.neg, x), *map(r.neg, y), a))


def alg_norm(alpha: AlgElement) -> RingValue:
    r = alpha.owner
    if alpha.algebra == QUATERNION:
        a, b, c, d = alpha.coords
        return RingValue(r, r.sub(r.mul(a, d), r.mul(b, c)))
    a, x, y, b = alpha.coords[0], alpha.coords[1:4], alpha.coords[4:7], alpha.coords[7]
    return RingValue(r, r.sub(r.mul(a, b), _dot3(r, x, y)))


def octonion_from_point(ring: Ring, v: Sequence, w: Sequence) -> AlgElement:
    """The octonion attached to (v, w) in H(R^4)."""
    if len(v) != 4 or len(w) != 4:
        raise PreconditionError("octonions correspond to points of H(R^4)")
    return AlgElement.octonion(ring, v[0], v[1:], [ring.neg(ring.coerce(t)) for t in w[1:]], w[0])


def octonion_to_point(alpha: AlgElement) -> SpherePoint:
    r = alpha.owner
    c = alpha.coords
    return SpherePoint(r, (c[0], c[1], c[2], c[3]), (c[7], r.neg(c[4]), r.neg(c[5]), r.neg(c[6])))


def octonion_L(alpha: AlgElement) -> MatrixR:
    """Left multiplication by alpha as an 8x8 matrix acting on coordinate columns."""
    if alpha.algebra != OCTONION:
        raise PreconditionError("octonion_L needs an octonion")
    r = alpha.owner
    cols = []
    for k in range(8):
        e = AlgElement(OCTONION, r, tuple(r.one if i == k else r.zero for i in range(8)))
        cols.append(alg_mul(alpha, e).coords)
    return MatrixR(r, tuple(zip(*cols)))


def _slot(alpha: AlgElement) -> MatrixR:
    """The matrix standing in for alpha inside a Z-matrix."""
    return alpha.as_matrix() if alpha.algebra == QUATERNION else octonion_L(alpha)


# ---------------------------------------------------------------------------
# Z-matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZMatrix:
    """Z_i(α, v, w) for v = (a_1, ..., a_i), w = (b_1, ..., b_i).

    Level k puts a_k in the top-left and b_k in the bottom-right corner, so
    a_i is outermost.  ``q_levels[k-1]`` caches q(Z_k) = N(α) + a_1b_1 + ... + a_kb_k.
    """

    alpha: AlgElement
    v: tuple
    w: tuple
    q_levels: tuple

    @property
    def owner(self) -> Ring:
        return self.alpha.owner

    @property
    def level(self) -> int:
        return len(self.v)

    @property
    def q(self) -> RingValue:
        return RingValue(self.owner, self.q_levels[-1])

    def truncate(self, i: int) -> "ZMatrix":
        return ZMatrix(self.alpha, self.v[:i], self.w[:i], self.q_levels[:i])

    def matrices(self) -> tuple[MatrixR, MatrixR]:
        """(Z, bar Z) expanded over R: sizes 2**(i+1) (quaternion) or 8·2**i (octonion)."""
        r = self.owner
        slot, cslot = _slot(self.alpha), _slot(alpha_conj := alg_conj(self.alpha))
        del alpha_conj
        k = slot.dim
        a = MatrixR.scalar(r, k, self.v[0])
        b = MatrixR.scalar(r, k, self.w[0])
        z, zb = MatrixR.block(a, slot, -cslot, b), MatrixR.block(b, -slot, cslot, a)
        for ai, bi in zip(self.v[1:], self.w[1:]):
            d = z.dim
            a = MatrixR.scalar(r, d, ai)
            b = MatrixR.scalar(r, d, bi)
            z, zb = MatrixR.block(a, z, -zb, b), MatrixR.block(b, -z, zb, a)
        return z, zb

    def to_json(self) -> dict:
        f = self.owner.value_to_json
        return {
            "ring": self.owner.to_json(),
            "algebra": self.alpha.algebra,
            "alpha": self.alpha.to_json(),
            "v": [f(x) for x in self.v],
            "w": [f(x) for x in self.w],
        }

    @classmethod
    def from_json(cls, obj: dict, algebra: str | None = None) -> "ZMatrix":
        from .rings import ring_from_json

        ring = ring_from_json(obj["ring"])
        algebra = algebra_name(algebra or obj["algebra"])
        alpha = AlgElement.from_json(algebra, ring, obj["alpha"])
        f = ring.value_from_json
        return z_matrix(alpha, [f(x) for x in obj["v"]], [f(x) for x in obj["w"]])


def z_matrix(alpha: AlgElement, v: Sequence, w: Sequence) -> ZMatrix:
    r = alpha.owner
    if len(v) != len(w):
        raise PreconditionError("v and w must have the same length")
    if not v:
        raise PreconditionError("Z-matrices need at least one coordinate pair")
    v = tuple(r.coerce(x) for x in v)
    w = tuple(r.coerce(x) for x in w)
    q = alg_norm(alpha).payload
    qs = []
    for a, b in zip(v, w):
        q = r.add(q, r.mul(a, b))
        qs.append(q)
    return ZMatrix(alpha, v, w, tuple(qs))


def compose(x: ZMatrix, y: ZMatrix) -> ZMatrix:
    """X ⊙ Y for Z-matrices over the same fixed row v (any level)."""
    if x.alpha.algebra != y.alpha.algebra or x.owner != y.owner:
        raise PreconditionError("operands live in different algebras")
    if x.level != y.level:
        raise PreconditionError("operands have different levels")
    r = x.owner
    if x.v != y.v:
        raise PreconditionError("⊙ is only defined for a shared row v")
    i = x.level
    if i == 1:
        inner_alpha, inner_w = alg_mul(x.alpha, y.alpha), ()
    else:
        inner = compose(x.truncate(i - 1), y.truncate(i - 1))
        inner_alpha, inner_w = inner.alpha, inner.w
    a, b, b2 = x.v[-1], x.w[-1], y.w[-1]
    qx, qy = x.q_levels[-1], y.q_levels[-1]
    corner = r.sub(r.add(r.mul(b, qy), r.mul(b2, qx)), r.mul(r.mul(a, b), b2))
    return z_matrix(inner_alpha, x.v, inner_w + (corner,))


def compose_plane(x: ZMatrix, y: ZMatrix) -> ZMatrix:
    if x.level != 1 or y.level != 1:
        raise PreconditionError("compose_plane works on level-1 Z-matrices")
    if x.v != y.v:
        raise PreconditionError("⊙ needs the same a-coordinate on both sides")
    return compose(x, y)


def compose_recursive(x: ZMatrix, y: ZMatrix) -> ZMatrix:
    return compose(x, y)


def plane_identity(algebra: str, ring: Ring, a) -> ZMatrix:
    """(a, 1; -1, 0), the two-sided identity for ⊙ at level 1 (associative case)."""
    return z_matrix(AlgElement.one(algebra, ring), (a,), (0,))


# ---------------------------------------------------------------------------
# Unimodular rows through split quaternions
# ---------------------------------------------------------------------------


def quaternion_of_pair(ring: Ring, v: Sequence, w: Sequence) -> AlgElement:
    """S₁((v1, v2), (w1, w2)) = [[v1, v2], [-w2, w1]] as a split quaternion."""
    return AlgElement.of(QUATERNION, ring, (v[0], v[1], ring.neg(ring.coerce(w[1])), w[0]))


def pair_of_quaternion(alpha: AlgElement) -> tuple[tuple, tuple]:
    r = alpha.owner
    p, q, c, d = alpha.coords
    return (p, q), (d, r.neg(c))


def suslin_plane_compose(p1: SpherePoint, p2: SpherePoint) -> SpherePoint:
    """Compose two points of H(R^3) sharing a₁ through their Suslin matrices S₂."""
    if p1.n != 3 or p2.n != 3:
        raise PreconditionError("plane composition of Suslin matrices needs n = 3")
    r = p1.owner
    x = z_matrix(quaternion_of_pair(r, p1.v[1:], p1.w[1:]), p1.v[:1], p1.w[:1])
    y = z_matrix(quaternion_of_pair(r, p2.v[1:], p2.w[1:]), p2.v[:1], p2.w[:1])
    z = compose_plane(x, y)
    tv, tw = pair_of_quaternion(z.alpha)
    return SpherePoint(r, z.v + tv, z.w + tw)


def vdk_z_matrix(p: SpherePoint) -> ZMatrix:
    """Z-matrix of p with coordinates 1, 2 in the quaternion slot and 3..n as levels 1..n-2."""
    r = p.owner
    return z_matrix(quaternion_of_pair(r, p.v[:2], p.w[:2]), p.v[2:], p.w[2:])


def vdk_beta(p2: SpherePoint) -> MatrixR:
    """β = [[c₁, c₂], [-d₂, d₁]] from v₂ = (c₁, c₂, ...), w₂ = (d₁, d₂, ...)."""
    r = p2.owner
    return MatrixR(r, ((p2.v[0], p2.v[1]), (r.neg(p2.w[1]), p2.w[0])))


def vdk_compose(p1: SpherePoint, p2: SpherePoint) -> SpherePoint:
    """Compose unimodular rows v₁ = (a₁, a₂, a₃, ...), v₂ = (c₁, c₂, a₃, ...) with ⊙.

    Returns (v₃, w₃); v₃ = ((a₁, a₂)·β, a₃, ..., a_n).
    """
    r = p1.owner
    if p1.n != p2.n or p1.n < 3:
        raise PreconditionError("need two points of the same length n >= 3")
    if not (p1.is_unit() and p2.is_unit()):
        raise PreconditionError("both points must satisfy v·wᵀ = 1")
    if p1.v[2:] != p2.v[2:]:
        raise PreconditionError("rows must agree in coordinates 3..n")
    z = compose(vdk_z_matrix(p1), vdk_z_matrix(p2))
    tv, tw = pair_of_quaternion(z.alpha)
    out = SpherePoint(r, tv + z.v, tw + z.w)
    beta = vdk_beta(p2)
    pq = tuple(r.add(r.mul(p1.v[0], beta[0, k]), r.mul(p1.v[1], beta[1, k])) for k in range(2))
    if out.v != pq + p1.v[2:]:
        raise InconsistencyError("⊙ disagrees with (a₁, a₂)·β")
    return out


# ---------------------------------------------------------------------------
# Clifford embeddings of A ⊕ H(R^n)
# ---------------------------------------------------------------------------


def clifford_phi(z: ZMatrix) -> MatrixR:
    m, mb = z.matrices()
    zero = MatrixR.zeros(z.owner, m.dim)
    return MatrixR.block(zero, m, mb, zero)


def polar(x: ZMatrix, y: ZMatrix) -> RingValue:
    """<x, y> = q(x + y) - q(x) - q(y) on A ⊕ H(R^n)."""
    r = x.owner
    s = z_matrix(x.alpha + y.alpha, [r.add(a, b) for a, b in zip(x.v, y.v)], [r.add(a, b) for a, b in zip(x.w, y.w)])
    return s.q - x.q - y.q


def rank_identities(algebra: str, n: int) -> dict:
    """Ranks of Cl(A ⊕ H(R^n)) and of the target matrix algebra, as integers."""
    algebra = algebra_name(algebra)
    rank_a = 4 if algebra == QUATERNION else 8
    # the target is M_{2^{n+1}}(A) or M_{2^{n+1}}(End O)
    coeff_rank = 4 if algebra == QUATERNION else 64
    rank_v = rank_a + 2 * n
    return {
        "rank_V": rank_v,
        "clifford_rank": 2 ** rank_v,
        "matrix_rank": (2 ** (n + 1)) ** 2 * coeff_rank,
        "expected": 2 ** (2 * n + 4) if algebra == QUATERNION else 2 ** (2 * n + 8),
    }


def clifford_embed_check(alpha: AlgElement, v: Sequence, w: Sequence, other: ZMatrix | None = None) -> bool:
    """phi(α, v, w)² = q·I, optionally the polarized law against ``other``,
    and the rank bookkeeping for this n."""
    x = z_matrix(alpha, v, w)
    phi = clifford_phi(x)
    ok = (phi @ phi).is_scalar(x.q.payload)
    if other is not None:
        psi = clifford_phi(other)
        ok = ok and (phi @ psi + psi @ phi).is_scalar(polar(x, other).payload)
    ranks = rank_identities(alpha.algebra, x.level)
    ok = ok and ranks["clifford_rank"] == ranks["matrix_rank"] == ranks["expected"]
    return ok


# ---------------------------------------------------------------------------
# Octonion composition on the unit sphere of H(R^5)
# ---------------------------------------------------------------------------


def octonion_z_from_point(p: SpherePoint) -> ZMatrix:
    """X = (a, O; -Ō, b) for (v, w) = ((a, v₁), (b, w₁)) in H(R^5)."""
    if p.n != 5:
        raise PreconditionError("octonion sphere points live in H(R^5)")
    o = octonion_from_point(p.owner, p.v[1:], p.w[1:])
    return z_matrix(o, p.v[:1], p.w[:1])


def octonion_z_to_point(z: ZMatrix) -> SpherePoint:
    q = octonion_to_point(z.alpha)
    return SpherePoint(z.owner, z.v + q.v, z.w + q.w)


def octonion_sphere_compose(x: ZMatrix, y: ZMatrix) -> ZMatrix:
    if x.alpha.algebra != OCTONION or y.alpha.algebra != OCTONION:
        raise PreconditionError("octonion_sphere_compose needs octonion Z-matrices")
    one = RingValue(x.owner, x.owner.one)
    if x.q != one or y.q != one:
        raise PreconditionError("both operands must lie on the unit sphere")
    return compose_plane(x, y)


def find_nonassociative_triple(ring: Ring, max_support: int = 3):
    """Search unit octonion Z-matrices (a = b = 0) with small support for
    (X ⊙ Y) ⊙ W != X ⊙ (Y ⊙ W).  Returns the first triple found, else None."""
    elems = []
    values = list(ring.elements())
    for support in itertools.combinations(range(8), max_support):
        for vals in itertools.product(values[1:], repeat=max_support):
            coords = [ring.zero] * 8
            for k, val in zip(support, vals):
                coords[k] = val
            o = AlgElement(OCTONION, ring, tuple(coords))
            if o.norm() == 1:
                elems.append(z_matrix(o, (0,), (0,)))
    for x, y, w in itertools.product(elems, repeat=3):
        if compose(compose(x, y), w) != compose(x, compose(y, w)):
            return x, y, w
    return None
