"""Suslin matrices, the bar involution, the J_n matrices and the star involution."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import PreconditionError
from .matrix import MatrixR, dot
from .rings import Ring, RingValue, ring_from_json

J_MAX_LEVEL = 7


@dataclass(frozen=True)
class SpherePoint:
    """A point (v, w) of the hyperbolic space H(R^n)."""

    owner: Ring
    v: tuple
    w: tuple

    def __post_init__(self):
        if len(self.v) != len(self.w):
            raise PreconditionError(f"v has length {len(self.v)} but w has length {len(self.w)}")
        if not self.v:
            raise PreconditionError("points need n >= 1")

    @classmethod
    def of(cls, ring: Ring, v: Sequence, w: Sequence) -> "SpherePoint":
        return cls(ring, tuple(ring.coerce(x) for x in v), tuple(ring.coerce(x) for x in w))

    @property
    def n(self) -> int:
        return len(self.v)

    def q(self):
        """v·wᵀ as a payload."""
        return dot(self.owner, self.v, self.w)

    def is_unit(self) -> bool:
        return self.owner.is_zero(self.owner.sub(self.q(), self.owner.one))

    def swapped(self) -> "SpherePoint":
        return SpherePoint(self.owner, self.w, self.v)

    def key(self) -> bytes:
        s = self.owner.serialize
        return b"|".join(s(x) for x in self.v + self.w)

    def to_json(self) -> dict:
        f = self.owner.value_to_json
        return {"ring": self.owner.to_json(), "v": [f(x) for x in self.v], "w": [f(x) for x in self.w]}

    @classmethod
    def from_json(cls, obj: dict, ring: Ring | None = None) -> "SpherePoint":
        ring = ring or ring_from_json(obj["ring"])
        f = ring.value_from_json
        return cls(ring, tuple(f(x) for x in obj["v"]), tuple(f(x) for x in obj["w"]))


@dataclass(frozen=True)
class SuslinMatrix:
    n: int
    body: MatrixR
    source: SpherePoint
    barred: bool = False

    def to_json(self) -> dict:
        return {"n": self.n, "matrix": self.body.to_json(), "bar": self.barred}


def suslin_pair(ring: Ring, v: Sequence, w: Sequence) -> tuple[MatrixR, MatrixR]:
    """Return ``(S_{n-1}(v, w), bar S_{n-1}(v, w))`` as matrices of size 2**(n-1)."""
    if len(v) != len(w):
        raise PreconditionError("length mismatch between v and w")
    if len(v) == 1:
        return MatrixR(ring, ((v[0],),)), MatrixR(ring, ((w[0],),))
    s, b = suslin_pair(ring, v[1:], w[1:])
    d = s.dim
    a1 = MatrixR.scalar(ring, d, v[0])
    b1 = MatrixR.scalar(ring, d, w[0])
    return MatrixR.block(a1, s, -b, b1), MatrixR.block(b1, -s, b, a1)


def suslin(p: SpherePoint) -> SuslinMatrix:
    s, _ = suslin_pair(p.owner, p.v, p.w)
    return SuslinMatrix(p.n, s, p)


def suslin_bar(s: SuslinMatrix) -> SuslinMatrix:
    p = s.source
    body, bar = suslin_pair(p.owner, p.v, p.w)
    return SuslinMatrix(s.n, body if s.barred else bar, p, not s.barred)


def suslin_matrix(ring: Ring, v: Sequence, w: Sequence) -> MatrixR:
    return suslin_pair(ring, tuple(ring.coerce(x) for x in v), tuple(ring.coerce(x) for x in w))[0]


def decode_suslin(m: MatrixR) -> SpherePoint:
    """Recover (v, w) from a matrix of the form S_{n-1}(v, w), n >= 2.

    Raises :class:`PreconditionError` if the matrix is not a Suslin matrix.
    """
    ring = m.owner
    d = m.dim
    if d < 2 or d & (d - 1):
        raise PreconditionError(f"dimension {d} is not a power of two >= 2")

    def rec(rows: tuple) -> tuple[list, list]:
        k = len(rows)
        if k == 2:
            return [rows[0][0], rows[0][1]], [rows[1][1], ring.neg(rows[1][0])]
        h = k // 2
        v, w = rec(tuple(r[h:] for r in rows[:h]))
        return [rows[0][0]] + v, [rows[k - 1][k - 1]] + w

    v, w = rec(m.rows)
    p = SpherePoint(ring, tuple(v), tuple(w))
    if suslin_pair(ring, p.v, p.w)[0] != m:
        raise PreconditionError("matrix is not a Suslin matrix")
    return p


def bar_of(m: MatrixR) -> MatrixR:
    """bar of an arbitrary Suslin matrix given only as a matrix."""
    p = decode_suslin(m)
    return suslin_pair(m.owner, p.v, p.w)[1]


@lru_cache(maxsize=None)
def _j_rows(n: int) -> tuple:
    if n == 0:
        return ((1,),)
    prev = _j_rows(n - 1)
    d = len(prev)
    zero = (0,) * d
    neg = tuple(tuple(-x for x in r) for r in prev)
    if n % 2 == 0:
        return tuple(r + zero for r in prev) + tuple(zero + r for r in neg)
    return tuple(zero + r for r in prev) + tuple(r + zero for r in neg)


def j_matrix(n: int, ring: Ring | None = None) -> MatrixR:
    """Suslin's J_n, a signed permutation matrix of size 2**n."""
    from .rings import ZZ

    if not 0 <= n <= J_MAX_LEVEL:
        raise PreconditionError(f"J_n is available for 0 <= n <= {J_MAX_LEVEL}, got {n}")
    ring = ring or ZZ
    return MatrixR.from_rows(ring, _j_rows(n))


def star(m: MatrixR, n: int) -> MatrixR:
    """M* = J_n Mᵀ J_nᵀ for M of size 2**n."""
    if m.dim != 2 ** n:
        raise PreconditionError(f"star at level {n} needs a {2 ** n}x{2 ** n} matrix, got {m.dim}")
    j = j_matrix(n, m.owner)
    return j @ m.transpose() @ j.transpose()


def level_of(m: MatrixR) -> int:
    d = m.dim
    if d & (d - 1):
        raise PreconditionError(f"dimension {d} is not a power of two")
    return d.bit_length() - 1


@dataclass(frozen=True)
class BasisUnit:
    kind: str
    index: int
    n: int
    body: MatrixR = field(repr=False)


def basis_unit(kind: str, i: int, n: int, ring: Ring | None = None) -> BasisUnit:
    """E_i = S_{n-1}(e_i, 0) or F_i = S_{n-1}(0, f_i); ``i`` is 1-based."""
    from .rings import ZZ

    ring = ring or ZZ
    if kind not in ("E", "F"):
        raise PreconditionError(f"kind must be 'E' or 'F', got {kind!r}")
    if not 1 <= i <= n:
        raise PreconditionError(f"index {i} outside 1..{n}")
    e = tuple(ring.one if k == i - 1 else ring.zero for k in range(n))
    z = (ring.zero,) * n
    v, w = (e, z) if kind == "E" else (z, e)
    return BasisUnit(kind, i, n, suslin_pair(ring, v, w)[0])


def norm_value(p: SpherePoint) -> RingValue:
    return RingValue(p.owner, p.q())
