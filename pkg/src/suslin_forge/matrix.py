"""Dense square matrices over a :class:`~suslin_forge.rings.Ring`.

Entries are stored as canonical payloads in a tuple of row tuples.  Products
skip zero entries, which matters a lot for Suslin matrices: a row of
S_{n-1}(v, w) has at most n nonzero entries out of 2**(n-1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import RingMismatchError
from .rings import Ring, RingValue, ring_from_json


@dataclass(frozen=True, eq=False)
class MatrixR:
    owner: Ring
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("MatrixR must be square and non-empty")

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> "MatrixR":
        return cls(ring, tuple(tuple(ring.coerce(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "MatrixR":
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "MatrixR":
        z = ring.zero
        return cls(ring, tuple((z,) * n for _ in range(n)))

    @classmethod
    def scalar(cls, ring: Ring, n: int, c) -> "MatrixR":
        z = ring.zero
        c = ring.coerce(c)
        return cls(ring, tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, ring: Ring, n: int, i: int, j: int) -> "MatrixR":
        """Matrix unit e_ij (0-based indices)."""
        z, one = ring.zero, ring.one
        return cls(ring, tuple(tuple(one if (r, c) == (i, j) else z for c in range(n)) for r in range(n)))

    @classmethod
    def block(cls, a: "MatrixR", b: "MatrixR", c: "MatrixR", d: "MatrixR") -> "MatrixR":
        """Assemble ``[[a, b], [c, d]]`` from four equal-size blocks."""
        ring = a.owner
        for m in (b, c, d):
            _check_same(a, m)
        rows = [ra + rb for ra, rb in zip(a.rows, b.rows)]
        rows += [rc + rd for rc, rd in zip(c.rows, d.rows)]
        return cls(ring, tuple(rows))

    @classmethod
    def block_diag(cls, *blocks: "MatrixR") -> "MatrixR":
        ring = blocks[0].owner
        n = sum(b.dim for b in blocks)
        z = ring.zero
        rows = []
        offset = 0
        for b in blocks:
            if b.owner != ring:
                raise RingMismatchError("blocks from different rings")
            for r in b.rows:
                rows.append((z,) * offset + r + (z,) * (n - offset - b.dim))
            offset += b.dim
        return cls(ring, tuple(rows))

    # -- access --------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def value(self, i: int, j: int) -> RingValue:
        return RingValue(self.owner, self.rows[i][j])

    def sub_block(self, bi: int, bj: int, size: int) -> "MatrixR":
        """Block ``(bi, bj)`` when the matrix is cut into ``size`` x ``size`` tiles."""
        r0, c0 = bi * size, bj * size
        return MatrixR(self.owner, tuple(r[c0:c0 + size] for r in self.rows[r0:r0 + size]))

    def quadrants(self) -> tuple["MatrixR", "MatrixR", "MatrixR", "MatrixR"]:
        if self.dim % 2:
            raise ValueError("odd dimension has no quadrants")
        h = self.dim // 2
        return self.sub_block(0, 0, h), self.sub_block(0, 1, h), self.sub_block(1, 0, h), self.sub_block(1, 1, h)

    # -- arithmetic ----------------------------------------------------------
    def _map(self, f) -> "MatrixR":
        return MatrixR(self.owner, tuple(tuple(f(x) for x in r) for r in self.rows))

    def _zip(self, other: "MatrixR", f) -> "MatrixR":
        _check_same(self, other)
        return MatrixR(self.owner, tuple(tuple(f(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __add__(self, other: "MatrixR") -> "MatrixR":
        return self._zip(other, self.owner.add)

    def __sub__(self, other: "MatrixR") -> "MatrixR":
        return self._zip(other, self.owner.sub)

    def __neg__(self) -> "MatrixR":
        return self._map(self.owner.neg)

    def scale(self, c) -> "MatrixR":
        c = self.owner.coerce(c)
        mul = self.owner.mul
        return self._map(lambda x: mul(c, x))

    def __matmul__(self, other: "MatrixR") -> "MatrixR":
        _check_same(self, other)
        ring = self.owner
        red = ring.reduce
        z = ring.zero
        n = self.dim
        sparse_rows = [[(j, b) for j, b in enumerate(r) if b] for r in other.rows]
        out = []
        for r in self.rows:
            acc = [None] * n
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in sparse_rows[k]:
                    p = a * b
                    acc[j] = p if acc[j] is None else acc[j] + p
            out.append(tuple(z if x is None else red(x) for x in acc))
        return MatrixR(ring, tuple(out))

    def transpose(self) -> "MatrixR":
        return MatrixR(self.owner, tuple(zip(*self.rows)))

    @property
    def T(self) -> "MatrixR":
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self == MatrixR.identity(self.owner, self.dim)

    def is_scalar(self, c) -> bool:
        return self == MatrixR.scalar(self.owner, self.dim, c)

    def __eq__(self, other):
        if not isinstance(other, MatrixR):
            return NotImplemented
        return self.owner == other.owner and self.rows == other.rows

    def __hash__(self):
        return hash((self.owner, self.rows))

    def __repr__(self):
        body = "\n ".join("[" + ", ".join(self.owner.format(x) for x in r) + "]" for r in self.rows)
        return f"MatrixR({self.owner},\n[{body}])"

    # -- serialization -------------------------------------------------------
    def to_json(self) -> list:
        f = self.owner.value_to_json
        return [[f(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, ring: Ring, obj) -> "MatrixR":
        if isinstance(ring, dict):
            ring = ring_from_json(ring)
        f = ring.value_from_json
        return cls(ring, tuple(tuple(f(x) for x in r) for r in obj))


def _check_same(a: MatrixR, b: MatrixR) -> None:
    if a.owner != b.owner:
        raise RingMismatchError(f"matrices over {a.owner} and {b.owner}")
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a: MatrixR, b: MatrixR) -> MatrixR:
    return a @ b


def mat_prod(mats: Sequence[MatrixR], ring: Ring | None = None, dim: int | None = None) -> MatrixR:
    """Left-to-right product; the identity when ``mats`` is empty."""
    if not mats:
        return MatrixR.identity(ring, dim)
    out = mats[0]
    for m in mats[1:]:
        out = out @ m
    return out


# ---------------------------------------------------------------------------
# Determinants (division-free: the rings may have zero divisors)
# ---------------------------------------------------------------------------


def det_berkowitz(a: MatrixR):
    """Determinant via Berkowitz's algorithm, as a payload.

    Builds the characteristic polynomial of each leading principal submatrix
    from the previous one by a Toeplitz matrix-vector product; no divisions.
    """
    ring = a.owner
    add, mul, neg = ring.add, ring.mul, ring.neg
    z, one = ring.zero, ring.one
    A = a.rows
    n = a.dim
    # coefficients of det(xI - A_r), leading coefficient first
    coeffs = [one, neg(A[0][0])]
    for r in range(1, n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        # q = [1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C]
        q = [one, neg(A[r][r])]
        vec = col
        for _ in range(r):
            s = z
            for x, y in zip(row, vec):
                if x and y:
                    s = add(s, mul(x, y))
            q.append(neg(s))
            vec = [
                _dot(A[i][:r], vec, add, mul, z) for i in range(r)
            ]
        new = []
        for i in range(r + 2):
            s = z
            for j in range(min(i, r) + 1):
                if i - j < len(q):
                    s = add(s, mul(q[i - j], coeffs[j]))
            new.append(s)
        coeffs = new
    d = coeffs[n]
    return d if n % 2 == 0 else neg(d)


def _dot(xs, ys, add, mul, z):
    s = z
    for x, y in zip(xs, ys):
        if x and y:
            s = add(s, mul(x, y))
    return s


def det_cofactor(a: MatrixR):
    """Laplace expansion along the first row; intended for dim <= 8."""
    ring = a.owner

    def rec(rows: tuple, cols: tuple):
        if len(rows) == 1:
            return a.rows[rows[0]][cols[0]]
        r0 = rows[0]
        total = ring.zero
        for idx, c in enumerate(cols):
            x = a.rows[r0][c]
            if not x:
                continue
            minor = rec(rows[1:], cols[:idx] + cols[idx + 1:])
            term = ring.mul(x, minor)
            total = ring.sub(total, term) if idx % 2 else ring.add(total, term)
        return total

    idx = tuple(range(a.dim))
    return rec(idx, idx)


def det_leibniz(a: MatrixR):
    """Sum over permutations; an independent oracle for tiny matrices."""
    ring = a.owner
    n = a.dim
    total = ring.zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one
        for i, p in enumerate(perm):
            term = ring.mul(term, a.rows[i][p])
        total = ring.sub(total, term) if inv % 2 else ring.add(total, term)
    return total


def mat_det(a: MatrixR, method: str = "berkowitz") -> RingValue:
    if method == "berkowitz":
        d = det_berkowitz(a)
    elif method == "cofactor":
        if a.dim > 8:
            raise ValueError("cofactor expansion is limited to dim <= 8")
        d = det_cofactor(a)
    elif method == "leibniz":
        d = det_leibniz(a)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return RingValue(a.owner, d)


# ---------------------------------------------------------------------------
# Row-vector helpers.  Rows are plain tuples of payloads.
# ---------------------------------------------------------------------------


def dot(ring: Ring, v: Sequence, w: Sequence):
    if len(v) != len(w):
        raise ValueError("length mismatch")
    s = ring.zero
    for x, y in zip(v, w):
        s = ring.add(s, ring.mul(x, y))
    return s


def row_times(ring: Ring, v: Sequence, m: MatrixR) -> tuple:
    """The row vector v·M."""
    if len(v) != m.dim:
        raise ValueError("length mismatch")
    cols = m.transpose().rows
    return tuple(dot(ring, v, c) for c in cols)


def outer(ring: Ring, u: Sequence, v: Sequence) -> MatrixR:
    """The square matrix uᵀ v."""
    return MatrixR(ring, tuple(tuple(ring.mul(x, y) for y in v) for x in u))


def vec_sub(ring: Ring, v: Sequence, w: Sequence) -> tuple:
    return tuple(ring.sub(x, y) for x, y in zip(v, w))


def vec_add(ring: Ring, v: Sequence, w: Sequence) -> tuple:
    return tuple(ring.add(x, y) for x, y in zip(v, w))
