"""Elementary, elementary orthogonal and elementary Spin generators and their actions.

Conventions: indices are 1-based in the public API (matching E_ij notation);
rows act on the right, ``v -> v·σ``; a word ``[g1, g2, ...]`` acts by applying
``g1`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .clifford import is_odd, phi_matrix
from .errors import InconsistencyError, PreconditionError
from .matrix import MatrixR, mat_prod, outer, row_times, vec_sub
from .rings import Ring, RingValue
from .suslin import SpherePoint, basis_unit, decode_suslin, suslin_pair

SUSLIN_WITNESS = "suslin-witness: I + uᵀx with x·uᵀ = 0, elementary for n >= 3 by Suslin's theorem"


# ---------------------------------------------------------------------------
# E_n(R)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElemFactor:
    """One factor of an elementary word.

    ``kind == "E"`` is E_ij(lam); ``kind == "block"`` is an opaque unipotent
    factor whose membership in E_n(R) is a cited fact, not a computed one.
    """

    kind: str
    i: int = 0
    j: int = 0
    lam: object = None
    matrix: MatrixR | None = field(default=None, repr=False)
    inverse: MatrixR | None = field(default=None, repr=False)
    provenance: str = ""

    def body(self, ring: Ring, n: int) -> MatrixR:
        if self.kind == "E":
            return _elementary(ring, n, self.i, self.j, self.lam)
        return self.matrix

    def inverted(self, ring: Ring) -> "ElemFactor":
        if self.kind == "E":
            return ElemFactor("E", self.i, self.j, ring.neg(self.lam))
        return ElemFactor("block", matrix=self.inverse, inverse=self.matrix, provenance=self.provenance)

    def to_json(self, ring: Ring) -> dict:
        if self.kind == "E":
            return {"i": self.i, "j": self.j, "lambda": ring.value_to_json(self.lam)}
        return {"block": self.matrix.to_json(), "provenance": self.provenance}


def _elementary(ring: Ring, n: int, i: int, j: int, lam) -> MatrixR:
    rows = [[ring.one if r == c else ring.zero for c in range(n)] for r in range(n)]
    rows[i - 1][j - 1] = ring.add(rows[i - 1][j - 1], lam)
    return MatrixR(ring, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class ElemMatrix:
    owner: Ring
    n: int
    body: MatrixR
    word: tuple = ()

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "ElemMatrix":
        return cls(ring, n, MatrixR.identity(ring, n), ())

    @classmethod
    def from_word(cls, ring: Ring, n: int, word: Sequence[ElemFactor]) -> "ElemMatrix":
        body = mat_prod([f.body(ring, n) for f in word], ring, n)
        return cls(ring, n, body, tuple(word))

    def __matmul__(self, other: "ElemMatrix") -> "ElemMatrix":
        return ElemMatrix(self.owner, self.n, self.body @ other.body, self.word + other.word)

    def inverse(self) -> "ElemMatrix":
        word = tuple(f.inverted(self.owner) for f in reversed(self.word))
        return ElemMatrix.from_word(self.owner, self.n, word)

    def inverse_transpose(self) -> MatrixR:
        return self.inverse().body.transpose()

    def to_json(self) -> dict:
        return {
            "matrix": self.body.to_json(),
            "word": [f.to_json(self.owner) for f in self.word],
            "provenance": sorted({f.provenance for f in self.word if f.provenance}),
        }


def elem_generator(i: int, j: int, lam, n: int, ring: Ring) -> ElemMatrix:
    """E_ij(lam) = I + lam e_ij."""
    if i == j:
        raise PreconditionError("elementary generators need i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise PreconditionError(f"indices ({i}, {j}) outside 1..{n}")
    return ElemMatrix.from_word(ring, n, [ElemFactor("E", i, j, ring.coerce(lam))])


def unipotent_factor(ring: Ring, u: Sequence, x: Sequence, provenance: str = SUSLIN_WITNESS) -> ElemFactor:
    """The factor I + uᵀx, assuming x·uᵀ = 0 so that its inverse is I - uᵀx."""
    n = len(u)
    nil = outer(ring, u, x)
    if not (nil @ nil).is_zero():
        raise PreconditionError("I + uᵀx is only unipotent when x·uᵀ = 0")
    eye = MatrixR.identity(ring, n)
    return ElemFactor("block", matrix=eye + nil, inverse=eye - nil, provenance=provenance)


# ---------------------------------------------------------------------------
# EO_2n(R)
# ---------------------------------------------------------------------------


def partner(k: int, n: int) -> int:
    """The involution ∂ = (1 n+1)(2 n+2)...(n 2n) on 1..2n."""
    return k + n if k <= n else k - n


@dataclass(frozen=True)
class EOMatrix:
    owner: Ring
    n: int
    body: MatrixR
    word: tuple = ()

    def __matmul__(self, other: "EOMatrix") -> "EOMatrix":
        return EOMatrix(self.owner, self.n, self.body @ other.body, self.word + other.word)

    def act(self, p: SpherePoint) -> SpherePoint:
        return apply_orthogonal(self.body, p)


def _eo_body(ring: Ring, n: int, i: int, j: int, lam) -> MatrixR:
    rows = [[ring.one if r == c else ring.zero for c in range(2 * n)] for r in range(2 * n)]
    rows[i - 1][j - 1] = ring.add(rows[i - 1][j - 1], lam)
    pi, pj = partner(i, n), partner(j, n)
    rows[pj - 1][pi - 1] = ring.sub(rows[pj - 1][pi - 1], lam)
    return MatrixR(ring, tuple(tuple(r) for r in rows))


def eo_generator(i: int, j: int, lam, n: int, ring: Ring) -> EOMatrix:
    """E°_ij(lam) = I_2n + lam(e_ij - e_∂(j)∂(i)).

    Pairs with j = ∂(i) are accepted; the two terms cancel and the result is
    the identity.
    """
    if i == j or not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise PreconditionError(f"invalid index pair ({i}, {j}) for EO_{2 * n}")
    lam = ring.coerce(lam)
    return EOMatrix(ring, n, _eo_body(ring, n, i, j, lam), (ElemFactor("E", i, j, lam),))


def apply_orthogonal(m: MatrixR, p: SpherePoint) -> SpherePoint:
    """The row action (v, w) -> (v, w)·M on H(R^n)."""
    x = row_times(p.owner, p.v + p.w, m)
    return SpherePoint(p.owner, x[: p.n], x[p.n:])


def hyperbolic_embed(eps: ElemMatrix) -> EOMatrix:
    """H(ε) = diag(ε, ε^{⊺,-1}); maps E_ij(λ) to E°_ij(λ)."""
    ring, n = eps.owner, eps.n
    body = MatrixR.block_diag(eps.body, eps.inverse_transpose())
    word = []
    for f in eps.word:
        if f.kind == "E":
            word.append(f)
        else:
            hb = MatrixR.block_diag(f.matrix, f.inverse.transpose())
            hi = MatrixR.block_diag(f.inverse, f.matrix.transpose())
            word.append(ElemFactor("block", matrix=hb, inverse=hi, provenance=f.provenance))
    return EOMatrix(ring, n, body, tuple(word))


# ---------------------------------------------------------------------------
# Epin_2n(R)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpinGenerator:
    """The element 1 + λ·x₁·x_i with x₁ ∈ {e₁, f₁} and x_i ∈ {e_i, f_i}, i >= 2."""

    first: str
    second_kind: str
    second_index: int
    lam: object
    n: int
    owner: Ring

    def __post_init__(self):
        if self.first not in ("e", "f") or self.second_kind not in ("e", "f"):
            raise PreconditionError("first and second_kind must be 'e' or 'f'")
        if self.n < 3:
            raise PreconditionError("Epin generators are used for n >= 3")
        if not 2 <= self.second_index <= self.n:
            raise PreconditionError(f"second index must lie in 2..{self.n}")

    def inverse(self) -> "EpinGenerator":
        return EpinGenerator(self.first, self.second_kind, self.second_index,
                             self.owner.neg(self.lam), self.n, self.owner)

    def to_json(self) -> dict:
        return {
            "first": f"{self.first}1",
            "kind": self.second_kind,
            "index": self.second_index,
            "lambda": self.owner.value_to_json(self.lam),
        }

    @classmethod
    def from_json(cls, obj: dict, n: int, ring: Ring) -> "EpinGenerator":
        return cls(obj["first"][0], obj["kind"], int(obj["index"]),
                   ring.value_from_json(obj["lambda"]), n, ring)


def epin_generators(ring: Ring, n: int, lambdas: Sequence) -> list[EpinGenerator]:
    """The generating set 1 + λx₁x_i for every λ in ``lambdas``."""
    return [
        EpinGenerator(a, b, i, ring.coerce(lam), n, ring)
        for a in "ef"
        for b in "ef"
        for i in range(2, n + 1)
        for lam in lambdas
    ]


def _basis_point(ring: Ring, kind: str, i: int, n: int) -> SpherePoint:
    e = tuple(ring.one if k == i - 1 else ring.zero for k in range(n))
    z = (ring.zero,) * n
    return SpherePoint(ring, e, z) if kind == "e" else SpherePoint(ring, z, e)


def epin_matrix(g: EpinGenerator) -> MatrixR:
    """phi(1 + λx₁x_i) = I + λ·phi(x₁)·phi(x_i), a block-diagonal 2**n matrix."""
    ring, n = g.owner, g.n
    x1 = phi_matrix(_basis_point(ring, g.first, 1, n))
    xi = phi_matrix(_basis_point(ring, g.second_kind, g.second_index, n))
    return MatrixR.identity(ring, 2 ** n) + (x1 @ xi).scale(g.lam)


def epin_blocks(g: EpinGenerator) -> tuple[MatrixR, MatrixR]:
    """The two diagonal blocks (1 - λX₁X_i, 1 - λ·bar X₁·bar X_i) in closed form."""
    ring, n = g.owner, g.n
    x1 = basis_unit(g.first.upper(), 1, n, ring).body
    xi = basis_unit(g.second_kind.upper(), g.second_index, n, ring).body
    bx1 = suslin_pair(ring, *_basis_vw(ring, g.first, 1, n))[1]
    bxi = suslin_pair(ring, *_basis_vw(ring, g.second_kind, g.second_index, n))[1]
    eye = MatrixR.identity(ring, x1.dim)
    return eye - (x1 @ xi).scale(g.lam), eye - (bx1 @ bxi).scale(g.lam)


def _basis_vw(ring: Ring, kind: str, i: int, n: int):
    p = _basis_point(ring, kind, i, n)
    return p.v, p.w


def conjugate(g: EpinGenerator, m: MatrixR) -> MatrixR:
    return epin_matrix(g) @ m @ epin_matrix(g.inverse())


def act_on_point(g: EpinGenerator, p: SpherePoint) -> SpherePoint:
    """The point p' with phi(p') = g·phi(p)·g⁻¹."""
    if p.n != g.n or p.owner != g.owner:
        raise PreconditionError("generator and point disagree on n or ring")
    c = conjugate(g, phi_matrix(p))
    if not is_odd(c):
        raise InconsistencyError("conjugate is not odd")
    a, top, bottom, d = c.quadrants()
    q = decode_suslin(top)
    if suslin_pair(p.owner, q.v, q.w)[1] != bottom:
        raise InconsistencyError("conjugate is not of the form phi(p')")
    return q


def closed_form_action(g: EpinGenerator, p: SpherePoint) -> SpherePoint:
    """The same action as :func:`act_on_point`, via explicit coordinate updates."""
    ring = p.owner
    lam, i = g.lam, g.second_index - 1
    v, w = list(p.v), list(p.w)
    a1, b1, ai, bi = p.v[0], p.w[0], p.v[i], p.w[i]
    add, sub, mul = ring.add, ring.sub, ring.mul
    case = (g.first, g.second_kind)
    if case == ("e", "e"):
        v[0] = add(a1, mul(lam, bi))
        v[i] = sub(ai, mul(lam, b1))
    elif case == ("e", "f"):
        v[0] = add(a1, mul(lam, ai))
        w[i] = sub(bi, mul(lam, b1))
    elif case == ("f", "e"):
        v[i] = sub(ai, mul(lam, a1))
        w[0] = add(b1, mul(lam, bi))
    else:
        w[0] = add(b1, mul(lam, ai))
        w[i] = sub(bi, mul(lam, a1))
    return SpherePoint(ring, tuple(v), tuple(w))


def sigma_for(g: EpinGenerator, p: SpherePoint, image: SpherePoint) -> ElemMatrix:
    """An elementary σ with image = (v·σ, w·σ^{⊺,-1}); needs q(p) = 1.

    Two generator types move a single coordinate of each row and give a single
    elementary factor.  The other two move only v (resp. only w); there σ is a
    Suslin witness built from the displacement, so it depends on the point.
    """
    ring, n = p.owner, p.n
    if not p.is_unit():
        raise PreconditionError("σ extraction needs q(v, w) = 1")
    case = (g.first, g.second_kind)
    k = g.second_index
    if case == ("e", "f"):
        return elem_generator(k, 1, g.lam, n, ring)
    if case == ("f", "e"):
        return elem_generator(1, k, ring.neg(g.lam), n, ring)
    if case == ("e", "e"):
        # σ = I + wᵀ(v' - v)
        f = unipotent_factor(ring, p.w, vec_sub(ring, image.v, p.v))
    else:
        # σ = I - (w' - w)ᵀ v
        dw = vec_sub(ring, image.w, p.w)
        f = unipotent_factor(ring, tuple(ring.neg(x) for x in dw), p.v)
    return ElemMatrix.from_word(ring, n, [f])


def act_by_elementary(sigma: ElemMatrix, p: SpherePoint) -> SpherePoint:
    """(v·σ, w·σ^{⊺,-1})."""
    ring = p.owner
    return SpherePoint(ring, row_times(ring, p.v, sigma.body), row_times(ring, p.w, sigma.inverse_transpose()))


def extract_sigma(word: Sequence[EpinGenerator], p: SpherePoint) -> tuple[SpherePoint, ElemMatrix]:
    """Act by ``word`` on a unit-sphere point and return (image, σ) with image = (vσ, wσ^{⊺,-1}).

    σ is accumulated generator by generator, each factor computed at the point
    the generator actually acts on.
    """
    ring, n = p.owner, p.n
    if n < 3:
        raise PreconditionError("σ extraction needs n >= 3")
    if not p.is_unit():
        raise PreconditionError("σ extraction needs q(v, w) = 1")
    sigma = ElemMatrix.identity(ring, n)
    cur = p
    for g in word:
        nxt = act_on_point(g, cur)
        s = sigma_for(g, cur, nxt)
        if act_by_elementary(s, cur) != nxt:
            raise InconsistencyError(f"σ for {g} does not reproduce the conjugation action")
        sigma = sigma @ s
        cur = nxt
    return cur, sigma


def pi_matrix(g: EpinGenerator) -> MatrixR:
    """The 2n x 2n matrix of v ↦ g·v·g⁻¹ on H(R^n), read off from basis points."""
    ring, n = g.owner, g.n
    rows = []
    for kind in "ef":
        for i in range(1, n + 1):
            img = act_on_point(g, _basis_point(ring, kind, i, n))
            rows.append(img.v + img.w)
    return MatrixR(ring, tuple(rows))


# ---------------------------------------------------------------------------
# Transitivity on the fibres of (v, w) -> v
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransitiveWitness:
    epsilon: ElemMatrix
    orthogonal: EOMatrix


def transitive_witness(v: Sequence, w1: Sequence, w2: Sequence, ring: Ring) -> TransitiveWitness:
    """ε = I + vᵀ(w₂ - w₁), with w₁ε = w₂ and v·ε^{⊺,-1} = v.

    ``orthogonal`` is H(ε^{⊺,-1}) = diag(ε^{⊺,-1}, ε), which carries (v, w₁) to (v, w₂).
    """
    v, w1, w2 = (tuple(ring.coerce(x) for x in r) for r in (v, w1, w2))
    n = len(v)
    if not (len(w1) == len(w2) == n):
        raise PreconditionError("length mismatch")
    one = ring.one
    for w in (w1, w2):
        if not ring.is_zero(ring.sub(_dot(ring, v, w), one)):
            raise PreconditionError("need v·w₁ᵀ = v·w₂ᵀ = 1")
    dw = vec_sub(ring, w2, w1)
    eps = ElemMatrix.from_word(ring, n, [unipotent_factor(ring, v, dw)])
    # ε^{⊺,-1} = I - (w₂ - w₁)ᵀ v
    eps_ti = ElemMatrix.from_word(ring, n, [unipotent_factor(ring, tuple(ring.neg(x) for x in dw), v)])
    return TransitiveWitness(eps, hyperbolic_embed(eps_ti))


def _dot(ring, v, w):
    from .matrix import dot

    return dot(ring, v, w)


def word_matrix(word: Sequence[EpinGenerator], ring: Ring, n: int) -> MatrixR:
    """phi-image of a word; the first generator acts first, so it is the rightmost factor."""
    return mat_prod([epin_matrix(g) for g in reversed(word)], ring, 2 ** n)


def lam_value(g: EpinGenerator) -> RingValue:
    return RingValue(g.owner, g.lam)


# ---------------------------------------------------------------------------
# Unipotent block actions on a single Suslin matrix
# ---------------------------------------------------------------------------


def block_action(kind: str, k: int, lam, p: SpherePoint, display: int) -> tuple[SpherePoint, ElemMatrix]:
    """Multiply S(v, w) by the unipotent blocks built from X = -λ·X_k.

    ``display == 1`` computes [[1, X], [0, 1]]·S·[[1, 0], [-X̄, 1]], ``display == 2``
    the same with the two factors swapped.  Returns the point (v', w') read
    off the product together with an elementary ε satisfying
    (v', w') = (vε, wε^{⊺,-1}).  Needs q(v, w) = 1 and k in 1..n-1.
    """
    ring, n = p.owner, p.n
    if kind not in ("E", "F") or display not in (1, 2):
        raise PreconditionError("kind must be E or F and display 1 or 2")
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k must lie in 1..{n - 1}")
    if not p.is_unit():
        raise PreconditionError("the block action needs v·wᵀ = 1")
    lam = ring.coerce(lam)
    e = tuple(ring.neg(lam) if t == k - 1 else ring.zero for t in range(n - 1))
    z = (ring.zero,) * (n - 1)
    x, xb = suslin_pair(ring, e, z) if kind == "E" else suslin_pair(ring, z, e)
    eye, zero = MatrixR.identity(ring, x.dim), MatrixR.zeros(ring, x.dim)
    upper = MatrixR.block(eye, x, zero, eye)
    lower = MatrixR.block(eye, zero, -xb, eye)
    s = suslin_pair(ring, p.v, p.w)[0]
    image = decode_suslin(upper @ s @ lower if display == 1 else lower @ s @ upper)
    j = k + 1
    if (kind, display) == ("F", 1):
        eps = elem_generator(j, 1, lam, n, ring)
    elif (kind, display) == ("E", 2):
        eps = elem_generator(1, j, ring.neg(lam), n, ring)
    elif (kind, display) == ("E", 1):
        # only v moves
        eps = ElemMatrix.from_word(ring, n, [unipotent_factor(ring, p.w, vec_sub(ring, image.v, p.v))])
    else:
        # only w moves
        dw = vec_sub(ring, image.w, p.w)
        eps = ElemMatrix.from_word(ring, n, [unipotent_factor(ring, tuple(ring.neg(t) for t in dw), p.v)])
    if act_by_elementary(eps, p) != image:
        raise InconsistencyError("block action is not (vε, wε^{⊺,-1})")
    return image, eps
