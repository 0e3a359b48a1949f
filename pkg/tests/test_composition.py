import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from suslin_forge.composition import (
    OCTONION,
    QUATERNION,
    AlgElement,
    ZMatrix,
    alg_conj,
    alg_mul,
    alg_norm,
    clifford_embed_check,
    compose,
    compose_plane,
    find_nonassociative_triple,
    octonion_from_point,
    octonion_L,
    octonion_sphere_compose,
    octonion_to_point,
    octonion_z_from_point,
    octonion_z_to_point,
    plane_identity,
    quaternion_of_pair,
    rank_identities,
    suslin_plane_compose,
    vdk_beta,
    vdk_compose,
    vdk_z_matrix,
    z_matrix,
)
from suslin_forge.errors import PreconditionError
from suslin_forge.matrix import MatrixR, row_times
from suslin_forge.rings import ZZ, IntegersMod
from suslin_forge.sampling import random_point, random_unit_point, unit_point_with_tail
from suslin_forge.suslin import SpherePoint, suslin_pair

from conftest import Z6, points

Z3, Z5, Z7 = IntegersMod(3), IntegersMod(5), IntegersMod(7)
ALGEBRAS = [QUATERNION, OCTONION]


def elements(algebra, ring):
    k = 4 if algebra == QUATERNION else 8
    vals = st.integers(-9, 9) if ring is ZZ else st.integers(0, ring.m - 1)
    return st.lists(vals, min_size=k, max_size=k).map(lambda c: AlgElement.of(algebra, ring, c))


# -- the algebras -----------------------------------------------------------


def test_quaternion_norm_example():
    alpha = AlgElement.quaternion(MatrixR.from_rows(ZZ, ((1, 2), (-3, 4))))
    assert alpha.norm() == 10
    assert alpha.conj().as_matrix() == MatrixR.from_rows(ZZ, ((4, -2), (3, 1)))


def test_octonion_unit():
    one = AlgElement.one(OCTONION, ZZ)
    assert one.norm() == 1 and one.conj() == one
    assert octonion_L(one).is_identity()


@pytest.mark.parametrize("algebra", ALGEBRAS)
@pytest.mark.parametrize("ring", [ZZ, Z6], ids=str)
def test_norm_multiplicative(algebra, ring):
    @given(elements(algebra, ring), elements(algebra, ring))
    def check(a, b):
        assert alg_norm(alg_mul(a, b)) == alg_norm(a) * alg_norm(b)
        assert alg_conj(alg_conj(a)) == a
        n = AlgElement.scalar(algebra, ring, alg_norm(a).payload)
        assert a * a.conj() == n == a.conj() * a

    check()


@given(elements(OCTONION, ZZ), elements(OCTONION, ZZ))
def test_octonion_alternative(a, b):
    nb = b.scale(a.norm().payload)
    assert a.conj() * (a * b) == nb == a * (a.conj() * b)


def test_octonion_not_associative():
    rng = random.Random(0)
    found = False
    for _ in range(20):
        a, b, c = (AlgElement.random(OCTONION, ZZ, rng) for _ in range(3))
        found |= (a * b) * c != a * (b * c)
    assert found


@given(points(ZZ, 4))
def test_octonion_identification(p):
    o = octonion_from_point(ZZ, p.v, p.w)
    assert o.norm() == p.q()
    assert octonion_to_point(o) == p


def test_octonion_L():
    rng = random.Random(1)
    for _ in range(200):
        a = AlgElement.random(OCTONION, Z7, rng)
        la, lc = octonion_L(a), octonion_L(a.conj())
        assert (la @ lc).is_scalar(a.norm().payload)
        assert (lc @ la).is_scalar(a.norm().payload)
    a, b = AlgElement.random(OCTONION, ZZ, rng), AlgElement.random(OCTONION, ZZ, rng)
    assert octonion_L(a + b) == octonion_L(a) + octonion_L(b)
    x = AlgElement.random(OCTONION, ZZ, rng)
    assert row_times(ZZ, x.coords, octonion_L(a).transpose()) == (a * x).coords


def test_algebra_mismatch():
    with pytest.raises(PreconditionError):
        alg_mul(AlgElement.one(QUATERNION, ZZ), AlgElement.one(OCTONION, ZZ))
    with pytest.raises(PreconditionError):
        AlgElement.one("sedenion", ZZ)


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_element_json(algebra):
    a = AlgElement.random(algebra, Z7, random.Random(2))
    assert AlgElement.from_json(algebra, Z7, a.to_json()) == a


# -- Z-matrices -------------------------------------------------------------


def test_q_example():
    alpha = AlgElement.quaternion(MatrixR.from_rows(ZZ, ((1, 2), (-3, 4))))
    assert z_matrix(alpha, (1,), (2,)).q == 12


def test_q_zero_alpha():
    rng = random.Random(3)
    p = random_unit_point(Z7, 3, rng)
    assert z_matrix(AlgElement.zero(QUATERNION, Z7), p.v, p.w).q == 1


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_q_matches_matrices(algebra):
    rng = random.Random(4)
    for level in (1, 2):
        alpha = AlgElement.random(algebra, Z6, rng)
        v = [Z6.random(rng) for _ in range(level)]
        w = [Z6.random(rng) for _ in range(level)]
        x = z_matrix(alpha, v, w)
        z, zb = x.matrices()
        assert (z @ zb).is_scalar(x.q.payload) and (zb @ z).is_scalar(x.q.payload)
        assert [x.truncate(k).q for k in range(1, level + 1)] == [
            z_matrix(alpha, v[:k], w[:k]).q for k in range(1, level + 1)]


def test_z_is_suslin_matrix():
    rng = random.Random(5)
    for _ in range(30):
        p = random_point(ZZ, 3, rng)
        alpha = quaternion_of_pair(ZZ, p.v[1:], p.w[1:])
        assert z_matrix(alpha, p.v[:1], p.w[:1]).matrices()[0] == suslin_pair(ZZ, p.v, p.w)[0]


def test_z_validation():
    with pytest.raises(PreconditionError):
        z_matrix(AlgElement.one(QUATERNION, ZZ), (1, 2), (1,))
    with pytest.raises(PreconditionError):
        z_matrix(AlgElement.one(QUATERNION, ZZ), (), ())


def test_z_json():
    x = z_matrix(AlgElement.random(OCTONION, Z7, random.Random(6)), (1, 2), (3, 4))
    assert ZMatrix.from_json(x.to_json()) == x


# -- the composition law ----------------------------------------------------


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_plane_identity(algebra):
    rng = random.Random(7)
    for _ in range(20):
        a = Z7.random(rng)
        x = z_matrix(AlgElement.random(algebra, Z7, rng), (a,), (Z7.random(rng),))
        e = plane_identity(algebra, Z7, a)
        assert e.q == 1
        assert compose_plane(x, e) == x
        assert compose_plane(e, x) == x


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_zero_corners_is_algebra_product(algebra):
    rng = random.Random(8)
    a, b = AlgElement.random(algebra, ZZ, rng), AlgElement.random(algebra, ZZ, rng)
    out = compose_plane(z_matrix(a, (0,), (0,)), z_matrix(b, (0,), (0,)))
    assert out.alpha == a * b and out.w == (0,)


def test_general_display_example():
    alpha = AlgElement.quaternion(MatrixR.from_rows(ZZ, ((1, 2), (-3, 4))))
    x = z_matrix(alpha, (1,), (2,))
    y = z_matrix(AlgElement.one(QUATERNION, ZZ), (1,), (0,))
    out = compose_plane(x, y)
    assert out.w == (2,)
    assert out.q == 12 == x.q * y.q


def test_a_mismatch_rejected():
    one = AlgElement.one(QUATERNION, ZZ)
    with pytest.raises(PreconditionError):
        compose_plane(z_matrix(one, (1,), (0,)), z_matrix(one, (2,), (0,)))
    with pytest.raises(PreconditionError):
        compose(z_matrix(one, (1, 2), (0, 0)), z_matrix(one, (1,), (0,)))


@pytest.mark.parametrize("algebra", ALGEBRAS)
@pytest.mark.parametrize("ring", [ZZ, Z6, Z7], ids=str)
def test_q_multiplicative_recursive(algebra, ring):
    rng = random.Random(9)
    for _ in range(40):
        level = rng.randint(1, 3)
        v = [ring.random(rng) for _ in range(level)]
        x = z_matrix(AlgElement.random(algebra, ring, rng), v, [ring.random(rng) for _ in range(level)])
        y = z_matrix(AlgElement.random(algebra, ring, rng), v, [ring.random(rng) for _ in range(level)])
        assert compose(x, y).q == x.q * y.q


def test_identity_like_recursion():
    # β = 1, w' = 0 everywhere gives q_Y = 1 at every level and X ⊙ Y = X
    rng = random.Random(10)
    for _ in range(20):
        v = [Z7.random(rng) for _ in range(3)]
        x = z_matrix(AlgElement.random(QUATERNION, Z7, rng), v, [Z7.random(rng) for _ in range(3)])
        y = z_matrix(AlgElement.one(QUATERNION, Z7), v, [0, 0, 0])
        assert all(q == 1 for q in y.q_levels)
        assert compose(x, y) == x


def test_all_norms_zero():
    z = AlgElement.zero(QUATERNION, ZZ)
    x = z_matrix(z, (3, 4), (0, 0))
    y = z_matrix(z, (3, 4), (0, 0))
    assert compose(x, y).q == 0


def test_quaternion_associative():
    rng = random.Random(11)
    for _ in range(50):
        level = rng.randint(1, 3)
        v = [Z6.random(rng) for _ in range(level)]
        x, y, w = (z_matrix(AlgElement.random(QUATERNION, Z6, rng), v, [Z6.random(rng) for _ in range(level)])
                   for _ in range(3))
        assert compose(compose(x, y), w) == compose(x, compose(y, w))


def test_octonion_nonassociative_witness():
    triple = find_nonassociative_triple(Z3)
    assert triple is not None
    x, y, w = triple
    assert all(t.q == 1 for t in triple)
    assert compose(compose(x, y), w) != compose(x, compose(y, w))


# -- unimodular rows --------------------------------------------------------


def test_plane_suslin_compose():
    rng = random.Random(12)
    for _ in range(50):
        p1 = random_unit_point(Z7, 3, rng)
        # a second point sharing a₁ with p1
        a1 = p1.v[0]
        w1 = p1.w[0]
        q = quaternion_of_pair(Z7, p1.v[1:], p1.w[1:])
        other = AlgElement.random(QUATERNION, Z7, rng)
        b2 = Z7.random(rng)
        pp = SpherePoint(Z7, (a1,) + other.coords[:2], (b2, other.coords[3], Z7.neg(other.coords[2])))
        out = suslin_plane_compose(p1, pp)
        assert out.v[0] == a1
        corner = (w1 * pp.q() + b2 * p1.q() - a1 * w1 * b2) % 7
        assert out.w[0] == corner
        assert quaternion_of_pair(Z7, out.v[1:], out.w[1:]) == q * quaternion_of_pair(Z7, pp.v[1:], pp.w[1:])
        assert out.q() == (p1.q() * pp.q()) % 7


def test_vdk_trivial_beta():
    rng = random.Random(13)
    p1 = random_unit_point(Z5, 3, rng)
    p2 = SpherePoint.of(Z5, (1, 0) + p1.v[2:], (1, 0, 0))
    assert (vdk_beta(p2)).is_identity()
    assert vdk_compose(p1, p2).v == p1.v


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vdk_random(n):
    rng = random.Random(14 + n)
    for _ in range(40):
        tail = [Z5.random(rng) for _ in range(n - 2)]
        p1 = unit_point_with_tail(Z5, tail, rng)
        p2 = unit_point_with_tail(Z5, tail, rng)
        out = vdk_compose(p1, p2)
        (c1, c2), (d1, d2) = p2.v[:2], p2.w[:2]
        a1, a2 = p1.v[:2]
        assert out.v == ((a1 * c1 - a2 * d2) % 5, (a1 * c2 + a2 * d1) % 5) + tuple(tail)
        assert out.is_unit()
        assert vdk_z_matrix(out).q == 1


def test_vdk_preconditions():
    p = SpherePoint.of(Z5, (1, 0, 2), (1, 0, 0))
    with pytest.raises(PreconditionError):
        vdk_compose(p, SpherePoint.of(Z5, (1, 0, 3), (1, 0, 0)))
    with pytest.raises(PreconditionError):
        vdk_compose(p, SpherePoint.of(Z5, (2, 0, 2), (1, 0, 0)))
    with pytest.raises(PreconditionError):
        vdk_compose(p, SpherePoint.of(Z5, (1, 0, 2, 0), (1, 0, 0, 0)))


# -- octonions on H(R^5) ----------------------------------------------------


def _unit_point5(rng):
    return random_unit_point(Z5, 5, rng)


def test_octonion_sphere_compose():
    rng = random.Random(15)
    for _ in range(40):
        p1 = _unit_point5(rng)
        x = octonion_z_from_point(p1)
        assert x.q == 1 and octonion_z_to_point(x) == p1
        y_alpha = AlgElement.random(OCTONION, Z5, rng)
        # pick b' so that q_Y = a·b' + N(O₂) = 1 when a is a unit; otherwise take O₂ of norm 1 and b' = 0
        a = p1.v[0]
        if a % 5:
            b2 = (pow(a, -1, 5) * (1 - y_alpha.norm().payload)) % 5
        else:
            y_alpha, b2 = AlgElement.one(OCTONION, Z5), 0
        y = z_matrix(y_alpha, (a,), (b2,))
        out = octonion_sphere_compose(x, y)
        assert out.q == 1
        assert octonion_z_to_point(out).is_unit()


def test_octonion_sphere_identity():
    rng = random.Random(16)
    p = _unit_point5(rng)
    x = octonion_z_from_point(p)
    e = z_matrix(AlgElement.one(OCTONION, Z5), p.v[:1], (0,))
    assert octonion_sphere_compose(x, e) == x


def test_octonion_sphere_preconditions():
    x = z_matrix(AlgElement.one(OCTONION, Z5), (1,), (1,))
    with pytest.raises(PreconditionError):
        octonion_sphere_compose(x, x)
    with pytest.raises(PreconditionError):
        octonion_z_from_point(SpherePoint.of(Z5, (1, 0, 0), (1, 0, 0)))


# -- Clifford embeddings ----------------------------------------------------


def test_rank_identities():
    for n in range(1, 6):
        qa = rank_identities("quaternion", n)
        assert qa["clifford_rank"] == qa["matrix_rank"] == 2 ** (2 * n + 4)
        oc = rank_identities("octonion", n)
        assert oc["clifford_rank"] == oc["matrix_rank"] == 2 ** (2 * n + 8)


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_clifford_embedding(algebra):
    assert clifford_embed_check(AlgElement.one(algebra, Z6), (0, 0), (0, 0))
    rng = random.Random(17)
    for _ in range(10):
        v = [Z6.random(rng) for _ in range(2)]
        w = [Z6.random(rng) for _ in range(2)]
        other = z_matrix(AlgElement.random(algebra, Z6, rng), [Z6.random(rng) for _ in range(2)],
                         [Z6.random(rng) for _ in range(2)])
        assert clifford_embed_check(AlgElement.random(algebra, Z6, rng), v, w, other)
