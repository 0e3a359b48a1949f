import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from suslin_forge.errors import DescriptorError, NotEnumerableError, RingMismatchError
from suslin_forge.matrix import MatrixR, det_berkowitz, det_cofactor, det_leibniz, mat_det
from suslin_forge.rings import (
    ZZ,
    IntegersMod,
    PolynomialRing,
    RingValue,
    enumerate_ring,
    parse_ring,
    ring_arith,
    ring_from_json,
)

from conftest import RINGS, scalars

Z5 = IntegersMod(5)
Z6 = IntegersMod(6)


def test_modular_add_reduces():
    assert ring_arith("add", Z5(3), Z5(4)) == 2


def test_polynomial_difference_of_squares():
    R = PolynomialRing(ZZ, 1)
    x = R(R.gen(0))
    assert ring_arith("mul", x + 1, x - 1) == R(R.gen(0) * R.gen(0) - 1)


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_neg_zero(ring):
    assert ring_arith("neg", ring(0)).is_zero()


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        ring_arith("add", Z5(1), Z6(1))
    with pytest.raises(RingMismatchError):
        Z5(1) + Z6(1)


@pytest.mark.parametrize("text, expected", [
    ("int", ZZ),
    ("zmod:6", IntegersMod(6)),
    ("poly:zmod:5:2", PolynomialRing(IntegersMod(5), 2)),
    ("poly:int:3", PolynomialRing(ZZ, 3)),
    ("poly:zmod:3:1:deg2", PolynomialRing(IntegersMod(3), 1, 2)),
])
def test_descriptor_round_trip(text, expected):
    ring = parse_ring(text)
    assert ring == expected
    assert str(ring) == text
    assert ring_from_json(ring.to_json()) == ring


@pytest.mark.parametrize("text", ["zmod:1", "zmod:x", "poly:poly:int:1:1", "poly:int", "rational", "poly:int:0"])
def test_bad_descriptors(text):
    with pytest.raises(DescriptorError):
        parse_ring(text)


def test_enumeration():
    assert [x.payload for x in enumerate_ring(IntegersMod(2))] == [0, 1]
    four = list(enumerate_ring(IntegersMod(4)))
    assert len(four) == 4 and len(set(four)) == 4
    assert len(set(enumerate_ring(IntegersMod(3)))) == 3
    bounded = PolynomialRing(IntegersMod(2), 1, 1)
    assert bounded.enumerable and bounded.size() == 4
    assert len(set(enumerate_ring(bounded))) == 4
    with pytest.raises(NotEnumerableError):
        list(enumerate_ring(ZZ))
    with pytest.raises(NotEnumerableError):
        list(enumerate_ring(PolynomialRing(IntegersMod(2), 1)))


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_ring_axioms(ring):
    @given(scalars(ring), scalars(ring), scalars(ring))
    def check(a, b, c):
        a, b, c = ring(a), ring(b), ring(c)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    check()


def test_canonical_form_uniqueness():
    rng = random.Random(0)
    R = PolynomialRing(IntegersMod(3), 2)
    x, y = R.gen(0), R.gen(1)
    for _ in range(10_000):
        a = R.random(rng)
        b = R.random(rng)
        # build b a second way, through a detour that cancels
        b2 = (b + x * y) - y * x
        # equality decided by subtraction, independent of serialization
        assert (not (a - b)) == (R.serialize(a) == R.serialize(b))
        assert R.serialize(b2) == R.serialize(b)
        assert R(b2) == R(b)


def test_residues_and_value_json():
    assert Z6.value_to_json(Z6.coerce(-1)) == 5
    assert ZZ.value_to_json(10**30) == str(10**30)
    R = PolynomialRing(Z5, 2)
    p = R.coerce(7) + R.gen(0) * 3
    assert R.value_from_json(R.value_to_json(p)) == p


# -- matrices ---------------------------------------------------------------


def _random_matrix(ring, n, rng):
    return MatrixR.from_rows(ring, [[ring.random(rng) for _ in range(n)] for _ in range(n)])


def test_identity_and_units():
    rng = random.Random(1)
    Z7 = IntegersMod(7)
    a = _random_matrix(Z7, 4, rng)
    eye = MatrixR.identity(Z7, 4)
    assert a @ eye == a and eye @ a == a
    assert MatrixR.unit(ZZ, 3, 0, 1) @ MatrixR.unit(ZZ, 3, 1, 2) == MatrixR.unit(ZZ, 3, 0, 2)


def test_mat_mul_associative():
    rng = random.Random(2)
    for ring in (ZZ, Z6, PolynomialRing(Z5, 2)):
        for _ in range(20):
            a, b, c = (_random_matrix(ring, 4, rng) for _ in range(3))
            assert (a @ b) @ c == a @ (b @ c)


def test_determinants_agree_and_multiply():
    rng = random.Random(3)
    for _ in range(100):
        a, b = _random_matrix(Z6, 4, rng), _random_matrix(Z6, 4, rng)
        da = det_berkowitz(a)
        assert da == det_cofactor(a) == det_leibniz(a)
        assert Z6.reduce(det_berkowitz(a @ b)) == Z6.mul(da, det_berkowitz(b))
    m = MatrixR.from_rows(ZZ, [[2, 1, 0], [1, 3, 4], [0, 5, 6]])
    assert mat_det(m) == -10
    assert mat_det(MatrixR.identity(ZZ, 4)) == 1


def test_det_of_elementary_matrix():
    e = MatrixR.identity(Z6, 3) + MatrixR.unit(Z6, 3, 0, 1).scale(5)
    assert mat_det(e) == 1


def test_det_over_polynomials():
    rng = random.Random(4)
    R = PolynomialRing(ZZ, 2)
    for _ in range(5):
        a = _random_matrix(R, 3, rng)
        assert det_berkowitz(a) == det_leibniz(a)


def test_matrix_ring_mismatch():
    with pytest.raises(RingMismatchError):
        MatrixR.identity(Z5, 2) @ MatrixR.identity(Z6, 2)


def test_matrix_json_round_trip():
    rng = random.Random(5)
    a = _random_matrix(ZZ, 3, rng)
    assert MatrixR.from_json(ZZ, a.to_json()) == a


@given(st.integers(-10**40, 10**40), st.integers(-10**40, 10**40))
def test_big_integers_exact(a, b):
    assert (ZZ(a) * ZZ(b)).payload == a * b
