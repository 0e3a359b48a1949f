import random

import pytest
from hypothesis import given

from suslin_forge.checks import point_fixers, random_spin_element
from suslin_forge.errors import PreconditionError
from suslin_forge.matrix import MatrixR, det_berkowitz, mat_det
from suslin_forge.rings import ZZ, IntegersMod
from suslin_forge.sampling import random_point, random_unit_point
from suslin_forge.suslin import SpherePoint, j_matrix
from suslin_forge.vaserstein import (
    AlternatingMatrix4,
    WittElementRaw,
    beta_matrix,
    fixes_base_point,
    is_alternating,
    perp,
    pfaffian,
    pfaffian4,
    psi,
    sp4_fixer_check,
    spin_action,
    transport_action,
    vaserstein_display,
    vaserstein_matrix,
)
from suslin_forge.epin import elem_generator

from conftest import points

Z5, Z7, Z9 = IntegersMod(5), IntegersMod(7), IntegersMod(9)


def random_alternating(ring, n, rng):
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = ring.random(rng)
            rows[i][j], rows[j][i] = x, ring.neg(x)
    return MatrixR.from_rows(ring, rows)


def test_beta():
    b = beta_matrix(ZZ)
    assert (b @ b.transpose()).is_identity()
    # the displayed β is orthogonal with determinant -1
    assert det_berkowitz(b) == -1
    assert b[1, 1] == -1 and b[2, 3] == 1 and b[3, 2] == -1


@given(points(ZZ, 3))
def test_display_matches_definition(p):
    v = vaserstein_matrix(p)
    assert v.body == vaserstein_display(p)
    assert v.pfaffian == p.q()


def test_base_point():
    v = vaserstein_matrix(SpherePoint.of(ZZ, (1, 0, 0), (1, 0, 0)))
    assert v.pfaffian == 1
    assert v.body[0, 1] == -1 and v.body[2, 3] == -1


def test_pfaffian_is_form_z7():
    rng = random.Random(0)
    for _ in range(100):
        p = random_point(Z7, 3, rng)
        (a1, a2, a3), (b1, b2, b3) = p.v, p.w
        assert vaserstein_matrix(p).pfaffian == (a1 * b1 + a2 * b2 + a3 * b3) % 7


def test_det_is_pfaffian_squared():
    rng = random.Random(1)
    for n in (2, 4, 6):
        for _ in range(30):
            m = random_alternating(Z9, n, rng)
            pf = pfaffian(m)
            assert mat_det(m) == pf * pf
            if n == 4:
                assert pfaffian4(m) == pf


def test_odd_pfaffian_is_zero():
    m = random_alternating(ZZ, 3, random.Random(2))
    assert pfaffian(m) == 0


def test_non_alternating_rejected():
    m = MatrixR.identity(ZZ, 4)
    assert not is_alternating(m)
    with pytest.raises(PreconditionError):
        AlternatingMatrix4(m)
    with pytest.raises(PreconditionError):
        pfaffian4(m)


def test_psi():
    p1 = psi(1)
    assert p1 == MatrixR.from_rows(ZZ, ((0, 1), (-1, 0)))
    p2 = psi(2)
    assert p2 == perp(p1, p1)
    assert pfaffian(p2) == 1 and pfaffian(psi(3)) == 1
    assert WittElementRaw(AlternatingMatrix4(p2)).body.pfaffian == 1
    with pytest.raises(PreconditionError):
        WittElementRaw(AlternatingMatrix4(p2.scale(2)))


def test_transport_identity():
    p = SpherePoint.of(ZZ, (2, 1, 0), (1, -1, 3))
    res = transport_action(MatrixR.identity(ZZ, 4), p)
    assert res.image == p
    assert res.v_prime.body == vaserstein_matrix(p).body


def test_transport_epin_z5():
    rng = random.Random(3)
    for k in range(100):
        p = random_unit_point(Z5, 3, rng)
        g = random_spin_element(Z5, rng, 1 + k % 4)
        res = transport_action(g, p)
        assert res.v_prime.body == vaserstein_matrix(res.image).body
        assert res.v_prime.pfaffian == vaserstein_matrix(p).pfaffian
        assert res.image.q() == p.q()


def test_transport_off_sphere():
    rng = random.Random(4)
    for _ in range(20):
        p = random_point(ZZ, 3, rng)
        res = transport_action(random_spin_element(ZZ, rng, 3), p)
        assert res.v_prime.pfaffian == p.q()


def test_transport_rejects_det():
    g = MatrixR.identity(ZZ, 4).scale(2)
    with pytest.raises(PreconditionError):
        transport_action(g, SpherePoint.of(ZZ, (1, 0, 0), (1, 0, 0)))
    with pytest.raises(PreconditionError):
        vaserstein_matrix(SpherePoint.of(ZZ, (1, 0), (1, 0)))


def test_sp4_check():
    assert sp4_fixer_check(MatrixR.identity(ZZ, 4))
    # E₁₂ lies in the SL₂ block of J and is symplectic; E₁₃ is not
    assert sp4_fixer_check(elem_generator(1, 2, 1, 4, ZZ).body)
    e = elem_generator(1, 3, 1, 4, ZZ).body
    assert not sp4_fixer_check(e)
    assert not fixes_base_point(e)
    assert sp4_fixer_check(j_matrix(2, ZZ))


@pytest.mark.parametrize("ring", [ZZ, Z5], ids=str)
def test_fixers_are_symplectic(ring):
    fixers = point_fixers(ring, random.Random(5), 20)
    assert fixers
    for f in fixers:
        assert not f.is_identity()
        assert fixes_base_point(f)
        assert sp4_fixer_check(f)
        assert spin_action(f, MatrixR.identity(ring, 4)).is_identity()
