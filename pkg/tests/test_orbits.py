import random
from itertools import product
from math import gcd

import pytest

from suslin_forge.epin import EpinGenerator, act_on_point
from suslin_forge.errors import BudgetExceededError, NotEnumerableError, PreconditionError
from suslin_forge.matrix import dot
from suslin_forge.orbits import (
    bijection_check,
    enumerate_sphere,
    enumerate_um,
    lift_pairs,
    orbit_partition,
    sphere_partition,
    um_partition,
)
from suslin_forge.rings import ZZ, IntegersMod, PolynomialRing

Z2, Z3, Z4 = IntegersMod(2), IntegersMod(3), IntegersMod(4)


def um_oracle(ring, n):
    """Rows with some w satisfying v·wᵀ = 1, by exhaustive search over w."""
    elems = list(ring.elements())
    out = []
    for v in product(elems, repeat=n):
        if any(dot(ring, v, w) == ring.one for w in product(elems, repeat=n)):
            out.append(v)
    return out


@pytest.mark.parametrize("m,n,size", [(2, 3, 7), (3, 2, 8), (4, 2, 12), (5, 1, 4)])
def test_um_counts(m, n, size):
    assert len(enumerate_um(IntegersMod(m), n)) == size


def test_um_n1():
    assert sorted(v[0] for v in enumerate_um(Z4, 1)) == [1, 3]


@pytest.mark.parametrize("m,n", [(2, 3), (4, 2), (6, 2), (3, 3)])
def test_um_matches_oracle(m, n):
    ring = IntegersMod(m)
    assert sorted(enumerate_um(ring, n)) == um_oracle(ring, n)


@pytest.mark.parametrize("m,n,size", [(2, 3, 28), (2, 1, 1), (3, 1, 2), (4, 3, 896)])
def test_sphere_counts(m, n, size):
    pts = enumerate_sphere(IntegersMod(m), n)
    assert len(pts) == size
    assert all(p.is_unit() for p in pts)


def test_sphere_brute_force():
    ring = Z3
    expected = sum(1 for x in product(range(3), repeat=4) if (x[0] * x[2] + x[1] * x[3]) % 3 == 1)
    assert len(enumerate_sphere(ring, 2)) == expected


def test_orbit_partition_singletons():
    part = orbit_partition([1, 2, 3], [], lambda p, g: p)
    assert part.count == 3
    assert part.classes == ((0,), (1,), (2,))


def test_orbit_partition_cycle():
    part = orbit_partition(range(6), [2], lambda p, g: (p + g) % 6)
    assert part.classes == ((0, 2, 4), (1, 3, 5))
    assert part.labels == (0, 1, 0, 1, 0, 1)


def test_orbit_partition_rejects_duplicates():
    with pytest.raises(PreconditionError):
        orbit_partition([1, 1], [], lambda p, g: p)


def _generic(ring):
    """The same ring seen through the generic (non-vectorised) route."""
    return PolynomialRing(ring, 1, 0)


@pytest.mark.parametrize("ring", [Z2, Z3], ids=str)
def test_kernel_matches_bfs(ring):
    generic = _generic(ring)
    for n in (2, 3):
        fast = sphere_partition(ring, n)
        slow = sphere_partition(generic, n)
        assert fast.count == slow.count
        assert [len(c) for c in fast.classes] == [len(c) for c in slow.classes]
        fast_um, slow_um = um_partition(ring, n), um_partition(generic, n)
        assert fast_um.count == slow_um.count


def test_epin_orbits_match_eo_orbits():
    ring, n = Z2, 3
    pts = enumerate_sphere(ring, n)
    gens = [EpinGenerator(a, b, i, 1, n, ring) for a in "ef" for b in "ef" for i in range(2, n + 1)]
    epin = orbit_partition(pts, gens, lambda p, g: act_on_point(g, p))
    eo = sphere_partition(ring, n)
    assert epin.count == eo.count == 1


def test_partition_is_canonical():
    ring = Z3
    pts = [(a, b) for a in range(3) for b in range(3)]
    gens = [1, 2]
    act = lambda p, g: ((p[0] + g) % 3, p[1])
    a = orbit_partition(pts, gens, act)
    b = orbit_partition(pts, list(reversed(gens)), act)
    assert a == b
    assert a.count == 3


def test_lift_independence():
    ring, n = Z4, 3
    part = sphere_partition(ring, n)
    index = part.index()
    rng = random.Random(0)
    pairs = lift_pairs(ring, n, 50, rng)
    assert len(pairs) == 50
    for p, q in pairs:
        assert p.v == q.v and p.w != q.w
        assert part.labels[index[p.v + p.w]] == part.labels[index[q.v + q.w]]


def test_budget_and_enumerability():
    with pytest.raises(BudgetExceededError):
        enumerate_sphere(IntegersMod(10), 4, budget=1000)
    with pytest.raises(BudgetExceededError):
        bijection_check(Z4, 3, budget=100)
    with pytest.raises(NotEnumerableError):
        enumerate_um(ZZ, 3)
    with pytest.raises(PreconditionError):
        bijection_check(Z2, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_bijection(m):
    rep = bijection_check(IntegersMod(m), 3)
    assert rep.ok and rep.well_defined and rep.injective and rep.surjective
    assert rep.um_orbit_count == rep.sphere_orbit_count == 1
    assert rep.witness_map == ((0, 0),)


def test_bijection_one_side():
    rep = bijection_check(Z3, 3, side="um")
    assert rep.sphere_orbit_count is None and rep.injective is None
    assert rep.um_orbit_count == 1
    js = rep.to_json()
    assert js["um_size"] == len(enumerate_um(Z3, 3))


def test_um_orbits_for_small_n():
    # for n = 2 over Z/m, E_2 orbits of rows can be counted by hand for Z/2: one orbit
    assert um_partition(Z2, 2).count == 1
    # over Z/5 with n = 1, E_1 is trivial and every unit is its own orbit
    assert um_partition(IntegersMod(5), 1).count == 4
    assert all(gcd(v[0], 5) == 1 for v in enumerate_um(IntegersMod(5), 1))
