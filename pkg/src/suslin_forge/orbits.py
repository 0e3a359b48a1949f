"""Brute-force orbits of unimodular rows and unit-sphere points over finite rings.

Two independent routes are provided.  :func:`orbit_partition` is a plain
breadth-first closure that works for any action callable.  The modular
kernel used by :func:`bijection_check` stores the universe as a numpy array
of residues, applies every generator as an integer matrix to all points at
once, and hands the resulting graph to scipy's connected components.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .epin import elem_generator, eo_generator, partner
from .errors import BudgetExceededError, InconsistencyError, NotEnumerableError, PreconditionError
from .matrix import dot
from .rings import IntegersMod, Ring
from .suslin import SpherePoint

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class OrbitPartition:
    """A partition of ``universe`` into orbits, labelled canonically.

    Classes are ordered by their smallest member index and ``labels[k]`` is
    the class of ``universe[k]``; neither depends on traversal order.
    """

    universe: tuple
    classes: tuple
    generator_set: str
    labels: tuple = field(repr=False, default=())

    @property
    def count(self) -> int:
        return len(self.classes)

    def index(self) -> dict:
        return {p: k for k, p in enumerate(self.universe)}

    def to_json(self) -> dict:
        return {
            "generator_set": self.generator_set,
            "universe_size": len(self.universe),
            "classes": [list(c) for c in self.classes],
        }


def _canonical(universe: tuple, labels: Sequence[int], generator_set: str) -> OrbitPartition:
    remap: dict[int, int] = {}
    out = []
    for lab in labels:
        out.append(remap.setdefault(int(lab), len(remap)))
    classes: list[list[int]] = [[] for _ in remap]
    for k, lab in enumerate(out):
        classes[lab].append(k)
    return OrbitPartition(universe, tuple(tuple(c) for c in classes), generator_set, tuple(out))


def orbit_partition(points: Sequence[Hashable], generators: Sequence, action: Callable,
                    generator_set: str = "") -> OrbitPartition:
    """Orbits of ``points`` under ``action(point, generator)`` by breadth-first closure.

    The generators must generate a group (or at least the orbit relation must
    be symmetric); each connected component of the action graph is one class.
    """
    universe = tuple(points)
    where = {p: k for k, p in enumerate(universe)}
    if len(where) != len(universe):
        raise PreconditionError("universe contains duplicate points")
    labels = [-1] * len(universe)
    # undirected adjacency so that a generating set without inverses still works
    adj: list[list[int]] = [[] for _ in universe]
    for k, p in enumerate(universe):
        for g in generators:
            q = action(p, g)
            j = where.get(q)
            if j is None:
                raise InconsistencyError(f"action of {g!r} leaves the universe at {p!r}")
            adj[k].append(j)
            adj[j].append(k)
    next_label = 0
    for start in range(len(universe)):
        if labels[start] >= 0:
            continue
        labels[start] = next_label
        queue = deque([start])
        while queue:
            k = queue.popleft()
            for j in adj[k]:
                if labels[j] < 0:
                    labels[j] = next_label
                    queue.append(j)
        next_label += 1
    return _canonical(universe, labels, generator_set)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _require_enumerable(ring: Ring):
    if not ring.enumerable:
        raise NotEnumerableError(f"{ring} cannot be enumerated")


def _check_budget(ring: Ring, length: int, budget: int):
    total = ring.size() ** length
    if total > budget:
        raise BudgetExceededError(f"|R|^{length} = {total} exceeds the budget {budget}")


def _all_tuples(m: int, length: int) -> np.ndarray:
    """Every vector in (Z/m)^length, in lexicographic order."""
    grids = np.indices((m,) * length, dtype=np.int64).reshape(length, -1)
    return grids.T.copy()


def enumerate_um(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All unimodular rows of length n, in lexicographic (element) order.

    Over Z/m a row is unimodular iff gcd(v₁, ..., v_n, m) = 1; other finite
    rings fall back to an exhaustive search for w.
    """
    _require_enumerable(ring)
    _check_budget(ring, n, budget)
    if isinstance(ring, IntegersMod):
        m = ring.m
        return [v for v in itertools.product(range(m), repeat=n) if math.gcd(m, *v) == 1]
    elems = list(ring.elements())
    _check_budget(ring, 2 * n, budget)
    out = []
    for v in itertools.product(elems, repeat=n):
        if any(ring.is_zero(ring.sub(dot(ring, v, w), ring.one)) for w in itertools.product(elems, repeat=n)):
            out.append(v)
    return out


def enumerate_sphere(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> list[SpherePoint]:
    """All (v, w) with v·wᵀ = 1, ordered lexicographically by v + w."""
    _require_enumerable(ring)
    _check_budget(ring, 2 * n, budget)
    if isinstance(ring, IntegersMod):
        arr = _sphere_array(ring.m, n)
        return [SpherePoint(ring, tuple(int(x) for x in r[:n]), tuple(int(x) for x in r[n:])) for r in arr]
    elems = list(ring.elements())
    out = []
    for x in itertools.product(elems, repeat=2 * n):
        p = SpherePoint(ring, x[:n], x[n:])
        if p.is_unit():
            out.append(p)
    return out


def _sphere_array(m: int, n: int) -> np.ndarray:
    allx = _all_tuples(m, 2 * n)
    q = (allx[:, :n] * allx[:, n:]).sum(axis=1) % m
    return allx[q == 1 % m]


# ---------------------------------------------------------------------------
# Modular kernel
# ---------------------------------------------------------------------------


def _codes(arr: np.ndarray, m: int) -> np.ndarray:
    """Base-m code of each row; increasing in lexicographic order."""
    weights = m ** np.arange(arr.shape[1] - 1, -1, -1, dtype=np.int64)
    return arr @ weights


def _matrix_partition(arr: np.ndarray, m: int, gens: Sequence[np.ndarray]) -> np.ndarray:
    """Labels of the orbits of the rows of ``arr`` under x ↦ x·G mod m."""
    codes = _codes(arr, m)
    if np.any(np.diff(codes) <= 0):
        raise PreconditionError("universe must be sorted and free of duplicates")
    size = len(arr)
    src, dst = [], []
    for g in gens:
        img = _codes((arr @ g) % m, m)
        pos = np.searchsorted(codes, img)
        pos_c = np.minimum(pos, size - 1)
        if np.any(codes[pos_c] != img):
            raise InconsistencyError("a generator moves a point outside the universe")
        src.append(np.arange(size))
        dst.append(pos_c)
    if not gens:
        return np.arange(size)
    src_a, dst_a = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src_a), dtype=np.int8), (src_a, dst_a)), shape=(size, size)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


def elementary_generator_mats(ring: IntegersMod, n: int) -> list[np.ndarray]:
    """Every E_ij(λ), i != j, λ != 0, as integer matrices."""
    return [
        np.array(elem_generator(i, j, lam, n, ring).body.rows, dtype=np.int64)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
        for lam in range(1, ring.m)
    ]


def eo_generator_mats(ring: IntegersMod, n: int) -> list[np.ndarray]:
    """Every E°_ij(λ) with j ∉ {i, ∂(i)}, λ != 0, as integer matrices."""
    return [
        np.array(eo_generator(i, j, lam, n, ring).body.rows, dtype=np.int64)
        for i in range(1, 2 * n + 1)
        for j in range(1, 2 * n + 1)
        if j != i and j != partner(i, n)
        for lam in range(1, ring.m)
    ]


def um_partition(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    rows = enumerate_um(ring, n, budget)
    label = f"E_{n}: all E_ij(λ), λ != 0"
    if isinstance(ring, IntegersMod):
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
        labels = _matrix_partition(arr, ring.m, elementary_generator_mats(ring, n))
        return _canonical(tuple(rows), labels, label)
    gens = [elem_generator(i, j, lam, n, ring).body
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j
            for lam in ring.elements() if not ring.is_zero(lam)]
    from .matrix import row_times

    return orbit_partition(rows, gens, lambda v, g: tuple(row_times(ring, v, g)), label)


def sphere_partition(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    points = enumerate_sphere(ring, n, budget)
    keys = tuple(p.v + p.w for p in points)
    label = f"EO_{2 * n}: all E°_ij(λ), j != i, ∂(i), λ != 0"
    if isinstance(ring, IntegersMod):
        arr = np.array(keys, dtype=np.int64).reshape(len(keys), 2 * n)
        labels = _matrix_partition(arr, ring.m, eo_generator_mats(ring, n))
        return _canonical(keys, labels, label)
    gens = [eo_generator(i, j, lam, n, ring).body
            for i in range(1, 2 * n + 1) for j in range(1, 2 * n + 1)
            if j not in (i, partner(i, n))
            for lam in ring.elements() if not ring.is_zero(lam)]
    from .matrix import row_times

    return orbit_partition(keys, gens, lambda x, g: tuple(row_times(ring, x, g)), label)


# ---------------------------------------------------------------------------
# The bijection Um_n / E_n <-> U_{2n-1} / EO_2n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BijectionReport:
    ring: Ring
    n: int
    um_orbit_count: int | None
    sphere_orbit_count: int | None
    witness_map: tuple
    ok: bool
    um_size: int = 0
    sphere_size: int = 0
    well_defined: bool | None = True
    injective: bool | None = True
    surjective: bool | None = True

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "n": self.n,
            "um_size": self.um_size,
            "sphere_size": self.sphere_size,
            "um_orbit_count": self.um_orbit_count,
            "sphere_orbit_count": self.sphere_orbit_count,
            "witness_map": [list(pair) for pair in self.witness_map],
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "ok": self.ok,
        }


def bijection_check(ring: Ring, n: int, budget: int = DEFAULT_BUDGET, side: str = "both") -> BijectionReport:
    """Compare Um_n(R)/E_n(R) with U_{2n-1}(R)/EO_2n(R) through v ↦ (v, w).

    Every lift (v, w) of every row in a class is checked to land in one sphere
    class; a failure there raises :class:`InconsistencyError`.
    """
    if n < 3:
        raise PreconditionError("the bijection is checked for n >= 3")
    if side not in ("um", "sphere", "both"):
        raise PreconditionError(f"side must be um, sphere or both, got {side!r}")
    _require_enumerable(ring)
    _check_budget(ring, n if side == "um" else 2 * n, budget)
    um = um_partition(ring, n, budget) if side != "sphere" else None
    sp = sphere_partition(ring, n, budget) if side != "um" else None
    if um is None or sp is None:
        # one side only: nothing to compare, so no bijection claim is made
        return BijectionReport(
            ring, n,
            um.count if um else None,
            sp.count if sp else None,
            (), True,
            um_size=len(um.universe) if um else 0,
            sphere_size=len(sp.universe) if sp else 0,
            well_defined=None, injective=None, surjective=None,
        )
    um_index = um.index()
    image: dict[int, int] = {}
    for k, x in enumerate(sp.universe):
        v = x[:n]
        c = um.labels[um_index[v]]
        s = sp.labels[k]
        if image.setdefault(c, s) != s:
            raise InconsistencyError(
                f"lifts of rows in E_{n}-class {c} land in sphere classes {image[c]} and {s}")
    well_defined = len(image) == um.count
    injective = len(set(image.values())) == len(image)
    surjective = set(image.values()) == set(range(sp.count))
    witness = tuple(sorted(image.items()))
    return BijectionReport(
        ring, n, um.count, sp.count, witness,
        well_defined and injective and surjective,
        um_size=len(um.universe), sphere_size=len(sp.universe),
        well_defined=well_defined, injective=injective, surjective=surjective,
    )


def lift_pairs(ring: Ring, n: int, count: int, rng, budget: int = DEFAULT_BUDGET) -> list[tuple[SpherePoint, SpherePoint]]:
    """``count`` random pairs (v, w), (v, w') of distinct lifts of one row."""
    by_v: dict[tuple, list[SpherePoint]] = {}
    for p in enumerate_sphere(ring, n, budget):
        by_v.setdefault(p.v, []).append(p)
    rows = [v for v, ps in by_v.items() if len(ps) > 1]
    if not rows:
        return []
    out = []
    for _ in range(count):
        ps = by_v[rows[rng.randrange(len(rows))]]
        a, b = rng.sample(range(len(ps)), 2)
        out.append((ps[a], ps[b]))
    return out
