import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from suslin_forge.rings import ZZ, IntegersMod, PolynomialRing
from suslin_forge.suslin import SpherePoint

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

Z6 = IntegersMod(6)
Z5X = PolynomialRing(IntegersMod(5), 2)
RINGS = [ZZ, Z6, IntegersMod(7), Z5X]


def scalars(ring):
    if ring is ZZ:
        return st.integers(-20, 20)
    if isinstance(ring, IntegersMod):
        return st.integers(0, ring.m - 1)
    # degree <= 1 polynomials c0 + c1 x1 + c2 x2
    return st.tuples(*(st.integers(0, 4) for _ in range(3))).map(
        lambda c: ring.coerce(c[0]) + ring.gen(0) * c[1] + ring.gen(1) * c[2])


def points(ring, n):
    vec = st.lists(scalars(ring), min_size=n, max_size=n)
    return st.tuples(vec, vec).map(lambda vw: SpherePoint.of(ring, vw[0], vw[1]))


def unit_points(ring, n):
    """v = (1, *), w₁ solved so that v·wᵀ = 1."""
    rest = st.lists(scalars(ring), min_size=n - 1, max_size=n - 1)

    def build(t):
        a, b = t
        v = [1, *a]
        s = ring.zero
        for x, y in zip(a, b):
            s = ring.add(s, ring.mul(ring.coerce(x), ring.coerce(y)))
        return SpherePoint.of(ring, v, [ring.sub(ring.one, s), *b])

    return st.tuples(rest, rest).map(build)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
