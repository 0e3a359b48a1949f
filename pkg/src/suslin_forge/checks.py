"""Verification suites.

A suite is a function ``(ring, rng, trials) -> list[CheckResult]``.  Each
check samples its own data, stops at the first counterexample and records it
in JSON form.  Every check name maps to one fixed anchor string describing
the statement it exercises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import composition as comp
from .clifford import anticommutator, bilinear, is_even, is_odd, phi_matrix
from .epin import (
    act_by_elementary,
    act_on_point,
    apply_orthogonal,
    block_action,
    closed_form_action,
    elem_generator,
    eo_generator,
    epin_blocks,
    epin_generators,
    epin_matrix,
    extract_sigma,
    hyperbolic_embed,
    pi_matrix,
    transitive_witness,
)
from .errors import SuslinForgeError
from .matrix import MatrixR, det_berkowitz, row_times
from .rings import IntegersMod, Ring, RingValue
from .sampling import (
    random_point,
    random_generator,
    random_unit_point,
    random_word,
    second_lift,
    unit_point_with_tail,
)
from .suslin import J_MAX_LEVEL, SpherePoint, basis_unit, j_matrix, star, suslin_pair
from .vaserstein import (
    pfaffian,
    sp4_fixer_check,
    top_block_word,
    transport_action,
    vaserstein_display,
    vaserstein_matrix,
)

ANCHORS = {
    "suslin.product_with_bar": "S(v,w)·bar S(v,w) = bar S(v,w)·S(v,w) = (v·wᵀ)I",
    "suslin.bar_is_swapped_transpose": "bar S(v,w) = S(w,v)ᵀ",
    "suslin.star_parity": "S* = S for odd vector length, S* = bar S for even",
    "suslin.j_orthogonal": "J_n J_nᵀ = I",
    "suslin.bilinear_form": "S₁ bar S₂ + S₂ bar S₁ = (v₁·w₂ᵀ + v₂·w₁ᵀ)I",
    "suslin.basis_first_index": "X₁² = X₁ and X₁ + bar X₁ = I",
    "suslin.basis_higher_index": "bar Xᵢ = -Xᵢ and Xᵢ² = 0 for i > 1",
    "suslin.basis_twist": "XᵢX₁ = bar X₁ Xᵢ for i > 1",
    "suslin.commutator_relations": "1 + λXᵢXⱼ = [1 + λXᵢX₁, 1 + X₁Xⱼ]",
    "clifford.square": "phi(x)² = q(x)I",
    "clifford.polarized": "phi(x)phi(y) + phi(y)phi(x) = <x, y>I",
    "clifford.grading": "even products are block diagonal, odd products block off-diagonal",
    "epin.block_form": "phi(1 + λx₁xᵢ) = diag(1 - λX₁Xᵢ, 1 - λ bar X₁ bar Xᵢ)",
    "epin.closed_form_action": "conjugation by an Epin generator is the displayed coordinate update",
    "epin.form_preserved": "conjugation preserves q",
    "epin.sigma_extraction": "g(v,w)g⁻¹ = (vσ, wσ^{⊺,-1}) for an elementary σ",
    "epin.block_action": "unipotent block products move S(v,w) to S(vε, wε^{⊺,-1})",
    "epin.pi_matches_conjugation": "the orthogonal image of g acts like conjugation by g",
    "epin.eo_preserves_form": "EO_2n words preserve q on all of H(R^n)",
    "epin.hyperbolic_embedding": "H(E_ij(λ)) = E°_ij(λ)",
    "epin.transitive_witness": "ε = I + vᵀ(w₂ - w₁): w₁ε = w₂ and vε^{⊺,-1} = v",
    "vaserstein.pfaffian": "V(v,w) is alternating, pf V(v,w) = v·wᵀ, det V = pf²",
    "vaserstein.display": "β S₂ J₂ βᵀ equals the explicit alternating matrix",
    "vaserstein.transport": "V(g•S) = g'V(S)g'ᵀ with g' = βgβᵀ",
    "vaserstein.pfaffian_invariance": "pf V(g•S) = pf V(S)",
    "vaserstein.fixers_symplectic": "a point fixer with gg* = 1 satisfies gJgᵀ = J",
    "composition.norm_multiplicative": "N(αβ) = N(α)N(β) in split quaternions and octonions",
    "composition.octonion_identification": "N(O(v, w)) = v·wᵀ on H(R^4)",
    "composition.q_multiplicative": "q(X ⊙ Y) = q(X)q(Y)",
    "composition.quaternion_associative": "(X ⊙ Y) ⊙ W = X ⊙ (Y ⊙ W) for split quaternions",
    "composition.octonion_nonassociative": "⊙ on octonion Z-matrices is not associative",
    "composition.identity_element": "(a, 1; -1, 0) is a two-sided identity for ⊙",
    "composition.plane_suslin": "Z₁ built from H(R³) data is the Suslin matrix S₂",
    "composition.permuted_suslin": "the Z-matrix of a row is a Suslin matrix of the permuted row",
    "composition.vdk_closed_form": "composing unimodular rows gives ((a₁, a₂)β, a₃, ..., a_n)",
    "composition.clifford_embedding": "phi(x)² = q(x)I and polarization on A ⊕ H(R^n)",
    "composition.rank_identities": "rank Cl(A ⊕ H(R^n)) equals rank of the target matrix algebra",
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    passed: bool
    trials: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "trials": self.trials,
            "counterexample": self.counterexample,
        }


def run_check(name: str, trials: int, body: Callable[[int], dict | None]) -> CheckResult:
    """Call ``body(k)`` for k < trials; a non-None return is a counterexample."""
    done = 0
    for k in range(trials):
        try:
            bad = body(k)
        except SuslinForgeError as exc:
            bad = {"error": f"{type(exc).__name__}: {exc}"}
        done += 1
        if bad is not None:
            return CheckResult(name, ANCHORS[name], False, done, bad)
    return CheckResult(name, ANCHORS[name], True, done)


def _pt(p: SpherePoint) -> dict:
    d = p.to_json()
    d.pop("ring")
    return d


def _val(ring: Ring, x):
    return ring.value_to_json(x)


# ---------------------------------------------------------------------------
# Suslin matrices and the Clifford embedding
# ---------------------------------------------------------------------------


def suslin_suite(ring: Ring, rng, trials: int, lengths=range(2, 7)) -> list[CheckResult]:
    out = []
    lengths = list(lengths)

    def product_with_bar(k):
        for n in lengths:
            p = random_point(ring, n, rng)
            s, b = suslin_pair(ring, p.v, p.w)
            q = p.q()
            if not ((s @ b).is_scalar(q) and (b @ s).is_scalar(q)):
                return {"point": _pt(p)}
        return None

    def bar_swapped(k):
        for n in lengths:
            p = random_point(ring, n, rng)
            if suslin_pair(ring, p.v, p.w)[1] != suslin_pair(ring, p.w, p.v)[0].transpose():
                return {"point": _pt(p)}
        return None

    def star_parity(k):
        for n in range(1, 6):
            p = random_point(ring, n + 1, rng)
            s, b = suslin_pair(ring, p.v, p.w)
            want = s if (n + 1) % 2 else b
            if star(s, n) != want:
                return {"point": _pt(p)}
        return None

    def bilinear_form(k):
        for n in lengths:
            p1, p2 = random_point(ring, n, rng), random_point(ring, n, rng)
            s1, b1 = suslin_pair(ring, p1.v, p1.w)
            s2, b2 = suslin_pair(ring, p2.v, p2.w)
            if not (s1 @ b2 + s2 @ b1).is_scalar(bilinear(p1, p2).payload):
                return {"p1": _pt(p1), "p2": _pt(p2)}
        return None

    out += [
        run_check("suslin.product_with_bar", trials, product_with_bar),
        run_check("suslin.bar_is_swapped_transpose", trials, bar_swapped),
        run_check("suslin.star_parity", trials, star_parity),
        run_check("suslin.bilinear_form", trials, bilinear_form),
    ]

    def j_orth(k):
        n = k
        j = j_matrix(n, ring)
        if not (j @ j.transpose()).is_identity():
            return {"n": n}
        return None

    out.append(run_check("suslin.j_orthogonal", J_MAX_LEVEL + 1, j_orth))
    out += basis_checks(ring)
    out.append(commutator_check(ring, rng, lambdas_per_case=5))
    out += clifford_checks(ring, rng, trials)
    return out


def _bar_unit(ring: Ring, kind: str, i: int, n: int) -> MatrixR:
    e = tuple(ring.one if k == i - 1 else ring.zero for k in range(n))
    z = (ring.zero,) * n
    return suslin_pair(ring, e, z)[1] if kind == "E" else suslin_pair(ring, z, e)[1]


def basis_checks(ring: Ring, lengths=range(2, 6)) -> list[CheckResult]:
    cases = [(n, kind) for n in lengths for kind in "EF"]

    def first(k):
        n, kind = cases[k]
        x = basis_unit(kind, 1, n, ring).body
        if x @ x != x or not (x + _bar_unit(ring, kind, 1, n)).is_identity():
            return {"n": n, "kind": kind}
        return None

    def higher(k):
        n, kind = cases[k]
        for i in range(2, n + 1):
            x = basis_unit(kind, i, n, ring).body
            if _bar_unit(ring, kind, i, n) != -x or not (x @ x).is_zero():
                return {"n": n, "kind": kind, "i": i}
        return None

    def twist(k):
        n, kind1 = cases[k]
        x1 = basis_unit(kind1, 1, n, ring).body
        xb1 = _bar_unit(ring, kind1, 1, n)
        for i in range(2, n + 1):
            for kind in "EF":
                xi = basis_unit(kind, i, n, ring).body
                if xi @ x1 != xb1 @ xi:
                    return {"n": n, "kinds": [kind1, kind], "i": i}
        return None

    return [
        run_check("suslin.basis_first_index", len(cases), first),
        run_check("suslin.basis_higher_index", len(cases), higher),
        run_check("suslin.basis_twist", len(cases), twist),
    ]


def commutator(a: MatrixR, b: MatrixR, a_inv: MatrixR, b_inv: MatrixR) -> MatrixR:
    """[A, B] = A B A⁻¹ B⁻¹."""
    return a @ b @ a_inv @ b_inv


def commutator_check(ring: Ring, rng, lambdas_per_case: int = 5, lengths=(3, 4, 5)) -> CheckResult:
    cases = []
    for n in lengths:
        for i, j in itertools.permutations(range(2, n + 1), 2):
            for kinds in itertools.product("EF", repeat=3):
                cases.append((n, i, j, kinds))

    def body(k):
        n, i, j, (k1, ki, kj) = cases[k]
        x1 = basis_unit(k1, 1, n, ring).body
        xi = basis_unit(ki, i, n, ring).body
        xj = basis_unit(kj, j, n, ring).body
        eye = MatrixR.identity(ring, x1.dim)
        nb = x1 @ xj
        b, b_inv = eye + nb, eye - nb
        for _ in range(lambdas_per_case):
            lam = ring.random(rng)
            na = (xi @ x1).scale(lam)
            a, a_inv = eye + na, eye - na
            if not ((a @ a_inv).is_identity() and (b @ b_inv).is_identity()):
                return {"n": n, "i": i, "j": j, "kinds": [k1, ki, kj], "issue": "inverse"}
            lhs = eye + (xi @ xj).scale(lam)
            if lhs != commutator(a, b, a_inv, b_inv):
                return {"n": n, "i": i, "j": j, "kinds": [k1, ki, kj], "lambda": _val(ring, lam)}
        return None

    return run_check("suslin.commutator_relations", len(cases), body)


def clifford_checks(ring: Ring, rng, trials: int, lengths=(2, 3, 4)) -> list[CheckResult]:
    def square(k):
        for n in lengths:
            p = random_point(ring, n, rng)
            f = phi_matrix(p)
            if not (f @ f).is_scalar(p.q()):
                return {"point": _pt(p)}
        return None

    def polarized(k):
        for n in lengths:
            p1, p2 = random_point(ring, n, rng), random_point(ring, n, rng)
            if not anticommutator(phi_matrix(p1), phi_matrix(p2)).is_scalar(bilinear(p1, p2).payload):
                return {"p1": _pt(p1), "p2": _pt(p2)}
        return None

    def grading(k):
        n = lengths[k % len(lengths)]
        length = 1 + k % 4
        m = MatrixR.identity(ring, 2 ** n)
        for _ in range(length):
            m = m @ phi_matrix(random_point(ring, n, rng))
        ok = is_odd(m) if length % 2 else is_even(m)
        return None if ok else {"n": n, "length": length}

    return [
        run_check("clifford.square", trials, square),
        run_check("clifford.polarized", trials, polarized),
        run_check("clifford.grading", trials, grading),
    ]


# ---------------------------------------------------------------------------
# Epin and EO actions
# ---------------------------------------------------------------------------


def _hyperbolic_form(ring: Ring, n: int) -> MatrixR:
    eye, zero = MatrixR.identity(ring, n), MatrixR.zeros(ring, n)
    return MatrixR.block(zero, eye, eye, zero)


def epin_suite(ring: Ring, rng, trials: int, n: int = 3) -> list[CheckResult]:
    def block_form(k):
        g = random_generator(ring, n, rng)
        top, bottom = epin_blocks(g)
        if epin_matrix(g) != MatrixR.block_diag(top, bottom):
            return {"generator": g.to_json()}
        return None

    def closed_form(k):
        g = random_generator(ring, n, rng)
        p = random_unit_point(ring, n, rng)
        if act_on_point(g, p) != closed_form_action(g, p):
            return {"generator": g.to_json(), "point": _pt(p)}
        return None

    def form_preserved(k):
        g = random_generator(ring, n, rng)
        p = random_point(ring, n, rng)
        if act_on_point(g, p).q() != p.q():
            return {"generator": g.to_json(), "point": _pt(p)}
        return None

    def sigma(k):
        word = random_word(ring, n, 1 + k % 4, rng)
        p = random_unit_point(ring, n, rng)
        image, s = extract_sigma(word, p)
        direct = p
        for g in word:
            direct = act_on_point(g, direct)
        if image != direct or act_by_elementary(s, p) != direct:
            return {"word": [g.to_json() for g in word], "point": _pt(p)}
        return None

    def block_moves(k):
        p = random_unit_point(ring, n + 1, rng)
        kind = rng.choice("EF")
        idx = rng.randrange(1, n + 1)
        lam = ring.random(rng)
        for display in (1, 2):
            image, eps = block_action(kind, idx, lam, p, display)
            if act_by_elementary(eps, p) != image:
                return {"point": _pt(p), "kind": kind, "k": idx, "display": display}
        return None

    h = _hyperbolic_form(ring, n)

    def pi_matches(k):
        g = random_generator(ring, n, rng)
        pi = pi_matrix(g)
        p = random_point(ring, n, rng)
        if apply_orthogonal(pi, p) != act_on_point(g, p) or pi @ h @ pi.transpose() != h:
            return {"generator": g.to_json(), "point": _pt(p)}
        return None

    def eo_form(k):
        p = random_point(ring, n, rng)
        x = p
        for _ in range(4):
            i = rng.randrange(1, 2 * n + 1)
            j = rng.choice([t for t in range(1, 2 * n + 1) if t != i])
            x = apply_orthogonal(eo_generator(i, j, ring.random(rng), n, ring).body, x)
        if x.q() != p.q():
            return {"point": _pt(p)}
        return None

    def embed(k):
        i, j = rng.sample(range(1, n + 1), 2)
        lam = ring.random(rng)
        if hyperbolic_embed(elem_generator(i, j, lam, n, ring)).body != eo_generator(i, j, lam, n, ring).body:
            return {"i": i, "j": j, "lambda": _val(ring, lam)}
        return None

    return [
        run_check("epin.block_form", trials, block_form),
        run_check("epin.closed_form_action", trials, closed_form),
        run_check("epin.form_preserved", trials, form_preserved),
        run_check("epin.sigma_extraction", trials, sigma),
        run_check("epin.block_action", trials, block_moves),
        run_check("epin.pi_matches_conjugation", trials, pi_matches),
        run_check("epin.eo_preserves_form", trials, eo_form),
        run_check("epin.hyperbolic_embedding", trials, embed),
        witness_check(ring, rng, trials, n),
    ]


def witness_check(ring: Ring, rng, trials: int, n: int = 3) -> CheckResult:
    def body(k):
        p = random_unit_point(ring, n, rng)
        w2 = second_lift(p, rng)
        wit = transitive_witness(p.v, p.w, w2, ring)
        ok = (
            row_times(ring, p.w, wit.epsilon.body) == w2
            and row_times(ring, p.v, wit.epsilon.inverse_transpose()) == p.v
            and wit.orthogonal.act(p) == SpherePoint(ring, p.v, w2)
        )
        return None if ok else {"v": [_val(ring, x) for x in p.v], "w1": [_val(ring, x) for x in p.w],
                                "w2": [_val(ring, x) for x in w2]}

    return run_check("epin.transitive_witness", trials, body)


# ---------------------------------------------------------------------------
# Vaserstein symbol
# ---------------------------------------------------------------------------


def random_spin_element(ring: Ring, rng, length: int) -> MatrixR:
    return top_block_word([epin_blocks(random_generator(ring, 3, rng))[0] for _ in range(length)], ring)


def point_fixers(ring: Ring, rng, limit: int, depth: int = 3) -> list[MatrixR]:
    """Nontrivial g fixing S(e₁, f₁) = I, found as collisions g₁•I = g₂•I between words."""
    lams = [ring.one, ring.neg(ring.one)]
    pairs = []
    for g in epin_generators(ring, 3, lams):
        top = epin_blocks(g)[0]
        inv = epin_blocks(g.inverse())[0]
        pairs.append((top, inv))
    rng.shuffle(pairs)
    eye = MatrixR.identity(ring, 4)
    seen: dict[MatrixR, MatrixR] = {eye: eye}
    layer = [(eye, eye)]
    fixers: list[MatrixR] = []
    found = set()
    for _ in range(depth):
        nxt = []
        for g, g_inv in layer:
            for top, inv in pairs:
                h, h_inv = top @ g, g_inv @ inv
                image = h @ star(h, 2)
                known_inv = seen.get(image)
                if known_inv is None:
                    seen[image] = h_inv
                    nxt.append((h, h_inv))
                    continue
                f = known_inv @ h
                if not f.is_identity() and f not in found:
                    found.add(f)
                    fixers.append(f)
                    if len(fixers) >= limit:
                        return fixers
        layer = nxt
    return fixers


def vaserstein_suite(ring: Ring, rng, trials: int) -> list[CheckResult]:
    def pf(k):
        p = random_point(ring, 3, rng)
        v = vaserstein_matrix(p)
        q = RingValue(ring, p.q())
        if v.pfaffian != q or pfaffian(v.body) != q or RingValue(ring, det_berkowitz(v.body)) != q * q:
            return {"point": _pt(p)}
        return None

    def display(k):
        p = random_point(ring, 3, rng)
        if vaserstein_matrix(p).body != vaserstein_display(p):
            return {"point": _pt(p)}
        return None

    def transport(k):
        p = random_unit_point(ring, 3, rng)
        g = random_spin_element(ring, rng, 1 + k % 4)
        res = transport_action(g, p)
        if res.v_prime.body != vaserstein_matrix(res.image).body:
            return {"point": _pt(p), "g": g.to_json()}
        return None

    def pf_invariance(k):
        p = random_point(ring, 3, rng)
        g = random_spin_element(ring, rng, 1 + k % 4)
        res = transport_action(g, p)
        if res.v_prime.pfaffian != vaserstein_matrix(p).pfaffian:
            return {"point": _pt(p), "g": g.to_json()}
        return None

    out = [
        run_check("vaserstein.pfaffian", trials, pf),
        run_check("vaserstein.display", trials, display),
        run_check("vaserstein.transport", trials, transport),
        run_check("vaserstein.pfaffian_invariance", trials, pf_invariance),
    ]
    fixers = point_fixers(ring, rng, limit=max(trials, 1))
    j = j_matrix(2, ring)

    def fixer(k):
        if not fixers:
            return {"issue": "no nontrivial fixer found"}
        g = fixers[k]
        if not (g @ star(g, 2)).is_identity():
            return {"g": g.to_json(), "issue": "not a fixer"}
        return None if sp4_fixer_check(g) else {"g": g.to_json(), "gJgT": (g @ j @ g.transpose()).to_json()}

    out.append(run_check("vaserstein.fixers_symplectic", max(len(fixers), 1), fixer))
    return out


# ---------------------------------------------------------------------------
# Composition laws
# ---------------------------------------------------------------------------


def _random_z(algebra: str, ring: Ring, v, rng) -> comp.ZMatrix:
    alpha = comp.AlgElement.random(algebra, ring, rng)
    return comp.z_matrix(alpha, v, [ring.random(rng) for _ in v])


def composition_suite(ring: Ring, rng, trials: int) -> list[CheckResult]:
    algebras = (comp.QUATERNION, comp.OCTONION)

    def norm_mult(k):
        for alg in algebras:
            a, b = comp.AlgElement.random(alg, ring, rng), comp.AlgElement.random(alg, ring, rng)
            if (a * b).norm() != a.norm() * b.norm():
                return {"algebra": alg, "alpha": a.to_json(), "beta": b.to_json()}
        return None

    def identification(k):
        p = random_point(ring, 4, rng)
        o = comp.octonion_from_point(ring, p.v, p.w)
        if o.norm() != RingValue(ring, p.q()) or comp.octonion_to_point(o) != p:
            return {"point": _pt(p)}
        return None

    levels = {comp.QUATERNION: (1, 2, 3), comp.OCTONION: (1, 2, 3)}

    def q_mult(k):
        for alg in algebras:
            for level in levels[alg]:
                v = [ring.random(rng) for _ in range(level)]
                x, y = _random_z(alg, ring, v, rng), _random_z(alg, ring, v, rng)
                if comp.compose(x, y).q != x.q * y.q:
                    return {"algebra": alg, "level": level, "X": x.to_json(), "Y": y.to_json()}
        return None

    def assoc(k):
        for level in (1, 2, 3):
            v = [ring.random(rng) for _ in range(level)]
            x, y, w = (_random_z(comp.QUATERNION, ring, v, rng) for _ in range(3))
            if comp.compose(comp.compose(x, y), w) != comp.compose(x, comp.compose(y, w)):
                return {"level": level, "X": x.to_json(), "Y": y.to_json(), "W": w.to_json()}
        return None

    def identity(k):
        x = _random_z(comp.QUATERNION, ring, [ring.random(rng)], rng)
        e = comp.plane_identity(comp.QUATERNION, ring, x.v[0])
        if comp.compose(e, x) != x or comp.compose(x, e) != x:
            return {"X": x.to_json()}
        return None

    def plane(k):
        p1 = random_point(ring, 3, rng)
        z = comp.z_matrix(comp.quaternion_of_pair(ring, p1.v[1:], p1.w[1:]), p1.v[:1], p1.w[:1])
        if z.matrices()[0] != suslin_pair(ring, p1.v, p1.w)[0]:
            return {"point": _pt(p1)}
        p2 = SpherePoint(ring, p1.v[:1] + random_point(ring, 2, rng).v, random_point(ring, 3, rng).w)
        p3 = comp.suslin_plane_compose(p1, p2)
        if RingValue(ring, p3.q()) != RingValue(ring, p1.q()) * RingValue(ring, p2.q()):
            return {"p1": _pt(p1), "p2": _pt(p2)}
        return None

    def permuted(k):
        n = 3 + k % 3
        p = random_point(ring, n, rng)
        order = list(range(n - 1, 1, -1)) + [0, 1]
        want = suslin_pair(ring, tuple(p.v[i] for i in order), tuple(p.w[i] for i in order))[0]
        if comp.vdk_z_matrix(p).matrices()[0] != want:
            return {"point": _pt(p)}
        return None

    def vdk(k):
        n = 3 + k % 2
        p1 = random_unit_point(ring, n, rng)
        p2 = unit_point_with_tail(ring, p1.v[2:], rng)
        p3 = comp.vdk_compose(p1, p2)
        beta = comp.vdk_beta(p2)
        head = row_times(ring, p1.v[:2], beta)
        if p3.v != tuple(head) + p1.v[2:] or not p3.is_unit():
            return {"p1": _pt(p1), "p2": _pt(p2)}
        return None

    def clifford(k):
        for alg in algebras:
            v = [ring.random(rng) for _ in range(2)]
            alpha = comp.AlgElement.random(alg, ring, rng)
            other = _random_z(alg, ring, [ring.random(rng) for _ in range(2)], rng)
            if not comp.clifford_embed_check(alpha, v, [ring.random(rng) for _ in range(2)], other):
                return {"algebra": alg, "alpha": alpha.to_json()}
        return None

    def ranks(k):
        n = k + 1
        for alg in algebras:
            r = comp.rank_identities(alg, n)
            if not r["clifford_rank"] == r["matrix_rank"] == r["expected"]:
                return {"algebra": alg, "n": n, **r}
        return None

    def nonassoc(k):
        witness = comp.find_nonassociative_triple(IntegersMod(3))
        return None if witness else {"issue": "no witness over Z/3"}

    return [
        run_check("composition.norm_multiplicative", trials, norm_mult),
        run_check("composition.octonion_identification", trials, identification),
        run_check("composition.q_multiplicative", trials, q_mult),
        run_check("composition.quaternion_associative", trials, assoc),
        run_check("composition.octonion_nonassociative", 1, nonassoc),
        run_check("composition.identity_element", trials, identity),
        run_check("composition.plane_suslin", trials, plane),
        run_check("composition.permuted_suslin", trials, permuted),
        run_check("composition.vdk_closed_form", trials, vdk),
        run_check("composition.clifford_embedding", trials, clifford),
        run_check("composition.rank_identities", 6, ranks),
    ]


SUITES = {
    "suslin": suslin_suite,
    "epin": epin_suite,
    "vaserstein": vaserstein_suite,
    "composition": composition_suite,
}
