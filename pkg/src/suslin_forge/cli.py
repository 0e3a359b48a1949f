"""Command-line front end.

    suslin-forge verify {suslin,epin,vaserstein,composition,all} --ring zmod:6 --seed 0 --trials 25
    suslin-forge orbits --ring zmod:4 --n 3 --side both --report out.json
    suslin-forge symbol --ring zmod:5 --point '[[1,2,3],[1,0,0]]'
    suslin-forge compose --algebra quaternion --ring int --lhs '{...}' --rhs '{...}'

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage
errors (bad descriptors, malformed input, violated preconditions).
Reports are deterministic for a fixed seed; wall time goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import composition as comp
from .checks import SUITES, CheckResult, random_spin_element
from .errors import BudgetExceededError, InconsistencyError, SuslinForgeError
from .orbits import DEFAULT_BUDGET, BijectionReport, bijection_check
from .rings import Ring, parse_ring
from .sampling import suite_rng
from .suslin import SpherePoint
from .vaserstein import transport_action, vaserstein_matrix

THREADS_ENV = "SUSLIN_FORGE_THREADS"
SUITE_ORDER = ("suslin", "epin", "vaserstein", "composition")


class UsageError(SuslinForgeError, ValueError):
    pass


@dataclass(frozen=True)
class RunReport:
    command: str
    config: dict
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "config": self.config,
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
        }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def worker_count(jobs: int) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        cap = os.cpu_count() or 1
    else:
        try:
            cap = int(raw)
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(cap, jobs))


def cmd_verify(suite: str, ring: Ring, seed: int = 0, trials: int = 25) -> RunReport:
    names = SUITE_ORDER if suite == "all" else (suite,)
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {suite!r}")
    if trials < 1:
        raise UsageError("trials must be positive")

    def run(name: str) -> list[CheckResult]:
        return SUITES[name](ring, suite_rng(seed, name), trials)

    # each suite owns its RNG, so results do not depend on scheduling
    with ThreadPoolExecutor(max_workers=worker_count(len(names))) as pool:
        results = list(pool.map(run, names))
    checks = tuple(c for block in results for c in block)
    config = {"suite": suite, "ring": str(ring), "seed": seed, "trials": trials}
    return RunReport("verify", config, checks)


def cmd_orbits(ring: Ring, n: int, budget: int = DEFAULT_BUDGET, side: str = "both") -> BijectionReport:
    return bijection_check(ring, n, budget=budget, side=side)


def _parse_point(ring: Ring, text: str) -> SpherePoint:
    obj = _load_json(text)
    if isinstance(obj, dict):
        v, w = obj.get("v"), obj.get("w")
    elif isinstance(obj, list) and len(obj) == 2:
        v, w = obj
    else:
        raise UsageError("a point is {\"v\": [...], \"w\": [...]} or [[v...], [w...]]")
    f = ring.value_from_json
    return SpherePoint(ring, tuple(f(x) for x in v), tuple(f(x) for x in w))


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON input: {exc}") from None


def cmd_symbol(ring: Ring, point: SpherePoint, seed: int = 0, checks: int = 5) -> dict:
    """V(v, w), its Pfaffian, and transport identities for a few sampled g."""
    v = vaserstein_matrix(point)
    rng = suite_rng(seed, "symbol")
    transports = []
    for k in range(checks):
        g = random_spin_element(ring, rng, 1 + k % 4)
        try:
            res = transport_action(g, point)
            ok = res.v_prime.body == vaserstein_matrix(res.image).body
            transports.append({"g": g.to_json(), "image": _point_json(res.image), "passed": ok})
        except InconsistencyError as exc:
            transports.append({"g": g.to_json(), "passed": False, "error": str(exc)})
    return {
        "ring": str(ring),
        "point": _point_json(point),
        "V": v.body.to_json(),
        "pfaffian": ring.value_to_json(v.pfaffian.payload),
        "transport_checks": transports,
        "passed": all(t["passed"] for t in transports),
    }


def _point_json(p: SpherePoint) -> dict:
    f = p.owner.value_to_json
    return {"v": [f(x) for x in p.v], "w": [f(x) for x in p.w]}


def _parse_z(algebra: str, ring: Ring, text: str) -> comp.ZMatrix:
    obj = _load_json(text)
    if not isinstance(obj, dict) or not {"alpha", "v", "w"} <= obj.keys():
        raise UsageError("a Z-matrix is {\"alpha\": ..., \"v\": [...], \"w\": [...]}")
    alpha = comp.AlgElement.from_json(algebra, ring, obj["alpha"])
    f = ring.value_from_json
    return comp.z_matrix(alpha, [f(x) for x in obj["v"]], [f(x) for x in obj["w"]])


def cmd_compose(algebra: str, ring: Ring, lhs: str, rhs: str) -> dict:
    """Compose two Z-matrices (quaternion or octonion) or two unimodular rows (``rows``)."""
    if algebra == "rows":
        p1, p2 = _parse_point(ring, lhs), _parse_point(ring, rhs)
        p3 = comp.vdk_compose(p1, p2)
        return {
            "algebra": "rows",
            "ring": str(ring),
            "result": _point_json(p3),
            "q_result": ring.value_to_json(p3.q()),
            "passed": p3.is_unit(),
        }
    name = comp.algebra_name(algebra)
    x, y = _parse_z(name, ring, lhs), _parse_z(name, ring, rhs)
    z = comp.compose(x, y)
    out = z.to_json()
    return {
        "algebra": name,
        "ring": str(ring),
        "result": {k: out[k] for k in ("alpha", "v", "w")},
        "q_lhs": ring.value_to_json(x.q.payload),
        "q_rhs": ring.value_to_json(y.q.payload),
        "q_result": ring.value_to_json(z.q.payload),
        "multiplicative": z.q == x.q * y.q,
        "passed": z.q == x.q * y.q,
    }


def _emit(obj: dict, path: str | None):
    text = dumps(obj)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="suslin-forge", description="Exact checks for Suslin matrices, Spin actions and composition laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=[*SUITE_ORDER, "all"])
    v.add_argument("--ring", default="int")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=25)
    v.add_argument("--json", dest="json_path", help="write the report here instead of stdout")
    v.add_argument("--timing", action="store_true", help="print wall time to stderr")

    o = sub.add_parser("orbits", help="compare Um_n/E_n with U_{2n-1}/EO_2n over a finite ring")
    o.add_argument("--ring", required=True)
    o.add_argument("--n", type=int, default=3)
    o.add_argument("--side", choices=["um", "sphere", "both"], default="both")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("--report", help="write the report here instead of stdout")
    o.add_argument("--timing", action="store_true")

    s = sub.add_parser("symbol", help="Vaserstein matrix and transport checks for a point of H(R^3)")
    s.add_argument("--ring", required=True)
    s.add_argument("--point", required=True, help="JSON [[v...],[w...]] or {\"v\":..,\"w\":..}; @file reads a file")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--checks", type=int, default=5)
    s.add_argument("--json", dest="json_path")

    c = sub.add_parser("compose", help="compose two Z-matrices or two unimodular rows")
    c.add_argument("--algebra", choices=["quaternion", "octonion", "rows"], required=True)
    c.add_argument("--ring", default="int")
    c.add_argument("--lhs", required=True)
    c.add_argument("--rhs", required=True)
    c.add_argument("--json", dest="json_path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        ring = parse_ring(args.ring)
        if args.command == "verify":
            report = cmd_verify(args.suite, ring, args.seed, args.trials)
            _emit(report.to_json(), args.json_path)
            for c in report.checks:
                if not c.passed:
                    print(f"FAIL {c.name}: {c.anchor}", file=sys.stderr)
            code = 0 if report.passed else 1
        elif args.command == "orbits":
            report = cmd_orbits(ring, args.n, args.budget, args.side)
            _emit(report.to_json(), args.report)
            code = 0 if report.ok else 1
        elif args.command == "symbol":
            out = cmd_symbol(ring, _parse_point(ring, args.point), args.seed, args.checks)
            _emit(out, args.json_path)
            code = 0 if out["passed"] else 1
        else:
            out = cmd_compose(args.algebra, ring, args.lhs, args.rhs)
            _emit(out, args.json_path)
            code = 0 if out["passed"] else 1
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    except (SuslinForgeError, OSError, KeyError, TypeError, ValueError) as exc:
        # BudgetExceededError lands here too: the request was too large
        kind = "budget" if isinstance(exc, BudgetExceededError) else "usage"
        print(f"{kind} error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "timing", False):
        print(f"wall time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
