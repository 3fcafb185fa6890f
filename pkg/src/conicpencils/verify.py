"""Verification suites: exhaustive and sampled cross-checks per level.

Levels:
  q2-full  exhaustive sweep, censuses, stabilizers and generators at q = 2
  q4-full  the same at q = 4 (identity checks are exhaustive here)
  q8-reps  representative, stabilizer and sampled checks at q = 8
  q8-full  the exhaustive sweep of all 19,477,641 solids of PG(5, 8)
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .classifier import classify, expected_table, od_pair_index, pgl3_order
from .group import all_stabilizer_reports, representative, verify_generators
from .projgeom import gaussian_count
from .sweep import (
    expected_hyperplane_census,
    expected_point_census,
    hyperplane_census,
    nested_hyperplane_check,
    point_census,
    random_identity_check,
    run_sweep,
)

LEVELS = ("q2-full", "q4-full", "q8-reps", "q8-full")

GENERATOR_LABELS = (8, 13, 14, 15)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "pass": self.ok,
            "detail": self.detail,
            "seconds": round(self.elapsed, 3),
        }


def _timed(name: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


def _check_representatives(q: int) -> tuple[bool, str]:
    bad = []
    for row in expected_table(q):
        ps = representative(q, row.label)
        pod, hod = ps.point_od(), ps.hyperplane_od()
        if pod != row.point_od or hod != row.hyperplane_od:
            bad.append(f"label {row.label}: OD {pod}/{hod}")
        elif classify(ps, pod, hod) != row.label:
            bad.append(f"label {row.label}: misclassified")
    return not bad, "; ".join(bad) or "15 representatives classify to their labels"


def _check_sweep(res) -> tuple[bool, str]:
    q = res.q
    if res.ok:
        return True, (
            f"{res.total} solids, counts match all 15 orbit sizes, "
            f"0 identity violations"
        )
    parts = []
    if res.total != gaussian_count(6, 4, q):
        parts.append(f"total {res.total}")
    for label, n in res.counts.items():
        if n != res.expected_counts[label]:
            parts.append(f"label {label}: {n} != {res.expected_counts[label]}")
    if res.identity_violations:
        parts.append(f"{res.identity_violations} identity violations")
    if res.forbidden_hod:
        parts.append(f"{res.forbidden_hod} forbidden hyperplane ODs")
    return False, "; ".join(parts)


def _check_all_singular_empty_base(res) -> tuple[bool, str]:
    n = res.all_singular_empty_base
    if n == 0:
        return True, "no pencil with q+1 singular conics and empty base"
    return False, (
        f"{n} pencils with q+1 singular conics and empty base "
        f"(at q=2 these are the 21 orbit-13 solids, ODs [0,1,10,4]/[0,1,2,0])"
    )


def _check_censuses(q: int) -> tuple[bool, str]:
    pc, hc = point_census(q), hyperplane_census(q)
    ok = pc == expected_point_census(q) and hc == expected_hyperplane_census(q)
    return ok, f"points {pc}, hyperplanes {hc}"


def _check_collisions(q: int) -> tuple[bool, str]:
    colliding = sorted(v for v in od_pair_index(q).values() if len(v) > 1)
    expected = [(4, 9), (11, 12)] if q == 2 else [(11, 12)]
    return colliding == expected, f"OD collisions {colliding}"


def _check_stabilizers(q: int) -> tuple[bool, str]:
    reports = all_stabilizer_reports(q)
    bad = [f"label {r.label}: {r.order} != {r.expected_order}" for r in reports if not r.ok]
    orbit_ok = all(
        pgl3_order(q) == r.order * expected_table(q)[r.label - 1].orbit_size
        for r in reports
    )
    if not orbit_ok:
        bad.append("orbit-stabilizer products disagree with |PGL(3,q)|")
    return not bad, "; ".join(bad) or "15 stabilizer orders match, orbit sizes consistent"


def _check_generators(q: int) -> tuple[bool, str]:
    bad = []
    for label in GENERATOR_LABELS:
        res = verify_generators(q, label)
        if not res["pass"]:
            bad.append(f"label {label}: order {res['generated_order']}")
    return not bad, "; ".join(bad) or "stated generators stabilize and have full order"


def _check_nested(q: int) -> tuple[bool, str]:
    tested, violations = nested_hyperplane_check(q)
    return violations == 0, f"{tested} nonsingular hyperplanes, {violations} violations"


def _check_random_identities(q: int, n: int, seed: int) -> tuple[bool, str]:
    tested, violations = random_identity_check(q, n, seed=seed)
    return violations == 0, f"{tested} random solids, {violations} identity violations"


def run_level(level: str, threads: int = 1) -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; choose from {LEVELS}")
    checks: list[CheckResult] = []
    if level in ("q2-full", "q4-full"):
        q = 2 if level == "q2-full" else 4
        checks.append(_timed(f"representatives-q{q}", lambda: _check_representatives(q)))
        checks.append(_timed(f"od-collisions-q{q}", lambda: _check_collisions(q)))
        checks.append(_timed(f"censuses-q{q}", lambda: _check_censuses(q)))
        res_holder = {}

        def _sweep_and_check():
            res_holder["res"] = run_sweep(q, threads=threads)
            return _check_sweep(res_holder["res"])

        checks.append(_timed(f"sweep-q{q}", _sweep_and_check))
        checks.append(
            _timed(
                f"all-singular-empty-base-q{q}",
                lambda: _check_all_singular_empty_base(res_holder["res"]),
            )
        )
        checks.append(_timed(f"nested-hyperplanes-q{q}", lambda: _check_nested(q)))
        checks.append(_timed(f"stabilizers-q{q}", lambda: _check_stabilizers(q)))
        checks.append(_timed(f"generators-q{q}", lambda: _check_generators(q)))
    elif level == "q8-reps":
        checks.append(_timed("representatives-q8", lambda: _check_representatives(8)))
        checks.append(_timed("od-collisions-q8", lambda: _check_collisions(8)))
        checks.append(_timed("censuses-q8", lambda: _check_censuses(8)))
        checks.append(
            _timed("random-identities-q8", lambda: _check_random_identities(8, 100000, 20260823))
        )
        checks.append(_timed("stabilizers-q8", lambda: _check_stabilizers(8)))
        checks.append(_timed("generators-q8", lambda: _check_generators(8)))
    else:
        checks.append(_timed("sweep-q8", lambda: _check_sweep(run_sweep(8, threads=threads))))
    return checks


def summary(q_or_level, checks: list[CheckResult]) -> dict:
    return {
        "level": q_or_level,
        "checks": len(checks),
        "failed": sum(1 for c in checks if not c.ok),
        "pass": all(c.ok for c in checks),
    }
