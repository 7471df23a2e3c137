"""Cross-verification battery: explicit growth against every closed form.

Each degree gets an independent, deterministically seeded run; degrees
are verified concurrently and merged in sorted order, so the report is
reproducible regardless of scheduling.  Fault injection deliberately
corrupts one comparison to prove the harness can fail.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import mesh
from .growth import (
    SeedDescriptor,
    census_step,
    counts_from_boundary,
    deltas_from_census,
    initial_census,
    platonic_counts,
    second_order_step,
)
from .report import SCHEMA_VERSION, seed_descriptor_for
from .summation import (
    RecurrenceSeries,
    euler_formula_check,
    euler_sum,
    euler_sum_by_lemma,
    generating_value,
    mesh_invariants,
    mesh_invariants_from_seed,
    partial_sum,
)

FAULT_MODES = ("census", "invariants")
MAX_VERIFY_DEGREE = 1000
CONVERGENCE_GAP = Fraction(1, 10**12)


class _Tally:
    def __init__(self):
        self.checks: dict[str, list[int]] = {}
        self.violations: list[str] = []

    def record(self, name: str, ok: bool, detail: str = ""):
        slot = self.checks.setdefault(name, [0, 0])
        if ok:
            slot[0] += 1
        else:
            slot[1] += 1
            self.violations.append(f"{name}: {detail}" if detail else name)


def _verify_layers(r: int, seed_kind: str, layers: int, budget: int, tally: _Tally, fault):
    disk = mesh.seed_face(r) if seed_kind == "face" else mesh.seed_vertex(r)
    closed_inv = mesh_invariants(r)
    prev = None
    census_pred = None
    where = f"r={r} seed={seed_kind}"

    for layer in range(layers + 1):
        if layer > 0:
            try:
                prev, disk = disk, mesh.expand(disk, budget)
            except mesh.BudgetExceededError:
                break
        counts = mesh.count_explicit(disk)
        tag = f"{where} layer={layer}"
        tally.record(
            "euler-layer", counts.v - counts.e + counts.f == 1, f"{tag}: v-e+f != 1"
        )
        tally.record("disk-invariants", not mesh.validate_disk(disk), f"{tag}: invariant broken")

        if disk.is_degenerate:
            continue

        profile = mesh.boundary_profile(disk)
        tally.record(
            "handshake",
            profile.d + r * counts.s == 2 * counts.e,
            f"{tag}: d + r*s != 2e",
        )
        tally.record(
            "triangulation",
            3 * counts.f + profile.t == 2 * counts.e,
            f"{tag}: 3f + t != 2e",
        )
        tally.record("convexity", mesh.is_convex(disk), f"{tag}: boundary degree too high")

        descriptor = SeedDescriptor(r, profile.t, profile.d)
        tally.record(
            "closed-form-counts",
            counts_from_boundary(descriptor) == counts,
            f"{tag}: boundary profile does not reproduce measured counts",
        )
        tally.record(
            "seed-independence",
            mesh_invariants_from_seed(descriptor) == closed_inv,
            f"{tag}: invariants depend on the seed profile",
        )

        if prev is not None:
            try:
                census = mesh.layer_census(prev, disk)
                census_ok = True
            except mesh.CensusContradiction as exc:
                census_ok = False
                tally.record("census-degrees", False, f"{tag}: {exc}")
            if census_ok:
                tally.record("census-degrees", True)
                deltas = mesh.delta_counts(prev, disk)
                tally.record(
                    "delta-linear-map",
                    deltas_from_census(census) == deltas,
                    f"{tag}: measured deltas disagree with the census map",
                )
                if prev.is_degenerate:
                    census_pred = None
                else:
                    expected_b = len(prev.boundary)
                    prev_profile = mesh.boundary_profile(prev)
                    expected_a = prev_profile.t * (r - 2) - prev_profile.d
                    a = census.a + (1 if fault == "census" and layer == 1 else 0)
                    tally.record(
                        "census-formulas",
                        a == expected_a and census.b == expected_b,
                        f"{tag}: census ({a}, {census.b}) != predicted "
                        f"({expected_a}, {expected_b})",
                    )
                    if census_pred is not None:
                        tally.record(
                            "census-recursion",
                            census == census_pred,
                            f"{tag}: census disagrees with the linear recursion",
                        )
                    census_pred = census_step(r, census)


def _verify_analytics(r: int, trials: int, rng_seed: int, tally: _Tally, fault):
    where = f"r={r}"
    inv = mesh_invariants(r)
    tally.record("invariants-euler-formula", euler_formula_check(inv), f"{where}: v - e + f != 1")

    for seed_kind in ("face", "vertex"):
        descriptor = seed_descriptor_for(seed_kind, r)
        from_seed = mesh_invariants_from_seed(descriptor)
        if fault == "invariants" and seed_kind == "face":
            from_seed = type(from_seed)(from_seed.v + 1, from_seed.e, from_seed.f)
        tally.record(
            "seed-independence",
            from_seed == inv,
            f"{where} seed={seed_kind}: seeded invariants drift from closed form",
        )

        census = initial_census(descriptor)
        nxt = census_step(r, census)
        d1, d2 = deltas_from_census(census), deltas_from_census(nxt)
        for name, x1, x2 in (("dv", d1.dv, d2.dv), ("de", d1.de, d2.de), ("df", d1.df, d2.df)):
            series = [x1, x2]
            c = nxt
            for _ in range(48):
                c = census_step(r, c)
                d = deltas_from_census(c)
                series.append({"dv": d.dv, "de": d.de, "df": d.df}[name])
            ok = all(
                series[i + 2] == second_order_step(r, series[i], series[i + 1])
                for i in range(len(series) - 2)
            )
            tally.record(
                "recurrence-equivalence",
                ok,
                f"{where} seed={seed_kind} {name}: coupled and second-order forms disagree",
            )

        gamma = r - 4
        probe = RecurrenceSeries(gamma, d1.dv, d2.dv)
        t = Fraction(1, 2 * gamma)
        exact = generating_value(probe, t)
        gap = abs(partial_sum(probe, t, 40) - exact)
        tally.record(
            "convergence",
            gap <= abs(exact) * CONVERGENCE_GAP,
            f"{where} seed={seed_kind}: partial sums stall away from F(t)",
        )

    rng = random.Random(f"meshsum:{rng_seed}:{r}")
    for _ in range(trials):
        x1 = rng.randint(-10**6, 10**6)
        x2 = rng.randint(-10**6, 10**6)
        lhs = euler_sum(RecurrenceSeries(r - 4, x1, x2))
        rhs = euler_sum_by_lemma(r, x1, x2)
        tally.record(
            "sum-routes-agree",
            lhs == rhs,
            f"{where} x1={x1} x2={x2}: Euler sum routes disagree",
        )


def verify_degree(
    r: int,
    layers: int = 6,
    budget: int = mesh.DEFAULT_VERTEX_BUDGET,
    trials: int = 100,
    rng_seed: int = 0,
    fault: str | None = None,
) -> dict:
    """Full battery for one degree; returns its tally as JSON-ready dict."""
    tally = _Tally()
    for seed_kind in ("face", "vertex"):
        _verify_layers(r, seed_kind, layers, budget, tally, fault)
    _verify_analytics(r, trials, rng_seed, tally, fault)
    return {
        "r": r,
        "checks": {name: {"pass": p, "fail": f} for name, (p, f) in sorted(tally.checks.items())},
        "violations": tally.violations,
    }


def run_verification(
    degrees: list[int],
    layers: int = 6,
    budget: int = mesh.DEFAULT_VERTEX_BUDGET,
    trials: int = 100,
    rng_seed: int = 0,
    fault: str | None = None,
) -> dict:
    """Verify every degree concurrently; merge deterministically."""
    if fault is not None and fault not in FAULT_MODES:
        raise ValueError(f"unknown fault mode {fault!r}; expected one of {FAULT_MODES}")
    degrees = sorted(set(degrees))
    if not degrees:
        raise ValueError("no degrees to verify")
    if degrees[0] < mesh.MIN_DEGREE or degrees[-1] > MAX_VERIFY_DEGREE:
        raise ValueError(
            f"verification degrees must lie within {mesh.MIN_DEGREE}..{MAX_VERIFY_DEGREE}"
        )
    workers = max(1, min(len(degrees), os.cpu_count() or 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(
            pool.map(
                lambda r: verify_degree(r, layers, budget, trials, rng_seed, fault), degrees
            )
        )

    merged: dict[str, dict[str, int]] = {}
    violations: list[str] = []
    for res in results:
        for name, counts in res["checks"].items():
            slot = merged.setdefault(name, {"pass": 0, "fail": 0})
            slot["pass"] += counts["pass"]
            slot["fail"] += counts["fail"]
        violations.extend(res["violations"])

    pv, pe, pf = platonic_counts(3), platonic_counts(4), platonic_counts(5)
    platonic_ok = (pv, pe, pf) == ((4, 6, 4), (6, 12, 8), (12, 30, 20))
    merged["platonic"] = {"pass": int(platonic_ok), "fail": int(not platonic_ok)}
    if not platonic_ok:
        violations.append("platonic: closed surfaces disagree with the reference counts")

    all_pass = all(c["fail"] == 0 for c in merged.values())
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify-report",
        "config": {
            "degrees": degrees,
            "layers": layers,
            "budget": budget,
            "trials": trials,
            "rng_seed": rng_seed,
            "fault": fault,
        },
        "checks": {name: merged[name] for name in sorted(merged)},
        "per_degree": results,
        "violations": violations,
        "all_pass": all_pass,
    }
