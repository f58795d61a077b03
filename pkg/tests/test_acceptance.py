"""Acceptance gate: one test and one reported pass/fail line per criterion.

Criteria 1-2 drive exhaustive grids through the equivalence harness,
criteria 4-9 reuse one session-wide corpus of 530 seeded bisubmodular
functions, and the remainder pin down the separating example, the LP
half-integrality guarantee, the violation-mass dichotomy, and CLI byte
determinism.  Each test appends exactly one line to the terminal summary.
"""

from __future__ import annotations

import random

from bspoly.bisubmod import dep, feasible_directions, polyhedron_contains
from bspoly.core import PointSet, add, norm1, phi_steps, precedes, sub, violation
from bspoly.axioms import (
    check_bs_exc,
    check_delta_exc,
    check_hole_free,
    check_jump_system,
)
from bspoly.exchange import Decomposition, decompose, zero_sum_exchange
from bspoly.oracle import is_bs_convex
from bspoly.ratlp import OPTIMAL, in_conical_hull, solve, standard_lp
from cli_examples import EXAMPLES, GOLDEN, run_cli
from conftest import criterion_lines
from oracles import (
    brute_force_decomposition_exists,
    replay_zero_sum,
    steps_toward,
)


def _record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num:02d} {title}: {'PASS' if ok else 'FAIL'} [{detail}]"
    criterion_lines.append(line)
    assert ok, line


def _unit_steps(dim: int):
    return [s for s in phi_steps(dim) if norm1(s) == 1]


def test_criterion_01_dim1_exhaustive_equivalence(dim1_exhaustive_report):
    elapsed, report = dim1_exhaustive_report
    ok = (report.total == 31 and not report.disagreements
          and not report.implication_violations and elapsed < 1.0)
    _record(1, "dim-1 exhaustive three-way equivalence", ok,
            f"{report.total} subsets, {len(report.disagreements)} "
            f"disagreements, {elapsed:.2f}s < 1s")


def test_criterion_02_dim2_exhaustive_equivalence(dim2_exhaustive_report):
    elapsed, report = dim2_exhaustive_report
    ok = (report.total == 511 and not report.disagreements
          and not report.implication_violations and elapsed < 30.0)
    _record(2, "dim-2 exhaustive three-way equivalence", ok,
            f"{report.total} subsets, {len(report.disagreements)} "
            f"disagreements, {elapsed:.1f}s < 30s")


def test_criterion_03_separating_example():
    b = PointSet.from_points(1, [(0,), (2,)])
    hole = check_hole_free(b)
    checks = {
        "jump PASS": check_jump_system(b).passed,
        "hole-free FAIL at 1": (not hole.passed
                                and hole.witness["hole"] == (1,)),
        "one-step FAIL": not check_delta_exc(b).passed,
        "oracle false": not is_bs_convex(b).passed,
    }
    ok = all(checks.values())
    _record(3, "separating two-point example", ok,
            ", ".join(name for name, good in checks.items() if good)
            or "all sub-checks failed")


def test_criterion_04_generated_sets_pass_all_axioms(instance_corpus,
                                                     corpus_axiom_runtimes):
    build_seconds, items = instance_corpus
    check_seconds, verdicts = corpus_axiom_runtimes
    failures = sum(1 for name in ("delta_exc", "jump_system", "bs_exc")
                   for v in verdicts[name] if not v.passed)
    total_seconds = build_seconds + check_seconds
    ok = len(items) >= 500 and failures == 0 and total_seconds < 120.0
    _record(4, "500+ generated sets pass all exchange axioms", ok,
            f"{len(items)} instances, {failures} failures, "
            f"{total_seconds:.1f}s < 120s")


def test_criterion_05_cone_membership(instance_corpus):
    _, items = instance_corpus
    checked = failures = 0
    for f, b in items:
        directions = {p: feasible_directions(f, p) for p in b}
        for p in b:
            for q in b:
                checked += 1
                if not in_conical_hull(directions[p], sub(q, p)):
                    failures += 1
    ok = failures == 0 and checked > 0
    _record(5, "displacements lie in the feasible-direction cone", ok,
            f"{checked} ordered pairs, {failures} failures")


def test_criterion_06_local_step_equivalences(instance_corpus):
    _, items = instance_corpus
    unit_checked = pair_checked = failures = 0
    for f, b in items:
        units = _unit_steps(f.dim)
        for p in b:
            tangent = set(feasible_directions(f, p))
            deps = {s: dep(f, p, s) for s in units}
            for s in units:
                unit_checked += 1
                stays = polyhedron_contains(f, add(p, s))
                if not (stays == (s in tangent) == deps[s].empty_meet):
                    failures += 1
            for s_u in units:
                if polyhedron_contains(f, add(p, s_u)):
                    continue
                d = deps[s_u]
                for s_v in units:
                    if any(a and bb for a, bb in zip(s_u, s_v)):
                        continue
                    pair_checked += 1
                    pair = add(s_u, s_v)
                    stays = polyhedron_contains(f, add(p, pair))
                    in_cone = pair in tangent
                    below = (not d.empty_meet) and precedes(
                        tuple(-e for e in s_v), d.vector)
                    if not (stays == in_cone == below):
                        failures += 1
    ok = failures == 0 and unit_checked > 0 and pair_checked > 0
    _record(6, "unit and pair step equivalences", ok,
            f"{unit_checked} unit + {pair_checked} pair checks, "
            f"{failures} exceptions")


def test_criterion_07_zero_sum_walks(instance_corpus):
    _, items = instance_corpus
    checked = failures = 0
    for _, b in items:
        for q in b:
            for r in b:
                if q == r:
                    continue
                checked += 1
                if not replay_zero_sum(b, q, r, zero_sum_exchange(b, q, r)):
                    failures += 1
    ok = failures == 0 and checked > 0
    _record(7, "zero-sum walk certificates re-verify", ok,
            f"{checked} pairs, {failures} exceptions")


def test_criterion_08_half_integral_vertices(lp_vertex_log,
                                             dim2_exhaustive_report,
                                             corpus_axiom_runtimes):
    logged_bad = sum(1 for x in lp_vertex_log
                     if any((2 * e).denominator != 1 for e in x))
    rng = random.Random(20260814)
    fresh_bad = 0
    for i in range(1000):
        dim = 1 + i % 4
        steps = list(phi_steps(dim))
        rng.shuffle(steps)
        cols = steps[:rng.randint(1, len(steps))]
        mults = [rng.randint(0, 3) for _ in cols]
        b = [sum(k * col[u] for k, col in zip(mults, cols))
             for u in range(dim)]
        # b was assembled from the columns, so the LP is always feasible
        lp = standard_lp([[col[u] for col in cols] for u in range(dim)],
                         b, [rng.randint(0, 3) for _ in cols])
        result = solve(lp)
        if result.status != OPTIMAL or any(
                (2 * e).denominator != 1 for e in result.x):
            fresh_bad += 1
    ok = logged_bad == 0 and fresh_bad == 0 and len(lp_vertex_log) >= 1000
    _record(8, "LP vertices are half-integral", ok,
            f"{len(lp_vertex_log)} logged + 1000 fresh vertices, "
            f"{logged_bad + fresh_bad} violations")


def test_criterion_09_decompositions_reverify(corpus_axiom_runtimes):
    _, verdicts = corpus_axiom_runtimes
    cert_checked = cert_bad = 0
    for verdict in verdicts["bs_exc"]:
        if not verdict.passed:
            continue
        for entry in verdict.witness["decompositions"]:
            cert_checked += 1
            if not _decomposition_entry_ok(entry):
                cert_bad += 1
    grid = [(x, y) for x in range(3) for y in range(3)]
    search_checked = search_bad = 0
    for mask in range(1, 2 ** len(grid)):
        b = PointSet.from_points(
            2, [grid[i] for i in range(len(grid)) if mask >> i & 1])
        for p in b:
            for q in b:
                if norm1(sub(q, p)) > 4:
                    continue
                search_checked += 1
                found = isinstance(decompose(b, p, q), Decomposition)
                if found != brute_force_decomposition_exists(b, p, q):
                    search_bad += 1
    ok = cert_bad == 0 and search_bad == 0 and cert_checked > 0
    _record(9, "decompositions and refusals re-verify", ok,
            f"{cert_checked} certificates + {search_checked} "
            f"exhaustive searches, {cert_bad + search_bad} mismatches")


def _decomposition_entry_ok(entry) -> bool:
    p, q, steps = entry["p"], entry["q"], entry["steps"]
    dim = len(p)
    allowed = set(steps_toward(dim, p, q))
    if any(step not in allowed for step in steps):
        return False
    total = [0] * dim
    for step in steps:
        for i, e in enumerate(step):
            total[i] += e
    return tuple(total) == tuple(2 * (bb - aa) for aa, bb in zip(p, q))


def test_criterion_10_violation_mass_dichotomy():
    rng = random.Random(10262)
    checked = failures = 0
    for _ in range(10000):
        dim = rng.randint(1, 4)
        r, r2, p, q = (tuple(rng.randint(-3, 3) for _ in range(dim))
                       for _ in range(4))
        checked += 1
        lhs = violation(r, p, q) + violation(r2, p, q)
        rhs = violation(add(r, r2), p, q)
        opposing = any(a * bb < 0 for a, bb in zip(r, r2))
        if (lhs > rhs) != opposing or (not opposing and lhs != rhs):
            failures += 1
    ok = failures == 0 and checked == 10000
    _record(10, "violation-mass dichotomy", ok,
            f"{checked} random tuples, {failures} exceptions")


def test_criterion_11_cli_byte_determinism():
    mismatches = []
    for name, argv, expected_exit in EXAMPLES:
        golden = (GOLDEN / f"{name}.json").read_bytes()
        first = run_cli(argv)
        second = run_cli(argv)
        if first != second:
            mismatches.append(f"{name}: runs differ")
        elif first[0] != expected_exit:
            mismatches.append(f"{name}: exit {first[0]} != {expected_exit}")
        elif first[1] != golden:
            mismatches.append(f"{name}: golden mismatch")
    ok = not mismatches
    _record(11, "CLI byte determinism and golden files", ok,
            f"{len(EXAMPLES)} examples run twice"
            + ("" if ok else "; " + "; ".join(mismatches)))
