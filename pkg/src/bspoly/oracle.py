"""Independent ground truth for BS-convexity, generators, and the harness.

The oracle decides BS-convexity without touching the exchange machinery: it
builds the support function of the input set, checks bisubmodularity of
that table, and re-enumerates the integer points of its polyhedron.  The
axiom checkers and the oracle are three independent routes to the same
answer; the harness runs all of them and treats any disagreement as a
fatal finding to be reported, never auto-resolved.
"""

from __future__ import annotations

import multiprocessing
import os
import random
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import axioms
from .bisubmod import (
    INF,
    BisubFunction,
    check_bisubmodular,
    enumerate_integer_points,
)
from .core import (
    PointSet,
    Verdict,
    dot,
    signed_vectors,
    verdict_fail,
    verdict_pass,
    zero,
)


class RejectionBudgetExceeded(RuntimeError):
    """Rejection sampling used up its attempt budget without an accept."""


def support_function(B: PointSet) -> BisubFunction:
    """f(x) = max over members p of <p, x>; always finite and integral."""
    if len(B) == 0:
        raise ValueError("point set must be nonempty")
    table = {}
    origin = zero(B.dim)
    for x in signed_vectors(B.dim):
        if x == origin:
            continue
        table[x] = max(dot(p, x) for p in B)
    return BisubFunction.from_table(B.dim, table)


def function_to_jsonable(f: BisubFunction) -> dict:
    """Instance-file shape for a function: explicit finite entries only."""
    entries = []
    origin = zero(f.dim)
    for x, value in f.entries():
        if x == origin or value == INF:
            continue
        entries.append({"x": list(x), "f": value})
    return {"kind": "function", "dim": f.dim, "entries": entries}


def is_bs_convex(B: PointSet) -> Verdict:
    """Decide whether B is exactly the integer-point set of the polyhedron
    of its own support function.

    PASS carries that function as the certificate.  FAIL carries the
    failing sub-check: either the support function is not bisubmodular, or
    re-enumerating its polyhedron returns extra points (holes of B).
    """
    if len(B) == 0:
        raise ValueError("point set must be nonempty")
    f = support_function(B)
    table_check = check_bisubmodular(f)
    if not table_check.passed:
        return verdict_fail({
            "reason": "support_function_not_bisubmodular",
            "violation": table_check.witness,
            "function": function_to_jsonable(f),
        })
    roundtrip = enumerate_integer_points(f)
    if roundtrip.points != B.points:
        extra = tuple(p for p in roundtrip if p not in B)
        missing = tuple(p for p in B if p not in roundtrip)
        return verdict_fail({
            "reason": "round_trip_mismatch",
            "extra_points": extra,
            "missing_points": missing,
            "function": function_to_jsonable(f),
        })
    return verdict_pass({"function": function_to_jsonable(f)})


def random_bisubmodular(dim: int, value_range: int, seed: int,
                        max_attempts: int = 200_000) -> BisubFunction:
    """Uniformly sample integer tables until one is bisubmodular.

    Acceptance collapses quickly with dimension, hence the dim cap; see
    random_bisubmodular_via_submodular for a generator that scales.
    """
    if not 1 <= dim <= 3:
        raise ValueError("rejection sampling is limited to dim <= 3")
    if value_range < 0:
        raise ValueError("value_range must be nonnegative")
    rng = random.Random(seed)
    origin = zero(dim)
    args = [x for x in signed_vectors(dim) if x != origin]
    for _ in range(max_attempts):
        table = {x: rng.randint(-value_range, value_range) for x in args}
        f = BisubFunction.from_table(dim, table)
        if check_bisubmodular(f).passed:
            return f
    raise RejectionBudgetExceeded(
        f"no bisubmodular table in {max_attempts} attempts "
        f"(dim={dim}, value_range={value_range}, seed={seed})")


def _random_monotone_submodular(rng: random.Random, dim: int, high: int,
                                max_attempts: int = 50_000) -> dict:
    """Uniformly sample set-function tables until monotone and submodular."""
    ground = tuple(range(dim))
    subsets = []
    for mask in range(2 ** dim):
        subsets.append(frozenset(u for u in ground if mask >> u & 1))
    for _ in range(max_attempts):
        g = {s: (0 if not s else rng.randint(0, high)) for s in subsets}
        if any(g[s] > g[s | {u}] for s in subsets for u in ground):
            continue
        if any(g[s] + g[t] < g[s | t] + g[s & t]
               for s in subsets for t in subsets):
            continue
        return g
    raise RejectionBudgetExceeded(
        f"no monotone submodular table in {max_attempts} attempts")


def random_bisubmodular_via_submodular(
        dim: int, seed: int, value_bound: int = 5,
        max_points: Optional[int] = None,
        max_attempts: int = 10_000) -> BisubFunction:
    """Sample a bisubmodular table that uniform rejection cannot reach.

    Composes two random monotone submodular set functions (one on the
    positive support, one on the negative) with a random integral
    translation; the sum is always bisubmodular because meet and join add
    up to the plain sum coordinatewise and the supports intersect/unite.
    Tables are rerolled until all values fit in [-value_bound, value_bound]
    and, when max_points is given, the integer-point set is that small.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = random.Random(seed)
    origin = zero(dim)
    for _ in range(max_attempts):
        g_pos = _random_monotone_submodular(rng, dim, high=2)
        g_neg = _random_monotone_submodular(rng, dim, high=2)
        shift = tuple(rng.randint(-2, 2) for _ in range(dim))
        table = {}
        for x in signed_vectors(dim):
            if x == origin:
                continue
            pos = frozenset(u for u, e in enumerate(x) if e > 0)
            neg = frozenset(u for u, e in enumerate(x) if e < 0)
            table[x] = g_pos[pos] + g_neg[neg] + dot(shift, x)
        if any(abs(v) > value_bound for v in table.values()):
            continue
        f = BisubFunction.from_table(dim, table)
        if not check_bisubmodular(f).passed:
            raise RuntimeError("composed table failed the bisubmodular check")
        if max_points is not None:
            if len(enumerate_integer_points(f)) > max_points:
                continue
        return f
    raise RejectionBudgetExceeded(
        f"no table within bounds in {max_attempts} attempts "
        f"(dim={dim}, seed={seed})")


def random_point_set(dim: int, box_radius: int, density: float,
                     seed: int) -> PointSet:
    """Independently include each point of the box [-r, r]^dim with the
    given probability; reroll whole passes until nonempty."""
    if dim < 1 or box_radius < 1:
        raise ValueError("dim and box_radius must be positive")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    rng = random.Random(seed)
    cells = list(product(range(-box_radius, box_radius + 1), repeat=dim))
    while True:
        points = [p for p in cells if rng.random() < density]
        if points:
            return PointSet.from_points(dim, points)


@dataclass(frozen=True)
class HarnessConfig:
    """What instances the equivalence harness should run.

    exhaustive_range=R enumerates every nonempty subset of the grid
    {0..R}^dim (grid size capped by max_grid_cells); random_count draws
    seeded random point sets; explicit_sets are used as given.
    """

    dim: int
    exhaustive_range: Optional[int] = None
    random_count: int = 0
    seed: int = 0
    box_radius: int = 2
    density: float = 0.5
    explicit_sets: tuple = ()
    max_grid_cells: int = 16


VERDICT_ORDER = ("delta_exc", "bs_exc", "oracle", "jump_system", "hole_free")


@dataclass(frozen=True)
class EquivalenceReport:
    """Tally of the five checkers across a batch of instances.

    Any disagreement among the one-step checker, the half-step checker and
    the oracle is a fatal finding, serialized in full; so is a violated
    one-way implication (one-step passing but the jump-system or hole-free
    checker failing).
    """

    total: int
    counts: tuple
    disagreements: tuple
    implication_violations: tuple

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.implication_violations

    def to_jsonable(self) -> dict:
        counts = [{"verdicts": dict(zip(VERDICT_ORDER, statuses)),
                   "count": count}
                  for statuses, count in self.counts]
        return {
            "total": self.total,
            "counts": counts,
            "disagreements": [_record_jsonable(r) for r in self.disagreements],
            "implication_violations": [
                dict(item, record=_record_jsonable(item["record"]))
                for item in self.implication_violations
            ],
        }


def _record_jsonable(record: dict) -> dict:
    out = {"points": [list(p) for p in record["points"]]}
    for name in VERDICT_ORDER:
        out[name] = record[name].to_jsonable()
    return out


def _evaluate(task) -> dict:
    dim, points = task
    B = PointSet.from_points(dim, points)
    return {
        "points": B.points,
        "delta_exc": axioms.check_delta_exc(B),
        "bs_exc": axioms.check_bs_exc(B),
        "oracle": is_bs_convex(B),
        "jump_system": axioms.check_jump_system(B),
        "hole_free": axioms.check_hole_free(B),
    }


def _worker_count() -> int:
    raw = os.environ.get("BSPOLY_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_instances(config: HarnessConfig) -> list:
    """Materialize the batch in a fixed order: explicit, exhaustive, random."""
    if config.dim < 1:
        raise ValueError("dim must be >= 1")
    instances = [PointSet.from_points(s.dim, s.points)
                 for s in config.explicit_sets]
    if config.exhaustive_range is not None:
        if config.exhaustive_range < 0:
            raise ValueError("exhaustive_range must be nonnegative")
        cells = list(product(range(config.exhaustive_range + 1),
                             repeat=config.dim))
        if len(cells) > config.max_grid_cells:
            raise ValueError(
                f"grid has {len(cells)} cells; cap is {config.max_grid_cells} "
                f"(2^cells instances)")
        for mask in range(1, 2 ** len(cells)):
            subset = [cells[i] for i in range(len(cells)) if mask >> i & 1]
            instances.append(PointSet.from_points(config.dim, subset))
    if config.random_count < 0:
        raise ValueError("random_count must be nonnegative")
    for i in range(config.random_count):
        instances.append(random_point_set(
            config.dim, config.box_radius, config.density, config.seed + i))
    return instances


def run_equivalence_harness(config: HarnessConfig) -> EquivalenceReport:
    """Run all five checkers on every instance and tally agreement.

    Results are identical whatever the worker count: the instance order is
    fixed and the merge is ordered.
    """
    instances = build_instances(config)
    tasks = [(B.dim, B.points) for B in instances]
    workers = _worker_count()
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            records = pool.map(_evaluate, tasks)
    else:
        records = [_evaluate(task) for task in tasks]

    counts = {}
    disagreements = []
    implication_violations = []
    for record in records:
        statuses = tuple(record[name].status for name in VERDICT_ORDER)
        counts[statuses] = counts.get(statuses, 0) + 1
        delta, bs, orac = (record[n].passed
                           for n in ("delta_exc", "bs_exc", "oracle"))
        if not delta == bs == orac:
            disagreements.append(record)
        if delta and not record["jump_system"].passed:
            implication_violations.append(
                {"kind": "delta_exc_without_jump_system", "record": record})
        if delta and not record["hole_free"].passed:
            implication_violations.append(
                {"kind": "delta_exc_without_hole_free", "record": record})
    return EquivalenceReport(
        total=len(records),
        counts=tuple(sorted(counts.items())),
        disagreements=tuple(disagreements),
        implication_violations=tuple(implication_violations),
    )
