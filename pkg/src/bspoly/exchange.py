"""Step sets into a point set, exchange decompositions, and zero-sum walks.

decompose answers whether q can be reached from p by half-steps through the
set: it solves an exact LP minimizing the violation mass over all steps from
p that stay in the set, subject to the steps summing to q - p.  A zero
optimum yields the multiset of steps; the vertex is half-integral because
the constraint matrix has column absolute sums at most 2.

zero_sum_exchange builds the closed-walk certificate that steps from q
toward r and steps from r toward q can be paired off to cancel exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ratlp
from .core import (
    IntPoint,
    PointSet,
    Step,
    add,
    phi_steps,
    phi_toward,
    sub,
    supp,
    violation,
)

INFEASIBLE = "infeasible"
POSITIVE_OPTIMUM = "positive_optimum"


class PointNotInSet(ValueError):
    """Raised when a base point is required to be a member of the set."""


class HalfIntegralityViolated(RuntimeError):
    """An LP vertex broke the half-integrality guarantee: a solver bug."""


class ExchangeAxiomViolated(Exception):
    """A coordinate of supp(r-q) has no covering step on one side.

    This certifies that the one-step exchange axiom fails at the recorded
    (p, q, u) triple, so the walk construction's precondition is absent.
    """

    def __init__(self, p: IntPoint, q: IntPoint, u: int):
        super().__init__(f"no step from {p} toward {q} covers coordinate {u}")
        self.p = p
        self.q = q
        self.u = u


def _require_member(B: PointSet, p) -> tuple:
    pt = tuple(p)
    if pt not in B:
        raise PointNotInSet(f"{list(pt)} is not a member of the set")
    return pt


def phi_b(B: PointSet, p: IntPoint) -> tuple:
    """Steps alpha with p + alpha in B, in lexicographic order."""
    p = _require_member(B, p)
    return tuple(alpha for alpha in phi_steps(B.dim) if add(p, alpha) in B)


def phi_b_toward(B: PointSet, p: IntPoint, q: IntPoint) -> tuple:
    """Steps toward q that also land in B: phi_b(B, p) meets phi_toward(p, q)."""
    p = _require_member(B, p)
    q = _require_member(B, q)
    return tuple(alpha for alpha in phi_toward(p, q) if add(p, alpha) in B)


@dataclass(frozen=True)
class Decomposition:
    """Steps alpha_1..alpha_k with p + (sum alpha_i)/2 = q, all landing in B.

    steps is a lexicographically sorted multiset (a tuple with repeats).
    """

    source: IntPoint
    target: IntPoint
    steps: tuple

    def __post_init__(self):
        doubled = tuple(2 * (b - a) for a, b in zip(self.source, self.target))
        total = [0] * len(self.source)
        for step in self.steps:
            for i, e in enumerate(step):
                total[i] += e
        if tuple(total) != doubled:
            raise ValueError("steps do not sum to twice the displacement")

    def multiplicities(self) -> tuple:
        """The distinct steps with counts, in lexicographic step order."""
        out = []
        for step in self.steps:
            if out and out[-1][0] == step:
                out[-1] = (step, out[-1][1] + 1)
            else:
                out.append((step, 1))
        return tuple(out)


@dataclass(frozen=True)
class NoDecomposition:
    """Witness that no half-step multiset from p through B reaches q.

    reason is "infeasible" (q - p is not even in the cone of steps from p)
    or "positive_optimum" (it is, but only using steps that stray from the
    direction of q; optimal_value is the least violation mass).
    """

    source: IntPoint
    target: IntPoint
    reason: str
    optimal_value: Optional[Fraction] = None


def decompose(B: PointSet, p: IntPoint, q: IntPoint):
    """Solve the exact violation-minimizing LP; return its verdict.

    Variables are indexed by all steps from p that stay in B (not only
    steps toward q); the objective charges each step its violation mass, so
    a zero optimum uses steps toward q exclusively.
    """
    p = _require_member(B, p)
    q = _require_member(B, q)
    columns = phi_b(B, p)
    rows = [[Fraction(alpha[u]) for alpha in columns] for u in range(B.dim)]
    rhs = [Fraction(b - a) for a, b in zip(p, q)]
    costs = [Fraction(violation(alpha, p, q)) for alpha in columns]
    result = ratlp.solve(ratlp.standard_lp(rows, rhs, costs))
    if result.status == ratlp.INFEASIBLE:
        return NoDecomposition(p, q, INFEASIBLE)
    if result.status != ratlp.OPTIMAL:
        raise RuntimeError("violation LP cannot be unbounded: costs are >= 0")
    if result.value != 0:
        return NoDecomposition(p, q, POSITIVE_OPTIMUM, result.value)
    steps = []
    for alpha, mu in zip(columns, result.x):
        doubled = 2 * mu
        if doubled.denominator != 1:
            raise HalfIntegralityViolated(
                f"LP vertex entry {mu} for step {alpha} is not half-integral")
        if doubled > 0:
            assert violation(alpha, p, q) == 0
            steps.extend([alpha] * int(doubled))
    return Decomposition(p, q, tuple(sorted(steps)))


@dataclass(frozen=True)
class ZeroSumExchange:
    """Step multisets out of q toward r and out of r toward q, summing to zero."""

    alphas: tuple
    betas: tuple


def zero_sum_exchange(B: PointSet, q: IntPoint, r: IntPoint) -> ZeroSumExchange:
    """Build cancelling step multisets by walking the exchange graph.

    The graph lives on the coordinates where q and r differ; one edge side
    holds the supports of steps from q toward r landing in B, the other the
    supports of steps from r toward q.  Each (edge, vertex) pair picks the
    lexicographically smallest incident edge of the other side; following
    those choices yields an eventually periodic walk whose cycle alternates
    sides.  Cycle edges become steps, with self-loops counted twice.
    """
    q = _require_member(B, q)
    r = _require_member(B, r)
    if q == r:
        raise ValueError("the two points must differ")

    sides = {}
    for tag, base, goal in (("q", q, r), ("r", r, q)):
        step_by_edge = {}
        for alpha in phi_b_toward(B, base, goal):
            edge = tuple(u - 1 for u in supp(alpha))
            step_by_edge[edge] = alpha
        sides[tag] = step_by_edge

    vertices = tuple(u - 1 for u in supp(sub(r, q)))
    incident = {("q", u): [] for u in vertices}
    incident.update({("r", u): [] for u in vertices})
    for tag, step_by_edge in sides.items():
        for edge in step_by_edge:
            for u in edge:
                incident[(tag, u)].append(edge)
    for u in vertices:
        for tag, base, goal in (("q", q, r), ("r", r, q)):
            if not incident[(tag, u)]:
                raise ExchangeAxiomViolated(base, goal, u + 1)

    def chosen(tag: str, u: int) -> tuple:
        other = "r" if tag == "q" else "q"
        return min(incident[(other, u)])

    def successor(state):
        tag, edge, exit_vertex = state
        other = "r" if tag == "q" else "q"
        nxt = chosen(tag, exit_vertex)
        entry = exit_vertex
        leave = nxt[0] + nxt[-1] - entry if len(nxt) == 2 else entry
        return (other, nxt, leave)

    start_edge = min(sides["q"])
    state = ("q", start_edge, start_edge[0])
    seen = {}
    trail = []
    while state not in seen:
        seen[state] = len(trail)
        trail.append(state)
        state = successor(state)
    cycle = trail[seen[state]:]
    if cycle[0][0] == "r":
        cycle = cycle[1:] + cycle[:1]

    alphas, betas = [], []
    for tag, edge, _ in cycle:
        step = sides[tag][edge]
        copies = 2 if len(edge) == 1 else 1
        (alphas if tag == "q" else betas).extend([step] * copies)
    total = [0] * B.dim
    for step in alphas + betas:
        for i, e in enumerate(step):
            total[i] += e
    assert all(e == 0 for e in total), "walk cycle failed to cancel"
    return ZeroSumExchange(tuple(sorted(alphas)), tuple(sorted(betas)))
