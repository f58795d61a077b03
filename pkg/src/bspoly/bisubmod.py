"""Integral bisubmodular functions as dense tables and their polyhedra.

A function f maps every signed vector of a fixed dimension to an integer or
+inf, with f(0) = 0.  Its polyhedron P(f) is the set of real points p with
<p, x> <= f(x) for every signed vector x; constraints with f(x) = +inf are
vacuous.  Everything here is brute force over the 3^dim table entries, which
is the point: a correctness-first reference at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping, Optional

from .core import (
    DimensionMismatchError,
    PointSet,
    SignedVector,
    Step,
    Verdict,
    as_point,
    as_signed_vector,
    dot,
    join,
    meet,
    norm1,
    phi_steps,
    signed_vectors,
    verdict_fail,
    verdict_pass,
    zero,
)

INF = float("inf")


class UnboundedEnumeration(ValueError):
    """Raised when integer points are requested without any bounding box."""


class PointNotInPolyhedron(ValueError):
    """Raised when an operation requires its base point to lie in P(f)."""


def _rank(x: SignedVector) -> int:
    idx = 0
    for e in x:
        idx = idx * 3 + (e + 1)
    return idx


@dataclass(frozen=True)
class BisubFunction:
    """Dense table over all 3^dim signed vectors; values int or +inf.

    The table is stored as a tuple in lexicographic argument order, so two
    functions are equal exactly when they assign the same values.
    """

    dim: int
    values: tuple

    @staticmethod
    def from_table(dim: int, table: Mapping) -> "BisubFunction":
        """Build from a partial mapping; unlisted nonzero arguments get +inf."""
        if dim < 1:
            raise ValueError("dim must be >= 1")
        filled = [INF] * 3 ** dim
        filled[_rank(zero(dim))] = 0
        for raw_x, value in table.items():
            x = as_signed_vector(raw_x)
            if len(x) != dim:
                raise DimensionMismatchError(
                    f"argument {x} has dimension {len(x)}, expected {dim}")
            filled[_rank(x)] = _validate_value(x, value)
        return BisubFunction(dim, tuple(filled))

    def __call__(self, x: SignedVector):
        if len(x) != self.dim:
            raise DimensionMismatchError(
                f"argument of dimension {len(x)}, expected {self.dim}")
        return self.values[_rank(x)]

    def entries(self) -> Iterator[tuple]:
        """All (x, f(x)) pairs in lexicographic argument order."""
        return zip(signed_vectors(self.dim), self.values)

    @cached_property
    def finite_constraints(self) -> tuple:
        """The nonzero arguments with finite value, i.e. the actual inequalities."""
        origin = zero(self.dim)
        return tuple((x, v) for x, v in self.entries()
                     if x != origin and v != INF)

    @cached_property
    def singleton_values(self) -> tuple:
        """Pairs (f(+chi_u), f(-chi_u)) for each coordinate u."""
        out = []
        for u in range(self.dim):
            plus = tuple(1 if i == u else 0 for i in range(self.dim))
            minus = tuple(-1 if i == u else 0 for i in range(self.dim))
            out.append((self(plus), self(minus)))
        return tuple(out)


def _validate_value(x, value):
    if value == INF:
        return INF
    if isinstance(value, float):
        raise ValueError(f"value {value!r} at {x} is neither an integer nor +inf")
    if x == zero(len(x)):
        if value != 0:
            raise ValueError(f"f(0) must be 0, got {value!r}")
        return 0
    return int(value)


def check_bisubmodular(f: BisubFunction) -> Verdict:
    """Test f(x) + f(y) >= f(meet) + f(join) over all ordered pairs.

    An infinite left side never violates; a finite left side against an
    infinite right side does.  FAIL carries the lexicographically first
    violating pair.
    """
    vectors = tuple(signed_vectors(f.dim))
    values = f.values
    for x in vectors:
        fx = values[_rank(x)]
        if fx == INF:
            continue
        for y in vectors:
            fy = values[_rank(y)]
            if fy == INF:
                continue
            m = meet(x, y)
            j = join(x, y)
            lhs = fx + fy
            rhs = values[_rank(m)] + values[_rank(j)]
            if lhs < rhs:
                return verdict_fail({
                    "x": x, "y": y, "meet": m, "join": j,
                    "lhs": lhs, "rhs": rhs,
                })
    return verdict_pass()


def polyhedron_contains(f: BisubFunction, p) -> bool:
    """Exact membership of a rational point in P(f)."""
    if len(p) != f.dim:
        raise DimensionMismatchError(
            f"point of dimension {len(p)}, expected {f.dim}")
    return all(dot(p, x) <= v for x, v in f.finite_constraints)


def enumerate_integer_points(f: BisubFunction,
                             box: Optional[tuple] = None) -> PointSet:
    """All integer points of P(f) inside the given or derived bounding box.

    Without a box, the singleton values must be finite; they confine P(f) to
    the product of [-f(-chi_u), f(+chi_u)].  The result may be empty.
    """
    if box is None:
        lo, hi = [], []
        for plus, minus in f.singleton_values:
            if plus == INF or minus == INF:
                raise UnboundedEnumeration(
                    "no box given and some singleton value is +inf")
            lo.append(-minus)
            hi.append(plus)
    else:
        lo, hi = (as_point(side) for side in box)
        if len(lo) != f.dim or len(hi) != f.dim:
            raise DimensionMismatchError("box dimension does not match f")
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    points = [p for p in product(*ranges) if polyhedron_contains(f, p)]
    return PointSet.from_points(f.dim, points)


@dataclass(frozen=True)
class DepVector:
    """Meet of all tight constraint vectors whose signed support covers a step.

    empty_meet is true exactly when no constraint qualifies, in which case
    the vector is zero by the empty-meet convention.
    """

    vector: SignedVector
    empty_meet: bool


def _tight_constraints(f: BisubFunction, p) -> tuple:
    return tuple(x for x, v in f.finite_constraints if dot(p, x) == v)


def _require_in_polyhedron(f: BisubFunction, p) -> None:
    if not polyhedron_contains(f, p):
        raise PointNotInPolyhedron(f"{p} is not in the polyhedron of f")


def dep(f: BisubFunction, p, s: Step) -> DepVector:
    """Meet of the tight vectors x at p whose signed support contains s."""
    _require_in_polyhedron(f, p)
    s = as_signed_vector(s)
    if norm1(s) != 1:
        raise ValueError(f"{s} is not a unit step")
    u = next(i for i, e in enumerate(s) if e != 0)
    sign = s[u]
    acc = None
    for x in _tight_constraints(f, p):
        if x[u] == sign:
            acc = x if acc is None else meet(acc, x)
    if acc is None:
        return DepVector(zero(f.dim), True)
    return DepVector(acc, False)


def feasible_directions(f: BisubFunction, p) -> tuple:
    """Steps alpha with p + eps*alpha in P(f) for some eps > 0.

    Decided exactly: alpha qualifies iff <alpha, x> <= 0 for every tight
    constraint x at p.  Never decided by sampling eps.
    """
    _require_in_polyhedron(f, p)
    tight = _tight_constraints(f, p)
    return tuple(alpha for alpha in phi_steps(f.dim)
                 if all(dot(alpha, x) <= 0 for x in tight))
