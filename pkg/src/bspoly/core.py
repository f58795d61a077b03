"""Signed-vector algebra and integer-point primitives.

Vectors are plain tuples of ints.  A *signed vector* has entries in
{-1, 0, +1}; a *step* is a signed vector of 1-norm 1 or 2; a *point* is an
arbitrary integer vector.  All functions are pure; all orderings are the
lexicographic order on tuples (entrywise -1 < 0 < +1, first coordinate most
significant), which is what makes witnesses reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

SignedVector = tuple  # entries in {-1, 0, 1}
IntPoint = tuple      # entries in Z
Step = tuple          # signed vector with 1-norm 1 or 2


class DimensionMismatchError(ValueError):
    """Raised when two vectors of different dimension are combined."""


def _check_same_dim(x, y) -> None:
    if len(x) != len(y):
        raise DimensionMismatchError(f"dimension mismatch: {len(x)} vs {len(y)}")


def as_signed_vector(entries: Iterable[int]) -> SignedVector:
    """Validate and normalize a signed vector; entries must be -1, 0 or +1."""
    vec = tuple(int(e) for e in entries)
    if not vec:
        raise ValueError("signed vector must have dimension >= 1")
    for e in vec:
        if e not in (-1, 0, 1):
            raise ValueError(f"signed vector entry {e} not in {{-1, 0, 1}}")
    return vec


def as_point(entries: Iterable[int]) -> IntPoint:
    vec = tuple(int(e) for e in entries)
    if not vec:
        raise ValueError("point must have dimension >= 1")
    return vec


def zero(dim: int) -> SignedVector:
    return (0,) * dim


def norm1(x) -> int:
    return sum(abs(e) for e in x)


def dot(p, x):
    _check_same_dim(p, x)
    return sum(a * b for a, b in zip(p, x))


def supp(x) -> tuple[int, ...]:
    """1-based indices of the nonzero entries."""
    return tuple(u + 1 for u, e in enumerate(x) if e != 0)


def supp_pos(x) -> tuple[int, ...]:
    return tuple(u + 1 for u, e in enumerate(x) if e > 0)


def supp_neg(x) -> tuple[int, ...]:
    return tuple(u + 1 for u, e in enumerate(x) if e < 0)


def add(p, q) -> tuple:
    _check_same_dim(p, q)
    return tuple(a + b for a, b in zip(p, q))


def sub(p, q) -> tuple:
    _check_same_dim(p, q)
    return tuple(a - b for a, b in zip(p, q))


def signed_vectors(dim: int) -> Iterator[SignedVector]:
    """All 3^dim signed vectors in lexicographic order."""
    return itertools.product((-1, 0, 1), repeat=dim)


def meet(x: SignedVector, y: SignedVector) -> SignedVector:
    """Componentwise: keep entries where x and y agree, zero elsewhere."""
    _check_same_dim(x, y)
    return tuple(a if a == b else 0 for a, b in zip(x, y))


def join(x: SignedVector, y: SignedVector) -> SignedVector:
    """Componentwise union of supports; conflicting signs cancel to zero."""
    _check_same_dim(x, y)
    out = []
    for a, b in zip(x, y):
        if a == b or b == 0:
            out.append(a)
        elif a == 0:
            out.append(b)
        else:
            out.append(0)
    return tuple(out)


def precedes(x: SignedVector, y: SignedVector) -> bool:
    """Signed support inclusion: every nonzero entry of x appears in y."""
    _check_same_dim(x, y)
    return all(a == 0 or a == b for a, b in zip(x, y))


def phi_steps(dim: int) -> tuple[Step, ...]:
    """All steps (signed vectors of 1-norm 1 or 2) in lexicographic order.

    There are exactly 2*dim**2 of them.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return tuple(x for x in signed_vectors(dim) if norm1(x) in (1, 2))


def phi_toward(p: IntPoint, q: IntPoint) -> tuple[Step, ...]:
    """Steps every nonzero coordinate of which moves strictly toward q.

    Equivalently the steps a with |q - (p+a)|_1 = |q - p|_1 - |a|_1.
    """
    _check_same_dim(p, q)
    diff = sub(q, p)
    out = []
    for alpha in phi_steps(len(p)):
        if all(e == 0 or e * d >= 1 for e, d in zip(alpha, diff)):
            out.append(alpha)
            assert norm1(sub(q, add(p, alpha))) == norm1(diff) - norm1(alpha)
        else:
            assert norm1(sub(q, add(p, alpha))) != norm1(diff) - norm1(alpha)
    return tuple(out)


def violation(r: IntPoint, p: IntPoint, q: IntPoint) -> int:
    """Mass of r on coordinates that do not move strictly from p toward q.

    Zero exactly on the steps of phi_toward(p, q); positive otherwise.
    """
    _check_same_dim(r, p)
    _check_same_dim(p, q)
    return sum(abs(e) for e, a, b in zip(r, p, q) if e * (b - a) <= 0)


@dataclass(frozen=True)
class PointSet:
    """A finite set of integer points of a fixed dimension.

    Points are deduplicated and kept in lexicographic order.  The set may be
    empty as a container (enumeration can produce no points); the axiom
    checkers require nonempty input and enforce that themselves.
    """

    dim: int
    points: tuple[IntPoint, ...]
    _members: frozenset = field(repr=False, hash=False, compare=False)

    @staticmethod
    def from_points(dim: int, points: Iterable[Iterable[int]]) -> "PointSet":
        if dim < 1:
            raise ValueError("dim must be >= 1")
        normalized = set()
        for p in points:
            pt = as_point(p)
            if len(pt) != dim:
                raise DimensionMismatchError(
                    f"point {pt} has dimension {len(pt)}, expected {dim}")
            normalized.add(pt)
        ordered = tuple(sorted(normalized))
        return PointSet(dim, ordered, frozenset(ordered))

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    def __iter__(self) -> Iterator[IntPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def bounding_box(self) -> tuple[IntPoint, IntPoint]:
        if not self.points:
            raise ValueError("bounding box of an empty point set")
        lo = tuple(min(p[u] for p in self.points) for u in range(self.dim))
        hi = tuple(max(p[u] for p in self.points) for u in range(self.dim))
        return lo, hi


PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: PASS or FAIL plus a structured payload.

    For FAIL the payload is a minimal witness that independently re-verifies
    as a violation; for PASS it holds certificate data where the checker
    produces any (and is None otherwise).
    """

    status: str
    witness: Optional[Mapping] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_jsonable(self) -> dict:
        return {"status": self.status, "witness": _jsonable(self.witness)}


def verdict_pass(witness: Optional[Mapping] = None) -> Verdict:
    return Verdict(PASS, witness)


def verdict_fail(witness: Mapping) -> Verdict:
    return Verdict(FAIL, witness)


def _jsonable(obj):
    """Recursively convert tuples to lists so payloads serialize cleanly."""
    if obj is None or isinstance(obj, (int, str, bool)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else str(obj)
    if isinstance(obj, float):
        return "inf" if obj == float("inf") else obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(o) for o in obj]
    if isinstance(obj, Mapping):
        return {k: _jsonable(v) for k, v in obj.items()}
    raise TypeError(f"cannot serialize {type(obj).__name__}")
