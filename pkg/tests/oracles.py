"""Independent re-implementations used to cross-check library answers.

Nothing here calls the code paths under test: decomposability is decided by
exhaustive multiset search instead of the LP, and certificates are replayed
against raw definitions.  Slow and simple on purpose.
"""

from __future__ import annotations

from functools import lru_cache

from bspoly.core import PointSet, add, phi_steps


def steps_toward(dim: int, p, q):
    """Steps whose every nonzero coordinate moves from p strictly toward q."""
    out = []
    for alpha in phi_steps(dim):
        if all(e == 0 or e * (b - a) >= 1
               for e, a, b in zip(alpha, p, q)):
            out.append(alpha)
    return out


def brute_force_decomposition_exists(b: PointSet, p, q) -> bool:
    """Exhaustive search for steps toward q, landing in b, summing to 2(q-p).

    All candidate steps are sign-aligned with q-p, so coordinates of the
    remaining target shrink monotonically and the search space is finite.
    """
    p, q = tuple(p), tuple(q)
    candidates = tuple(alpha for alpha in steps_toward(b.dim, p, q)
                       if add(p, alpha) in b)
    target = tuple(2 * (bb - aa) for aa, bb in zip(p, q))

    @lru_cache(maxsize=None)
    def search(idx: int, remaining) -> bool:
        if not any(remaining):
            return True
        if idx == len(candidates):
            return False
        alpha = candidates[idx]
        cand = remaining
        while True:
            if search(idx + 1, cand):
                return True
            nxt = tuple(c - a for c, a in zip(cand, alpha))
            if any(abs(n) > abs(c) for c, n in zip(cand, nxt)):
                return False
            cand = nxt

    return search(0, target)


def replay_decomposition(b: PointSet, dec) -> bool:
    """Check a Decomposition against raw definitions only."""
    p, q = dec.source, dec.target
    allowed = set(steps_toward(b.dim, p, q))
    total = [0] * b.dim
    for alpha in dec.steps:
        if alpha not in allowed or add(p, alpha) not in b:
            return False
        for i, e in enumerate(alpha):
            total[i] += e
    return tuple(total) == tuple(2 * (bb - aa) for aa, bb in zip(p, q))


def replay_delta_witness(b: PointSet, witness) -> bool:
    """Confirm no step toward q covers coordinate u, per raw definitions."""
    p, q, u = witness["p"], witness["q"], witness["u"]
    if q[u - 1] == p[u - 1]:
        return False
    return not any(alpha[u - 1] != 0 and add(p, alpha) in b
                   for alpha in steps_toward(b.dim, p, q))


def replay_jump_witness(b: PointSet, witness) -> bool:
    """Confirm both the one-step and the double-step branches fail."""
    if not replay_delta_witness(b, witness):
        return False
    p, q, u = witness["p"], witness["q"], witness["u"]
    gap = q[u - 1] - p[u - 1]
    if abs(gap) < 2:
        return True
    sign = 1 if gap > 0 else -1
    double = tuple(e + (2 * sign if i == u - 1 else 0)
                   for i, e in enumerate(p))
    return double not in b


def replay_hole_witness(b: PointSet, witness) -> bool:
    """Confirm the hole is a non-member convex combination of members."""
    hole, coeffs = witness["hole"], witness["coefficients"]
    if hole in b or any(c < 0 for c in coeffs) or sum(coeffs) != 1:
        return False
    points = list(b)
    if len(coeffs) != len(points):
        return False
    return all(sum(c * pt[u] for c, pt in zip(coeffs, points)) == hole[u]
               for u in range(b.dim))


def replay_zero_sum(b: PointSet, q, r, zse) -> bool:
    """Check a ZeroSumExchange against raw definitions only."""
    q, r = tuple(q), tuple(r)
    from_q = {alpha for alpha in steps_toward(b.dim, q, r)
              if add(q, alpha) in b}
    from_r = {beta for beta in steps_toward(b.dim, r, q)
              if add(r, beta) in b}
    if not zse.alphas or not zse.betas:
        return False
    if any(alpha not in from_q for alpha in zse.alphas):
        return False
    if any(beta not in from_r for beta in zse.betas):
        return False
    total = [0] * b.dim
    for step in zse.alphas + zse.betas:
        for i, e in enumerate(step):
            total[i] += e
    return not any(total)
