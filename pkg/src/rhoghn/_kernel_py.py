"""Pure Python box search, used when the compiled kernel is unavailable.

Both backends share one contract.  ``weights`` holds one integer covector per
summand, ``ranks`` the summand ranks and ``diffs[i][e]`` the integer scaled
degree ``e`` coefficient of ``rank_i * (pbar_i - pbar_block(i))``.  Every
nonzero integer vector in ``[-bound, bound]^n`` is visited in lexicographic
order; for each one ``m_i = -<lam, w_i>``, ``L_e = sum_i m_i diffs[i][e]`` and
``Q = sum_i rank_i m_i^2``.  The result is the lexicographically first
primitive vector among those whose value ``L / sqrt(Q)`` is maximal, or
``None`` when no vector has a positive value.
"""

from __future__ import annotations

from itertools import product
from math import gcd


def _sign(L):
    for x in reversed(L):
        if x:
            return 1 if x > 0 else -1
    return 0


def _cmp_positive(La, Qa, Lb, Qb):
    """Sign of ``Qb La^2 - Qa Lb^2`` in the asymptotic order."""
    E = len(La)
    for k in range(2 * E - 2, -1, -1):
        lo, hi = max(0, k - E + 1), min(k, E - 1)
        sa = sum(La[i] * La[k - i] for i in range(lo, hi + 1))
        sb = sum(Lb[i] * Lb[k - i] for i in range(lo, hi + 1))
        diff = Qb * sa - Qa * sb
        if diff:
            return 1 if diff > 0 else -1
    return 0


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def box_argmax(weights, ranks, diffs, bound):
    n = len(weights[0]) if weights else 0
    E = len(diffs[0]) if diffs else 0
    S = len(weights)
    cols = [[weights[i][t] for i in range(S)] for t in range(n)]
    best = None
    best_L = best_Q = None
    best_prim = False
    visited = 0
    for lam in product(range(-bound, bound + 1), repeat=n):
        if not any(lam):
            continue
        visited += 1
        ms = [0] * S
        for t, c in enumerate(lam):
            if c:
                col = cols[t]
                for i in range(S):
                    ms[i] -= c * col[i]
        Q = 0
        for i in range(S):
            if ms[i]:
                Q += ranks[i] * ms[i] * ms[i]
        if Q == 0:
            continue
        L = [0] * E
        for i in range(S):
            m = ms[i]
            if m:
                row = diffs[i]
                for e in range(E):
                    L[e] += m * row[e]
        if _sign(L) <= 0:
            continue
        if best is None:
            best, best_L, best_Q, best_prim = lam, L, Q, _primitive(lam)
            continue
        c = _cmp_positive(L, Q, best_L, best_Q)
        if c > 0 or (c == 0 and not best_prim and _primitive(lam)):
            best, best_L, best_Q, best_prim = lam, L, Q, _primitive(lam)
    return best, visited
