# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box search.  Same contract as ``_kernel_py.box_argmax``.

Arithmetic is done in 128 bit integers.  The caller checks beforehand that
every intermediate value fits; see ``kernel.fits_int128``.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef int _sign(i128* L, int E) noexcept nogil:
    cdef int e
    for e in range(E - 1, -1, -1):
        if L[e] > 0:
            return 1
        if L[e] < 0:
            return -1
    return 0


cdef int _cmp_positive(i128* La, i128 Qa, i128* Lb, i128 Qb, int E) noexcept nogil:
    cdef int k, i, lo, hi
    cdef i128 sa, sb, diff
    for k in range(2 * E - 2, -1, -1):
        lo = k - E + 1 if k - E + 1 > 0 else 0
        hi = k if k < E - 1 else E - 1
        sa = 0
        sb = 0
        for i in range(lo, hi + 1):
            sa += La[i] * La[k - i]
            sb += Lb[i] * Lb[k - i]
        diff = Qb * sa - Qa * sb
        if diff > 0:
            return 1
        if diff < 0:
            return -1
    return 0


cdef long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef bint _primitive(long long* v, int n) noexcept nogil:
    cdef long long g = 0
    cdef int t
    for t in range(n):
        g = _gcd(g, v[t])
    return g == 1


def box_argmax(weights, ranks, diffs, int bound):
    cdef int S = len(weights)
    cdef int n = len(weights[0]) if S else 0
    cdef int E = len(diffs[0]) if S else 0
    cdef long long* W = <long long*> malloc(max(S * n, 1) * sizeof(long long))
    cdef long long* R = <long long*> malloc(max(S, 1) * sizeof(long long))
    cdef long long* D = <long long*> malloc(max(S * E, 1) * sizeof(long long))
    cdef long long* lam = <long long*> malloc(max(n, 1) * sizeof(long long))
    cdef long long* best = <long long*> malloc(max(n, 1) * sizeof(long long))
    cdef i128* ms = <i128*> malloc(max(S, 1) * sizeof(i128))
    cdef i128* L = <i128*> malloc(max(E, 1) * sizeof(i128))
    cdef i128* bestL = <i128*> malloc(max(E, 1) * sizeof(i128))
    cdef i128 Q, bestQ = 0
    cdef bint have = False, best_prim = False, prim, any_nz
    cdef long long visited = 0
    cdef int i, t, e, c
    if not (W and R and D and lam and best and ms and L and bestL):
        free(W); free(R); free(D); free(lam); free(best); free(ms); free(L); free(bestL)
        raise MemoryError()
    try:
        for i in range(S):
            R[i] = ranks[i]
            for t in range(n):
                W[i * n + t] = weights[i][t]
            for e in range(E):
                D[i * E + e] = diffs[i][e]
        if n == 0:
            return None, 0
        for t in range(n):
            lam[t] = -bound
        with nogil:
            while True:
                any_nz = False
                for t in range(n):
                    if lam[t] != 0:
                        any_nz = True
                        break
                if any_nz:
                    visited += 1
                    Q = 0
                    for i in range(S):
                        ms[i] = 0
                        for t in range(n):
                            ms[i] -= <i128> lam[t] * W[i * n + t]
                        Q += R[i] * ms[i] * ms[i]
                    if Q != 0:
                        for e in range(E):
                            L[e] = 0
                        for i in range(S):
                            if ms[i] != 0:
                                for e in range(E):
                                    L[e] += ms[i] * D[i * E + e]
                        if _sign(L, E) > 0:
                            if not have:
                                c = 1
                            else:
                                c = _cmp_positive(L, Q, bestL, bestQ, E)
                            prim = _primitive(lam, n)
                            if c > 0 or (c == 0 and prim and not best_prim):
                                have = True
                                best_prim = prim
                                bestQ = Q
                                for e in range(E):
                                    bestL[e] = L[e]
                                for t in range(n):
                                    best[t] = lam[t]
                # Odometer step in lexicographic order.
                t = n - 1
                while t >= 0 and lam[t] == bound:
                    lam[t] = -bound
                    t -= 1
                if t < 0:
                    break
                lam[t] += 1
        if not have:
            return None, visited
        return tuple(best[t] for t in range(n)), visited
    finally:
        free(W); free(R); free(D); free(lam); free(best); free(ms); free(L); free(bestL)
