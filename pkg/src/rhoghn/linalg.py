"""Exact linear algebra over the rationals.

Matrices are lists of rows.  Entries may be ints or Fractions; results are
Fractions.  Square solves use Bareiss elimination on an integer scaled copy,
so intermediate entries stay integral and no gcd reductions pile up.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

from .errors import InconsistentSystem, SingularSystem, ZeroVector

Vector = tuple
Matrix = List[List[Fraction]]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in a)


def transpose(a: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*a)]


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> tuple:
    return tuple(Fraction(c) * a for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def _integer_rows(a: Sequence[Sequence]) -> list:
    rows = []
    for row in a:
        fr = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * m) for x in fr])
    return rows


def bareiss_solve(a: Sequence[Sequence], b: Sequence) -> tuple:
    """Solve the square system ``a x = b`` exactly."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("bareiss_solve needs a square system")
    m = _integer_rows([list(row) + [bv] for row, bv in zip(a, b)])
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return tuple(x)


def determinant(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    fr = [[Fraction(x) for x in row] for row in a]
    scale = Fraction(1)
    rows = []
    for row in fr:
        m = lcm(*(x.denominator for x in row))
        scale *= m
        rows.append([int(x * m) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def rref(a: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of ``{x : a x = 0}``, one vector per free column."""
    if not a:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple:
    """Unique solution of a possibly overdetermined system.

    Raises InconsistentSystem when no solution exists and SingularSystem when
    the solution is not unique.
    """
    if not a:
        raise SingularSystem("empty system")
    n = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        raise InconsistentSystem("system has no solution")
    if len(pivots) < n:
        raise SingularSystem("solution is not unique")
    x = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        x[p] = m[r][n]
    return tuple(x)


def inverse(a: Sequence[Sequence]) -> list:
    n = len(a)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(bareiss_solve(a, e))
    return transpose(cols)


def primitive_scale(v: Sequence) -> tuple:
    """The primitive integer vector on the ray through ``v``."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ZeroVector("cannot scale the zero vector")
    m = lcm(*(x.denominator for x in fr))
    ints = [int(x * m) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1
