"""The numerical invariant of toral filtrations and its linear functionals.

A cocharacter ``lam`` puts summand ``i`` in degree ``m_i = -<lam, chi_i>``.
The invariant of the resulting filtration is the ratio ``sqrt(A_d) L / sqrt(Q)``
with ``L`` a rational polynomial and ``Q`` a rational number, so it is stored
as the pair and compared exactly by squaring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import dot
from .polyq import Ordering, RationalPoly, format_rational, parse_rational, poly_cmp, reduced_hp, sum_polys
from .sheafmodel import CombinatorialRhoSheaf


@dataclass(frozen=True)
class WeightedFiltration:
    lam: tuple
    degrees: tuple
    graded: dict


@dataclass(frozen=True)
class NuValue:
    L: RationalPoly
    Q: Fraction
    A_d: Fraction = Fraction(1)

    @property
    def degenerate(self) -> bool:
        return self.Q == 0

    def sign(self) -> int:
        return 0 if self.degenerate else self.L.sign()

    def to_json(self) -> dict:
        return {"L": self.L.to_json(), "Q": format_rational(self.Q), "A_d": format_rational(self.A_d)}

    @classmethod
    def from_json(cls, data) -> "NuValue":
        return cls(
            RationalPoly.from_json(data["L"]),
            parse_rational(data["Q"]),
            parse_rational(data.get("A_d", 1)),
        )


def degrees_of(sheaf: CombinatorialRhoSheaf, lam: Sequence) -> list:
    return [-dot(lam, w) for w in sheaf.weights()]


def filtration_from_cochar(sheaf: CombinatorialRhoSheaf, lam: Sequence) -> WeightedFiltration:
    ms = degrees_of(sheaf, lam)
    graded = {}
    for k, m in enumerate(ms):
        graded.setdefault(m, []).append(k)
    return WeightedFiltration(
        tuple(lam), tuple(ms), {m: tuple(graded[m]) for m in sorted(graded)}
    )


def nu(sheaf: CombinatorialRhoSheaf, lam: Sequence) -> NuValue:
    """Evaluate the invariant by summing over graded pieces of each block."""
    ms = degrees_of(sheaf, lam)
    ranks = sheaf.ranks()
    L = RationalPoly()
    for block, pbar_block in zip(sheaf.blocks, sheaf.block_reduced()):
        pieces = {}
        for k in block:
            pieces.setdefault(ms[k], []).append(k)
        for m, members in pieces.items():
            if m == 0:
                continue
            rk = sum(ranks[k] for k in members)
            pbar = reduced_hp(sum_polys([sheaf.summands[k].hp for k in members]))
            L = L + (pbar - pbar_block) * (m * rk)
    Q = sum((m * m * r for m, r in zip(ms, ranks)), Fraction(0))
    return NuValue(L, Q, sheaf.variety.A_d)


def ell_functionals(sheaf: CombinatorialRhoSheaf) -> list:
    """``[(e, l_e)]`` for ``e = d-1, ..., 0`` with ``L(lam) = sum_e l_e(lam) n^e``."""
    d = sheaf.variety.dim
    n = sheaf.datum.torus_rank
    pbar = sheaf.reduced()
    pbar_block = sheaf.block_reduced()
    block_of = sheaf.block_of()
    ws = sheaf.weights()
    diffs = [pbar[k] - pbar_block[block_of[k]] for k in range(len(pbar))]
    out = []
    for e in range(d - 1, -1, -1):
        ell = [Fraction(0)] * n
        for k, s in enumerate(sheaf.summands):
            c = diffs[k].coef(e)
            if c:
                for t in range(n):
                    ell[t] -= ws[k][t] * s.rank * c
        out.append((e, tuple(ell)))
    return out


def is_semistable(sheaf: CombinatorialRhoSheaf) -> bool:
    return all(all(x == 0 for x in ell) for _, ell in ell_functionals(sheaf))


def compare_nu(a: NuValue, b: NuValue) -> Ordering:
    sa, sb = a.sign(), b.sign()
    if sa != sb:
        return Ordering.GT if sa > sb else Ordering.LT
    if sa == 0:
        return Ordering.EQ
    # Same strict sign: compare A_a Q_b L_a^2 against A_b Q_a L_b^2, then
    # flip for negative values.
    lhs = a.L * a.L * (a.A_d * b.Q)
    rhs = b.L * b.L * (b.A_d * a.Q)
    o = poly_cmp(lhs, rhs)
    return o if sa > 0 else Ordering(-o)
