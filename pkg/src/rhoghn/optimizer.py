"""Maximizing the invariant over cocharacters.

For a toral filtration the numerator ``L`` is linear in ``lam`` and ``Q`` is
the quadratic form of the Gram matrix ``G``.  The asymptotic order compares
leading coefficients first, so the best ray is the one maximizing
``l_e(lam) / sqrt(lam^T G lam)`` for the top degree ``e`` with ``l_e != 0``.
By Cauchy-Schwarz in the ``G`` inner product that maximum is attained exactly
on the ray of ``G^{-1} l_e``.  Every cocharacter of the torus is admissible
here, so no cone constraint enters and the critical point is global.  Lower
degrees never break ties because the maximizing ray is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from . import kernel, linalg
from .errors import DegenerateForm, NotCentral, SearchSpaceTooLarge, SingularSystem
from .invariant import NuValue, ell_functionals, nu
from .rootdata import gram_matrix, is_positive_definite, pi_Z
from .sheafmodel import CombinatorialRhoSheaf, is_central, psi_functional

DEFAULT_MAX_CANDIDATES = 2_000_000


@dataclass(frozen=True)
class LeadingResult:
    cochar: tuple
    leading_degree: int
    value: NuValue


@dataclass(frozen=True)
class OracleResult:
    cochar: tuple
    value: NuValue
    visited: int


def leading_cochar(sheaf: CombinatorialRhoSheaf) -> Optional[LeadingResult]:
    top = next(((e, ell) for e, ell in ell_functionals(sheaf) if any(ell)), None)
    if top is None:
        return None
    e, ell = top
    g = gram_matrix(sheaf.rep, sheaf.datum.torus_rank)
    try:
        x = linalg.bareiss_solve(g, ell)
    except SingularSystem as exc:
        raise DegenerateForm("Gram matrix of the representation is singular") from exc
    lam = linalg.primitive_scale(x)
    return LeadingResult(lam, e, nu(sheaf, lam))


def kernel_inputs(sheaf: CombinatorialRhoSheaf):
    """Integer data for the box search; ``diffs`` is scaled by a common denominator."""
    d = sheaf.variety.dim
    pbar = sheaf.reduced()
    pbar_block = sheaf.block_reduced()
    block_of = sheaf.block_of()
    rows = []
    for k, s in enumerate(sheaf.summands):
        diff = pbar[k] - pbar_block[block_of[k]]
        rows.append([s.rank * diff.coef(e) for e in range(d)])
    den = lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    diffs = [[int(x * den) for x in r] for r in rows]
    weights = [list(w) for w in sheaf.weights()]
    return weights, sheaf.ranks(), diffs


def brute_force_max(
    sheaf: CombinatorialRhoSheaf,
    bound: int,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    backend: Optional[str] = None,
) -> Optional[OracleResult]:
    """Exhaustive search over the integer box ``[-bound, bound]^{n_T}``."""
    if bound < 1:
        raise ValueError("bound must be positive")
    n = sheaf.datum.torus_rank
    size = (2 * bound + 1) ** n
    if size > max_candidates:
        raise SearchSpaceTooLarge(f"{size} candidates exceed the cap {max_candidates}")
    weights, ranks, diffs = kernel_inputs(sheaf)
    best, visited = kernel.box_argmax(weights, ranks, diffs, bound, backend=backend)
    if best is None:
        return None
    lam = tuple(int(x) for x in best)
    return OracleResult(lam, nu(sheaf, lam), visited)


def slope_canonical(sheaf: CombinatorialRhoSheaf) -> Optional[tuple]:
    if not is_central(sheaf.datum, sheaf.rep):
        raise NotCentral("the representation is not central")
    g = gram_matrix(sheaf.rep, sheaf.datum.torus_rank)
    if not is_positive_definite(g):
        raise DegenerateForm("Gram matrix of the representation is singular")
    psi = psi_functional(sheaf)
    p = pi_Z(sheaf.datum, sheaf.rep, psi)
    if all(x == 0 for x in p):
        return None
    return linalg.primitive_scale(p)


def leading_value(sheaf: CombinatorialRhoSheaf, lam) -> Fraction:
    """``l_e(lam)`` for the top nonzero functional, or 0 when semistable."""
    for _, ell in ell_functionals(sheaf):
        if any(ell):
            return linalg.dot(ell, lam)
    return Fraction(0)
