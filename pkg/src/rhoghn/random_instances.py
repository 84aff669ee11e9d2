"""Seeded random instances for the property and acceptance suites.

Coefficients are drawn from small sets on purpose: ties between reduced
Hilbert polynomials at various degrees are what exercise the recursion, and
small values keep the leading rays inside the oracle's search box.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from .linalg import dot
from .polyq import RationalPoly
from .rootdata import (
    Representation,
    builtin_datum,
    pi_Z,
    standard_representation,
)
from .sheafmodel import CombinatorialRhoSheaf, Summand, VarietyDescriptor, projective_space

SMALL = [Fraction(k, 2) for k in range(-4, 5)]

# Groups whose torus has rank at most 4 and whose defining representation
# has at most 8 weights.
CENTRAL_SPECS = [
    "gl(2)", "gl(3)", "gl(4)", "sl(2)", "sl(3)", "sl(4)", "so(3)", "so(4)",
    "so(5)", "so(6)", "so(7)", "so(8)", "sp(4)", "sp(6)", "sp(8)",
    "gl(2)xgl(2)", "gl(1)xgl(2)", "gl(1)xgl(3)", "sl(2)xsl(2)", "gl(2)xsl(2)",
    "so(5)xgl(1)", "sp(4)xgl(1)", "gl(1)", "gl(1)xgl(1)",
]

# A product of general linear groups acting on one space through the block
# diagonal embedding.  The center does not act by scalars.
NONCENTRAL_SPECS = ["gl(2)xgl(2)", "gl(1)xgl(1)", "gl(1)xgl(2)", "gl(1)xgl(3)", "gl(1)xgl(1)xgl(1)"]


def random_variety(rng: random.Random, max_dim: int = 3) -> VarietyDescriptor:
    d = rng.randint(1, max_dim)
    if rng.random() < 0.5:
        return projective_space(d)
    return VarietyDescriptor(d, Fraction(rng.randint(1, 3)), Fraction(rng.randint(-2, 4), 2), "")


def hp_from_data(variety: VarietyDescriptor, rank: int, c: Fraction, lower) -> RationalPoly:
    """Hilbert polynomial with the given rank, first Chern number and lower terms.

    ``lower`` lists the monomial coefficients of degrees ``0 .. d-2``.
    """
    d = variety.dim
    coeffs = list(lower)[: max(d - 1, 0)]
    coeffs += [Fraction(0)] * (max(d - 1, 0) - len(coeffs))
    coeffs.append(rank * (c + variety.todd_line) / factorial(d - 1))
    coeffs.append(rank * variety.A_d / factorial(d))
    return RationalPoly(coeffs)


def _lower_terms(rng: random.Random, d: int, pool: list) -> list:
    # Reuse pool entries so that ties at low degree are common.
    if pool and rng.random() < 0.6:
        base = list(rng.choice(pool))
        if d >= 2 and rng.random() < 0.4:
            base[rng.randrange(d - 1)] += rng.choice([Fraction(-1), Fraction(1), Fraction(1, 2)])
        return base
    base = [rng.choice(SMALL) for _ in range(max(d - 1, 0))]
    pool.append(base)
    return base


def sheaf_from_psi(rng, variety, datum, rep, psi, scale_lower=1) -> CombinatorialRhoSheaf:
    summands = []
    pool: list = []
    for j, i, w, m in rep.entries():
        c = dot(psi, w)
        lower = [x * m * scale_lower for x in _lower_terms(rng, variety.dim, pool)]
        summands.append(Summand(j, i, hp_from_data(variety, m, c, lower), m))
    return CombinatorialRhoSheaf(variety, datum, rep, tuple(summands))


def _twisted_representation(rng: random.Random, spec: str) -> Representation:
    """Defining representation per factor, possibly dualized, doubled or twisted by det."""
    n = builtin_datum(spec).torus_rank
    while True:
        rep = _twist_once(rng, spec)
        if rep.spans(n):
            return rep


def _twist_once(rng: random.Random, spec: str) -> Representation:
    base = standard_representation(spec)
    datum = builtin_datum(spec)
    dets = list(datum.central_basis)
    factors = []
    for f in base.factors:
        sign = rng.choice([1, 1, -1])
        mult = rng.choice([1, 1, 2])
        shift = [0] * datum.torus_rank
        if dets and rng.random() < 0.3:
            # A power of a central character; it pairs to zero with every coroot.
            z = rng.choice(dets)
            e = rng.choice([-1, 1])
            shift = [int(x) * e for x in z]
        factors.append([(tuple(sign * x + s for x, s in zip(w, shift)), mult) for w, _ in f])
    total = sum(m for f in factors for _, m in f)
    if total > 8:
        factors = [[(w, 1) for w, _ in f] for f in factors]
    return Representation(factors)


def _noncentral_representation(spec: str) -> Representation:
    base = standard_representation(spec)
    return Representation([[e for f in base.factors for e in f]])


def random_psi(rng: random.Random, n: int) -> tuple:
    return tuple(rng.choice(SMALL) for _ in range(n))


def random_general(rng: random.Random) -> CombinatorialRhoSheaf:
    variety = random_variety(rng)
    if rng.random() < 0.25:
        spec = rng.choice(NONCENTRAL_SPECS)
        rep = _noncentral_representation(spec)
    else:
        spec = rng.choice(CENTRAL_SPECS)
        rep = _twisted_representation(rng, spec)
    datum = builtin_datum(spec)
    psi = random_psi(rng, datum.torus_rank)
    return sheaf_from_psi(rng, variety, datum, rep, psi)


def random_central(rng: random.Random, require_slope_unstable: bool = True) -> CombinatorialRhoSheaf:
    while True:
        spec = rng.choice(CENTRAL_SPECS)
        datum = builtin_datum(spec)
        if require_slope_unstable and not datum.simple_roots:
            continue
        rep = _twisted_representation(rng, spec)
        psi = random_psi(rng, datum.torus_rank)
        if require_slope_unstable and not any(pi_Z(datum, rep, psi)):
            continue
        return sheaf_from_psi(rng, random_variety(rng), datum, rep, psi)


def random_gl_identity(rng: random.Random, max_dim: int = 3, max_summands: int = 6) -> CombinatorialRhoSheaf:
    variety = random_variety(rng, max_dim)
    n = rng.randint(1, max_summands)
    datum = builtin_datum(f"gl({n})")
    rep = standard_representation(f"gl({n})")
    # Draw first Chern numbers from a small pool too, for ties at degree d-1.
    cs = [rng.choice(SMALL[2:7]) for _ in range(rng.randint(1, n))]
    psi = tuple(rng.choice(cs) for _ in range(n))
    return sheaf_from_psi(rng, variety, datum, rep, psi)

