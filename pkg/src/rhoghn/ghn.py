"""The recursive lexicographic filtration.

Each step takes the leading cocharacter of the current configuration,
refines the blocks by the restriction of the weights to the center of its
Levi, and continues on that Levi.  A step always splits some block: a
cocharacter constant on every block has ``l_e(lam) = 0`` for every ``e``, and
the leading one has ``l_e(lam) > 0``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .errors import InternalNonRefinement, NotDominant, SemistableInput, WrongGroupShape
from .linalg import dot, primitive_scale
from .polyq import poly_cmp, reduced_hp, slope, sum_polys
from .optimizer import leading_cochar
from .rootdata import dominant_rebase, is_dominant, levi_center_basis, levi_subdatum
from .sheafmodel import CombinatorialRhoSheaf

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Step:
    cochar: tuple
    leading_degree: int
    blocks_before: tuple
    blocks_after: tuple


@dataclass(frozen=True)
class LexFiltration:
    steps: tuple
    summand_weights: tuple
    jumping_points: tuple
    initial_blocks: tuple = ()

    @property
    def q(self) -> int:
        return len(self.steps)

    @property
    def final_blocks(self) -> tuple:
        return self.steps[-1].blocks_after if self.steps else self.initial_blocks

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "initial_blocks": [list(b) for b in self.initial_blocks],
            "steps": [
                {
                    "lambda": list(s.cochar),
                    "leading_degree": s.leading_degree,
                    "blocks_after": [list(b) for b in s.blocks_after],
                }
                for s in self.steps
            ],
            "summand_weights": [list(w) for w in self.summand_weights],
            "jumping_points": [
                {"weight": list(w), "summands": list(ks)} for w, ks in self.jumping_points
            ],
        }

    @classmethod
    def from_json(cls, data) -> "LexFiltration":
        before = tuple(tuple(b) for b in data.get("initial_blocks", []))
        initial = before
        steps = []
        for s in data["steps"]:
            after = tuple(tuple(b) for b in s["blocks_after"])
            steps.append(Step(tuple(s["lambda"]), int(s["leading_degree"]), before, after))
            before = after
        return cls(
            tuple(steps),
            tuple(tuple(w) for w in data["summand_weights"]),
            tuple((tuple(j["weight"]), tuple(j["summands"])) for j in data["jumping_points"]),
            initial,
        )


def refine_blocks(sheaf: CombinatorialRhoSheaf, lam: Sequence) -> tuple:
    """Split each block by the restriction of the weights to the Levi center.

    ``lam`` must be dominant for ``sheaf.datum``; sub-blocks are listed in
    order of their first summand.
    """
    if not is_dominant(sheaf.datum, lam):
        raise NotDominant("cocharacter is not dominant for the current simple roots")
    center = levi_center_basis(sheaf.datum, lam)
    out = []
    for block in sheaf.blocks:
        groups = {}
        for k in block:
            key = tuple(dot(v, sheaf.weight(k)) for v in center)
            groups.setdefault(key, []).append(k)
        out.extend(tuple(g) for g in groups.values())
    return tuple(out)


def _is_finer(after, before) -> bool:
    owner = {}
    for b, members in enumerate(before):
        for k in members:
            owner[k] = b
    return all(len({owner[k] for k in block}) == 1 for block in after) and len(after) > len(before)


def ghn_filtration(sheaf: CombinatorialRhoSheaf, max_steps: Optional[int] = None) -> LexFiltration:
    initial = sheaf.blocks
    limit = max_steps if max_steps is not None else len(sheaf.summands) - len(initial) + 1
    steps = []
    current = sheaf
    while True:
        lead = leading_cochar(current)
        if lead is None:
            break
        if len(steps) >= limit:
            raise InternalNonRefinement(f"recursion exceeded {limit} steps")
        if steps and lead.leading_degree > steps[-1].leading_degree:
            log.warning(
                "leading degree increased from %d to %d at step %d",
                steps[-1].leading_degree,
                lead.leading_degree,
                len(steps) + 1,
            )
        lam = lead.cochar
        # The maximizer need not be dominant for the current simple roots; move
        # to the Weyl chamber containing it before reading off its Levi.
        based = current.with_blocks(current.blocks, dominant_rebase(current.datum, lam))
        after = refine_blocks(based, lam)
        if not _is_finer(after, current.blocks):
            raise InternalNonRefinement(f"step {len(steps) + 1} did not split any block")
        steps.append(Step(lam, lead.leading_degree, current.blocks, after))
        current = current.with_blocks(after, levi_subdatum(based.datum, lam))
    weights = tuple(
        tuple(-int(dot(s.cochar, w)) for s in steps) for w in sheaf.weights()
    )
    groups = {}
    for k, w in enumerate(weights):
        groups.setdefault(w, []).append(k)
    jumping = tuple((w, tuple(groups[w])) for w in sorted(groups, reverse=True))
    return LexFiltration(tuple(steps), weights, jumping, initial)


def final_configuration(sheaf: CombinatorialRhoSheaf, lex: LexFiltration) -> CombinatorialRhoSheaf:
    """The sheaf with the final blocks and Levi datum of a completed recursion."""
    current = sheaf
    for s in lex.steps:
        based = dominant_rebase(current.datum, s.cochar)
        current = current.with_blocks(s.blocks_after, levi_subdatum(based, s.cochar))
    return current


def unweighted_chain(lex: LexFiltration) -> list:
    chain = []
    acc = set()
    for _, ks in lex.jumping_points:
        acc |= set(ks)
        chain.append(frozenset(acc))
    return chain


# ---------------------------------------------------------------------------
# The general linear case


def _check_gl_identity(sheaf: CombinatorialRhoSheaf) -> None:
    datum, rep = sheaf.datum, sheaf.rep
    n = datum.torus_rank
    if len(rep.factors) != 1:
        raise WrongGroupShape("expected a single factor")
    ws = [w for w, _ in rep.factors[0]]
    ms = [m for _, m in rep.factors[0]]
    units = sorted(tuple(int(i == j) for j in range(n)) for i in range(n))
    if sorted(ws) != units or any(m != 1 for m in ms):
        raise WrongGroupShape("weights must be the coordinate characters, each once")
    if len(datum.central_basis) != 1 or datum.semisimple_rank != n - 1:
        raise WrongGroupShape("datum is not of type GL(N)")
    z = datum.central_basis[0]
    if primitive_scale(z) not in (tuple(1 for _ in range(n)), tuple(-1 for _ in range(n))):
        raise WrongGroupShape("center is not the scalar torus")
    for a in datum.simple_roots:
        if sorted(a) != sorted([Fraction(1), Fraction(-1)] + [Fraction(0)] * (n - 2)):
            raise WrongGroupShape("simple roots are not of the form e_i - e_j")


def classical_hn_oracle(sheaf: CombinatorialRhoSheaf) -> list:
    """Classical HN chain of a direct sum of semistable summands."""
    _check_gl_identity(sheaf)
    groups = []
    for k, s in enumerate(sheaf.summands):
        p = reduced_hp(s.hp)
        for g in groups:
            if g[0] == p:
                g[1].append(k)
                break
        else:
            groups.append((p, [k]))
    ordered = _sorted_desc(groups)
    chain = []
    acc = set()
    for _, ks in ordered:
        acc |= set(ks)
        chain.append(frozenset(acc))
    return chain


def _sorted_desc(groups):
    return sorted(groups, key=cmp_to_key(lambda a, b: int(poly_cmp(b[0], a[0]))))


def leading_term_weights(sheaf: CombinatorialRhoSheaf) -> tuple:
    """Integer weights ``L (mu_e(E_i) - mu_e(F))`` at the top unequal slope."""
    _check_gl_identity(sheaf)
    d = sheaf.variety.dim
    total = sum_polys([s.hp for s in sheaf.summands])
    for e in range(d - 1, -1, -1):
        mus = [slope(s.hp, e) for s in sheaf.summands]
        if len(set(mus)) > 1:
            mu_f = slope(total, e)
            return primitive_scale([m - mu_f for m in mus])
    raise SemistableInput("all reduced Hilbert polynomials agree")

