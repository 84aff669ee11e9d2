"""Torus diagonalized rho-sheaves.

The sheaf is recorded as one summand per weight entry of the representation:
each summand carries the Hilbert polynomial of its weight space and its rank,
which must equal the multiplicity of the weight.  Blocks partition the
summands; initially there is one block per factor of the representation, and
the filtration recursion refines them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from . import linalg
from .errors import (
    InconsistentDegrees,
    InconsistentSystem,
    ParseError,
    RhoGHNError,
    SingularSystem,
    UnderdeterminedPsi,
)
from .polyq import RationalPoly, format_rational, parse_rational, reduced_hp, slope, sum_polys
from .rootdata import (
    GroupDatum,
    Representation,
    character_group_basis,
    check_datum,
    datum_from_json,
    dot,
    representation_from_json,
    standard_representation,
)


@dataclass(frozen=True)
class VarietyDescriptor:
    dim: int
    A_d: Fraction
    todd_line: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "A_d", Fraction(self.A_d))
        object.__setattr__(self, "todd_line", Fraction(self.todd_line))

    def structure_sheaf_hp(self) -> Optional[RationalPoly]:
        """Hilbert polynomial of the structure sheaf for projective space presets."""
        if self.name.startswith("P") and self.name[1:].isdigit():
            return RationalPoly.binomial(self.dim, self.dim)
        return None

    def to_json(self) -> dict:
        if self.name.startswith("P") and self.name[1:].isdigit():
            return {"preset": self.name}
        return {
            "dim": self.dim,
            "A_d": format_rational(self.A_d),
            "todd_line": format_rational(self.todd_line),
        }


def projective_space(d: int) -> VarietyDescriptor:
    # deg H^d = 1 and t_1 . H^{d-1} = (d + 1) / 2 on P^d.
    return VarietyDescriptor(d, Fraction(1), Fraction(d + 1, 2), f"P{d}")


def variety_from_json(data) -> VarietyDescriptor:
    if not isinstance(data, dict):
        raise ParseError("variety must be an object")
    if "preset" in data:
        p = str(data["preset"])
        if len(p) >= 2 and p[0] in "Pp" and p[1:].isdigit() and int(p[1:]) >= 1:
            return projective_space(int(p[1:]))
        raise ParseError(f"unknown variety preset {p!r}")
    try:
        return VarietyDescriptor(
            int(data["dim"]),
            parse_rational(data["A_d"]),
            parse_rational(data.get("todd_line", 0)),
            str(data.get("name", "")),
        )
    except KeyError as exc:
        raise ParseError(f"variety is missing {exc}") from exc


@dataclass(frozen=True)
class Summand:
    factor: int
    index: int
    hp: RationalPoly
    rank: int
    label: str = ""

    def to_json(self) -> dict:
        out = {"factor": self.factor, "index": self.index, "hp": self.hp.to_json(), "rank": self.rank}
        if self.label:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class CombinatorialRhoSheaf:
    variety: VarietyDescriptor
    datum: GroupDatum
    rep: Representation
    summands: tuple
    blocks: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.blocks:
            blocks = {}
            for k, s in enumerate(self.summands):
                blocks.setdefault(s.factor, []).append(k)
            object.__setattr__(self, "blocks", tuple(tuple(b) for _, b in sorted(blocks.items())))
        else:
            object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))

    def weight(self, k: int) -> tuple:
        s = self.summands[k]
        return self.rep.factors[s.factor][s.index][0]

    def weights(self) -> list:
        return [self.weight(k) for k in range(len(self.summands))]

    def ranks(self) -> list:
        return [s.rank for s in self.summands]

    def label(self, k: int) -> str:
        return self.summands[k].label or f"#{k}"

    def with_blocks(self, blocks, datum: Optional[GroupDatum] = None) -> "CombinatorialRhoSheaf":
        return replace(self, blocks=tuple(tuple(b) for b in blocks), datum=datum or self.datum)

    def block_of(self) -> list:
        out = [0] * len(self.summands)
        for b, members in enumerate(self.blocks):
            for k in members:
                out[k] = b
        return out

    def block_totals(self) -> list:
        return [sum_polys([self.summands[k].hp for k in b]) for b in self.blocks]

    def reduced(self) -> list:
        return [reduced_hp(s.hp) for s in self.summands]

    def block_reduced(self) -> list:
        return [reduced_hp(p) for p in self.block_totals()]

    def to_json(self) -> dict:
        return {
            "variety": self.variety.to_json(),
            "group": self.datum.name if _is_builtin_name(self.datum) else self.datum.to_json(),
            "representation": self.rep.to_json(),
            "summands": [s.to_json() for s in self.summands],
        }


def _is_builtin_name(datum: GroupDatum) -> bool:
    from .rootdata import builtin_datum

    try:
        return builtin_datum(datum.name) == datum
    except RhoGHNError:
        return False


def sheaf_from_json(data) -> CombinatorialRhoSheaf:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("sheaf must be a JSON object")
    for key in ("variety", "group", "representation", "summands"):
        if key not in data:
            raise ParseError(f"sheaf is missing {key!r}")
    variety = variety_from_json(data["variety"])
    datum = datum_from_json(data["group"])
    if data["representation"] == "standard":
        if not isinstance(data["group"], str):
            raise ParseError("a standard representation needs a builtin group spec")
        rep = standard_representation(data["group"])
    else:
        rep = representation_from_json(data["representation"])
    summands = []
    if not isinstance(data["summands"], list):
        raise ParseError("summands must be a list")
    for s in data["summands"]:
        try:
            summands.append(
                Summand(
                    int(s["factor"]),
                    int(s["index"]),
                    RationalPoly.from_json(s["hp"]),
                    int(s["rank"]),
                    str(s.get("label", "")),
                )
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed summand {s!r}") from exc
    blocks = data.get("blocks") or ()
    return CombinatorialRhoSheaf(variety, datum, rep, tuple(summands), tuple(tuple(b) for b in blocks))


# ---------------------------------------------------------------------------
# First Chern data


def c_values(sheaf: CombinatorialRhoSheaf) -> list:
    """``c_i = A_d * mu_{d-1}(hp_i) - t_1 . H^{d-1}`` for each summand."""
    v = sheaf.variety
    return [v.A_d * slope(s.hp, v.dim - 1) - v.todd_line for s in sheaf.summands]


def psi_functional(sheaf: CombinatorialRhoSheaf) -> tuple:
    """The cocharacter ``psi`` with ``<psi, chi_i> = c_i`` for every summand."""
    ws = sheaf.weights()
    cs = c_values(sheaf)
    n = sheaf.datum.torus_rank
    if not ws or linalg.rank(ws) < n:
        raise UnderdeterminedPsi("weights do not span the character space")
    try:
        return linalg.solve(ws, cs)
    except InconsistentSystem as exc:
        raise InconsistentDegrees(_inconsistency_witness(ws, cs)) from exc
    except SingularSystem as exc:
        raise UnderdeterminedPsi(str(exc)) from exc


def _inconsistency_witness(ws, cs) -> str:
    # A left kernel vector y with y.W = 0 but y.c != 0 names the relation.
    rows = linalg.transpose(ws)
    for y in linalg.nullspace(rows, len(ws)):
        if linalg.dot(y, cs) != 0:
            terms = " + ".join(f"({a})*c_{i}" for i, a in enumerate(y) if a != 0)
            return f"weights satisfy a relation violated by the degrees: {terms} != 0"
    return "degrees are inconsistent with the weights"


def degree(sheaf: CombinatorialRhoSheaf) -> list:
    psi = psi_functional(sheaf)
    return [dot(psi, chi) for chi in character_group_basis(sheaf.datum)]


def is_central(datum: GroupDatum, rep: Representation) -> bool:
    for z in datum.central_basis:
        for f in rep.factors:
            vals = {dot(z, w) for w, _ in f}
            if len(vals) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, **({"witness": c.witness} if c.witness else {})}
                for c in self.checks
            ],
        }


def validate(sheaf: CombinatorialRhoSheaf) -> ValidationReport:
    checks = []
    v = sheaf.variety
    n = sheaf.datum.torus_rank

    var_bad = []
    if v.dim < 1:
        var_bad.append(f"dimension {v.dim} < 1")
    if v.A_d <= 0:
        var_bad.append(f"A_d = {v.A_d} is not positive")
    checks.append(Check("variety", not var_bad, "; ".join(var_bad)))

    issues = check_datum(sheaf.datum)
    checks.append(Check("group datum", not issues, "; ".join(issues)))

    rep_bad = []
    for j, f in enumerate(sheaf.rep.factors):
        for i, (w, _) in enumerate(f):
            if len(w) != n:
                rep_bad.append(f"weight ({j},{i}) has length {len(w)}, torus rank is {n}")
    checks.append(Check("weight lengths", not rep_bad, "; ".join(rep_bad)))

    seen = {}
    bij_bad = []
    entries = {(j, i): m for j, i, _, m in sheaf.rep.entries()}
    for k, s in enumerate(sheaf.summands):
        key = (s.factor, s.index)
        if key not in entries:
            bij_bad.append(f"summand {k} refers to missing weight {key}")
            continue
        if key in seen:
            bij_bad.append(f"summands {seen[key]} and {k} share weight {key}")
        seen[key] = k
        if s.rank != entries[key]:
            bij_bad.append(f"summand {k} has rank {s.rank} but weight multiplicity {entries[key]}")
    for key in entries:
        if key not in seen:
            bij_bad.append(f"weight {key} has no summand")
    checks.append(Check("summand/weight bijection", not bij_bad, "; ".join(bij_bad)))

    deg_bad, lead_bad = [], []
    for k, s in enumerate(sheaf.summands):
        if s.rank < 1:
            lead_bad.append(f"summand {k} has rank {s.rank}")
            continue
        if s.hp.degree != v.dim:
            deg_bad.append(f"summand {k}: deg hp = {s.hp.degree}, expected {v.dim}")
            continue
        expected = s.rank * v.A_d / factorial(v.dim)
        if s.hp.leading() != expected:
            lead_bad.append(f"summand {k}: leading coefficient {s.hp.leading()}, expected {expected}")
    checks.append(Check("Hilbert polynomial degrees", not deg_bad, "; ".join(deg_bad)))
    checks.append(Check("leading coefficients", not lead_bad, "; ".join(lead_bad)))

    structural = not rep_bad and not bij_bad
    if structural:
        spans = sheaf.rep.spans(n)
        checks.append(
            Check("weights span", spans, "" if spans else f"weights have rank {linalg.rank(sheaf.rep.weights()) if sheaf.rep.weights() else 0} < {n}")
        )
    else:
        spans = False
        checks.append(Check("weights span", False, "skipped: malformed weights"))

    if structural and spans and not deg_bad and not lead_bad and not var_bad:
        try:
            psi_functional(sheaf)
            checks.append(Check("psi consistency", True))
        except (InconsistentDegrees, UnderdeterminedPsi) as exc:
            checks.append(Check("psi consistency", False, str(exc)))
    else:
        checks.append(Check("psi consistency", False, "skipped: earlier checks failed"))

    blk_bad = []
    flat = [k for b in sheaf.blocks for k in b]
    if sorted(flat) != list(range(len(sheaf.summands))):
        blk_bad.append("blocks do not partition the summands")
    else:
        for b in sheaf.blocks:
            if not b:
                blk_bad.append("empty block")
            elif len({sheaf.summands[k].factor for k in b}) > 1:
                blk_bad.append(f"block {list(b)} mixes factors")
    checks.append(Check("block/factor alignment", not blk_bad, "; ".join(blk_bad)))
    return ValidationReport(tuple(checks))


def scaled_ranks(sheaf: CombinatorialRhoSheaf, k: int) -> CombinatorialRhoSheaf:
    """Multiply every rank, multiplicity and Hilbert polynomial by ``k``."""
    rep = Representation([[(w, m * k) for w, m in f] for f in sheaf.rep.factors])
    summands = tuple(replace(s, hp=s.hp * k, rank=s.rank * k) for s in sheaf.summands)
    return replace(sheaf, rep=rep, summands=summands)


def expand_multiplicities(sheaf: CombinatorialRhoSheaf) -> CombinatorialRhoSheaf:
    """Split every rank ``r`` summand into ``r`` rank one copies with ``hp / r``."""
    factors = []
    summands = []
    for j, f in enumerate(sheaf.rep.factors):
        entries = []
        for i, (w, m) in enumerate(f):
            s = next(s for s in sheaf.summands if (s.factor, s.index) == (j, i))
            for _ in range(m):
                summands.append(Summand(j, len(entries), s.hp / m, 1, s.label))
                entries.append((w, 1))
        factors.append(entries)
    return CombinatorialRhoSheaf(sheaf.variety, sheaf.datum, Representation(factors), tuple(summands))
