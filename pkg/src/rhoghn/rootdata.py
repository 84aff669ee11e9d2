"""Split reductive group data in torus coordinates.

A group is described by its maximal torus ``Q^{n_T}``, a basis of the
cocharacters of its connected center, and a base of simple roots with their
coroots and fundamental coweights.  Covectors and vectors are both plain
tuples of Fractions; the pairing is the dot product.

The classical factors use the usual coordinates: ``gl(k)`` and the
orthogonal and symplectic groups live on the diagonal torus, while ``sl(k)``
uses coroot coordinates so that its torus has rank ``k - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import DegenerateForm, NotDominant, ParseError, SingularSystem, UnsupportedType
from .linalg import dot, primitive_scale  # noqa: F401  (re-exported)
from .polyq import format_rational, parse_rational


def _vec(v) -> tuple:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class GroupDatum:
    torus_rank: int
    central_basis: tuple
    simple_roots: tuple
    simple_coroots: tuple
    fund_coweights: tuple
    name: str = ""
    # Labels of the simple roots.  Levi sub-data keep the labels of the roots
    # they retain, so parabolic types stay comparable across steps.
    root_labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "central_basis", tuple(_vec(z) for z in self.central_basis))
        object.__setattr__(self, "simple_roots", tuple(_vec(a) for a in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(_vec(a) for a in self.simple_coroots))
        object.__setattr__(self, "fund_coweights", tuple(_vec(w) for w in self.fund_coweights))
        if not self.root_labels:
            object.__setattr__(
                self, "root_labels", tuple(range(1, len(self.simple_roots) + 1))
            )

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def cartan_matrix(self) -> list:
        """``C[i][j] = <alpha_i, alpha_j^vee>``."""
        return [[dot(a, c) for c in self.simple_coroots] for a in self.simple_roots]

    def reflect(self, j: int, v: Sequence) -> tuple:
        """Simple reflection ``s_j`` acting on a cocharacter."""
        a = dot(self.simple_roots[j], v)
        return tuple(Fraction(x) - a * c for x, c in zip(v, self.simple_coroots[j]))

    def to_json(self) -> dict:
        def enc(vs):
            return [[format_rational(x) for x in v] for v in vs]

        return {
            "torus_rank": self.torus_rank,
            "central_basis": enc(self.central_basis),
            "simple_roots": enc(self.simple_roots),
            "simple_coroots": enc(self.simple_coroots),
            "fund_coweights": enc(self.fund_coweights),
            "name": self.name,
        }


def check_datum(datum: GroupDatum) -> list:
    """Return a list of violated invariants (empty when the datum is sound)."""
    issues = []
    n = datum.torus_rank
    vecs = (
        list(datum.central_basis)
        + list(datum.simple_roots)
        + list(datum.simple_coroots)
        + list(datum.fund_coweights)
    )
    if any(len(v) != n for v in vecs):
        return [f"vector length differs from torus rank {n}"]
    l = datum.semisimple_rank
    if len(datum.simple_coroots) != l or len(datum.fund_coweights) != l:
        return ["simple roots, coroots and coweights must have equal counts"]
    if len(datum.central_basis) + l != n:
        issues.append(f"h + l = {len(datum.central_basis) + l} but torus rank is {n}")
    basis = list(datum.central_basis) + list(datum.fund_coweights)
    if basis and linalg.rank(basis) != len(basis):
        issues.append("central basis and fundamental coweights are not independent")
    for i, a in enumerate(datum.simple_roots):
        for j, w in enumerate(datum.fund_coweights):
            if dot(a, w) != (1 if i == j else 0):
                issues.append(f"<alpha_{i + 1}, omega_{j + 1}> = {dot(a, w)}")
        for j, z in enumerate(datum.central_basis):
            if dot(a, z) != 0:
                issues.append(f"<alpha_{i + 1}, z_{j + 1}> = {dot(a, z)}")
    for i, row in enumerate(datum.cartan_matrix()):
        for j, c in enumerate(row):
            if c.denominator != 1:
                issues.append(f"Cartan entry ({i + 1},{j + 1}) = {c} is not integral")
            if i == j and c != 2:
                issues.append(f"Cartan diagonal entry {i + 1} = {c}")
    return issues


def fundamental_coweights(simple_roots: Sequence, simple_coroots: Sequence) -> tuple:
    """Coweights in the coroot span dual to the simple roots."""
    l = len(simple_roots)
    if l == 0:
        return ()
    cartan = [[dot(a, c) for c in simple_coroots] for a in simple_roots]
    out = []
    for j in range(l):
        e = [Fraction(int(i == j)) for i in range(l)]
        x = linalg.bareiss_solve(cartan, e)
        n = len(simple_coroots[0])
        w = [Fraction(0)] * n
        for k, xk in enumerate(x):
            for t in range(n):
                w[t] += xk * simple_coroots[k][t]
        out.append(tuple(w))
    return tuple(out)


# ---------------------------------------------------------------------------
# Builtin factors

def _unit(n: int, i: int) -> list:
    v = [0] * n
    v[i] = 1
    return v


def _gl(k: int) -> GroupDatum:
    roots = []
    for i in range(k - 1):
        v = [0] * k
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    return GroupDatum(
        torus_rank=k,
        central_basis=[[1] * k],
        simple_roots=roots,
        simple_coroots=roots,
        fund_coweights=fundamental_coweights(_vecs(roots), _vecs(roots)),
        name=f"gl({k})",
    )


def _sl(k: int) -> GroupDatum:
    # Coroot coordinates: alpha_j^vee is the j-th unit vector and the simple
    # roots are the rows of the type A Cartan matrix.
    n = k - 1
    coroots = [_unit(n, j) for j in range(n)]
    roots = []
    for i in range(n):
        v = [0] * n
        v[i] = 2
        if i > 0:
            v[i - 1] = -1
        if i < n - 1:
            v[i + 1] = -1
        roots.append(v)
    return GroupDatum(
        torus_rank=n,
        central_basis=[],
        simple_roots=roots,
        simple_coroots=coroots,
        fund_coweights=fundamental_coweights(_vecs(roots), _vecs(coroots)),
        name=f"sl({k})",
    )


def _type_bcd(n: int, kind: str) -> GroupDatum:
    roots, coroots = [], []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(v)
        coroots.append(v)
    if kind == "B":
        roots.append(_unit(n, n - 1))
        coroots.append([2 * x for x in _unit(n, n - 1)])
    elif kind == "C":
        roots.append([2 * x for x in _unit(n, n - 1)])
        coroots.append(_unit(n, n - 1))
    else:
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        roots.append(v)
        coroots.append(v)
    return GroupDatum(
        torus_rank=n,
        central_basis=[],
        simple_roots=roots,
        simple_coroots=coroots,
        fund_coweights=fundamental_coweights(_vecs(roots), _vecs(coroots)),
    )


def _so(k: int) -> GroupDatum:
    if k == 2:
        return GroupDatum(1, [[1]], [], [], [], name="so(2)")
    n = k // 2
    if k % 2:
        d = _type_bcd(n, "B")
    elif n >= 2:
        d = _type_bcd(n, "D")
    else:
        raise UnsupportedType(f"so({k})")
    return _renamed(d, f"so({k})")


def _sp(k: int) -> GroupDatum:
    return _renamed(_type_bcd(k // 2, "C"), f"sp({k})")


def _renamed(d: GroupDatum, name: str) -> GroupDatum:
    return GroupDatum(
        d.torus_rank, d.central_basis, d.simple_roots, d.simple_coroots, d.fund_coweights, name
    )


def _vecs(vs) -> list:
    return [_vec(v) for v in vs]


_FACTOR_RE = re.compile(r"^\s*(gl|sl|so|sp)\s*\(\s*(\d+)\s*\)\s*$")


def parse_factor(text: str) -> tuple:
    m = _FACTOR_RE.match(text)
    if not m:
        if re.match(r"^\s*[a-z]+\s*\(\s*\d+\s*\)\s*$", text, re.I):
            raise UnsupportedType(f"unsupported group factor {text!r}")
        raise ParseError(f"cannot parse group factor {text!r}")
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise ParseError(f"group factor {text!r} needs a positive size")
    if kind == "sl" and k < 2:
        raise UnsupportedType("sl(1) is trivial")
    if kind == "so" and k < 2:
        raise UnsupportedType(f"so({k}) has no torus")
    if kind == "sp" and (k % 2 or k < 2):
        raise UnsupportedType(f"sp({k}) needs an even size")
    return kind, k


def split_group_spec(spec: str) -> list:
    parts = [p for p in re.split(r"\)\s*x\s*", spec.strip())]
    out = []
    for i, p in enumerate(parts):
        out.append(p if i == len(parts) - 1 else p + ")")
    if not spec.strip():
        raise ParseError("empty group spec")
    return [parse_factor(p) for p in out]


def factor_datum(kind: str, k: int) -> GroupDatum:
    return {"gl": _gl, "sl": _sl, "so": _so, "sp": _sp}[kind](k)


def product_datum(parts: Sequence[GroupDatum], name: str = "") -> GroupDatum:
    """Direct product; torus coordinates are concatenated in order."""
    n = sum(p.torus_rank for p in parts)
    central, roots, coroots, coweights, labels = [], [], [], [], []
    off = 0
    for p in parts:
        def pad(v, off=off, r=p.torus_rank):
            return [0] * off + list(v) + [0] * (n - off - r)

        central += [pad(z) for z in p.central_basis]
        roots += [pad(a) for a in p.simple_roots]
        coroots += [pad(a) for a in p.simple_coroots]
        coweights += [pad(w) for w in p.fund_coweights]
        off += p.torus_rank
    labels = tuple(range(1, len(roots) + 1))
    return GroupDatum(n, central, roots, coroots, coweights, name or "x".join(p.name for p in parts), labels)


def builtin_datum(spec: str) -> GroupDatum:
    factors = split_group_spec(spec)
    parts = [factor_datum(kind, k) for kind, k in factors]
    if len(parts) == 1:
        return parts[0]
    return product_datum(parts)


def standard_weights(kind: str, k: int) -> list:
    """Weights of the defining representation in the builtin coordinates."""
    if kind == "gl":
        return [tuple(_unit(k, i)) for i in range(k)]
    if kind == "sl":
        n = k - 1
        out = []
        for j in range(k):
            w = [0] * n
            if j < n:
                w[j] += 1
            if j > 0:
                w[j - 1] -= 1
            out.append(tuple(w))
        return out
    if kind == "so" and k == 2:
        return [(1,), (-1,)]
    n = k // 2
    pos = [tuple(_unit(n, i)) for i in range(n)]
    neg = [tuple(-x for x in _unit(n, i)) for i in reversed(range(n))]
    if kind == "so" and k % 2:
        return pos + [tuple([0] * n)] + neg
    return pos + neg


def standard_representation(spec: str) -> "Representation":
    """One factor per group factor, each carrying its defining representation."""
    factors = split_group_spec(spec)
    n = sum(factor_datum(kind, k).torus_rank for kind, k in factors)
    out = []
    off = 0
    for kind, k in factors:
        r = factor_datum(kind, k).torus_rank
        ws = standard_weights(kind, k)
        out.append([((0,) * off + w + (0,) * (n - off - r), 1) for w in ws])
        off += r
    return Representation(out)


def datum_from_json(data) -> GroupDatum:
    if isinstance(data, str):
        return builtin_datum(data)
    if not isinstance(data, dict):
        raise ParseError("group must be a spec string or an object")
    try:
        n = int(data["torus_rank"])

        def vecs(key):
            return [[parse_rational(x) for x in v] for v in data.get(key, [])]

        roots = vecs("simple_roots")
        coroots = vecs("simple_coroots")
        if "fund_coweights" in data:
            coweights = vecs("fund_coweights")
        else:
            coweights = fundamental_coweights(_vecs(roots), _vecs(coroots))
        return GroupDatum(
            n, vecs("central_basis"), roots, coroots, coweights, str(data.get("name", "custom"))
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed group datum: {exc}") from exc


# ---------------------------------------------------------------------------
# Representations


@dataclass(frozen=True)
class Representation:
    """Weights per factor, each an ``(integer covector, multiplicity)`` pair."""

    factors: tuple
    dims: tuple = field(default=())

    def __post_init__(self):
        fs = tuple(
            tuple((tuple(int(x) for x in w), int(m)) for w, m in factor) for factor in self.factors
        )
        object.__setattr__(self, "factors", fs)
        computed = tuple(sum(m for _, m in f) for f in fs)
        if self.dims and tuple(self.dims) != computed:
            raise ParseError(f"declared dimensions {tuple(self.dims)} differ from {computed}")
        object.__setattr__(self, "dims", computed)

    def entries(self) -> list:
        """Flat list of ``(factor, index, weight, mult)``."""
        return [
            (j, i, w, m) for j, f in enumerate(self.factors) for i, (w, m) in enumerate(f)
        ]

    def weights(self) -> list:
        return [w for f in self.factors for w, _ in f]

    def spans(self, n: int) -> bool:
        ws = self.weights()
        return bool(ws) and linalg.rank(ws) == n

    def to_json(self) -> list:
        return [[{"weight": list(w), "mult": m} for w, m in f] for f in self.factors]


def representation_from_json(data) -> Representation:
    if not isinstance(data, list):
        raise ParseError("representation must be a list of factors")
    factors = []
    for f in data:
        if not isinstance(f, list):
            raise ParseError("each representation factor must be a list of weights")
        entries = []
        for e in f:
            try:
                w, m = e["weight"], e.get("mult", 1)
            except (TypeError, KeyError) as exc:
                raise ParseError(f"malformed weight entry {e!r}") from exc
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in w):
                raise ParseError(f"weights must be integer covectors, got {w!r}")
            if not isinstance(m, int) or m < 1:
                raise ParseError(f"multiplicity must be a positive integer, got {m!r}")
            entries.append((tuple(w), m))
        factors.append(entries)
    return Representation(factors)


def chi_inner(rep: Representation, delta: Sequence, gamma: Sequence) -> Fraction:
    return sum(
        (m * dot(w, delta) * dot(w, gamma) for f in rep.factors for w, m in f), Fraction(0)
    )


def gram_matrix(rep: Representation, n: Optional[int] = None) -> list:
    if n is None:
        ws = rep.weights()
        n = len(ws[0]) if ws else 0
    g = [[Fraction(0)] * n for _ in range(n)]
    for f in rep.factors:
        for w, m in f:
            for s in range(n):
                if w[s]:
                    for t in range(n):
                        g[s][t] += m * w[s] * w[t]
    return g


def is_positive_definite(g: Sequence[Sequence]) -> bool:
    """Exact test through the leading principal minors."""
    n = len(g)
    return all(linalg.determinant([row[:k] for row in g[:k]]) > 0 for k in range(1, n + 1))


def pi_Z(datum: GroupDatum, rep: Representation, v: Sequence) -> tuple:
    """Orthogonal projection onto the span of the fundamental coweights."""
    n = datum.torus_rank
    g = gram_matrix(rep, n)
    if not is_positive_definite(g):
        raise DegenerateForm("Gram matrix of the representation is singular")
    b = datum.fund_coweights
    if not b:
        return tuple(Fraction(0) for _ in range(n))
    gv = linalg.matvec(g, v)
    gb = [linalg.matvec(g, w) for w in b]
    normal = [[dot(bi, gbj) for gbj in gb] for bi in b]
    rhs = [dot(bi, gv) for bi in b]
    try:
        coef = linalg.bareiss_solve(normal, rhs)
    except SingularSystem as exc:
        raise DegenerateForm("coweights are degenerate for the pairing") from exc
    out = [Fraction(0)] * n
    for c, w in zip(coef, b):
        for t in range(n):
            out[t] += c * w[t]
    return tuple(out)


def character_group_basis(datum: GroupDatum) -> list:
    """Basis of the covectors killing every simple coroot.

    Each vector is scaled to be primitive with a positive first nonzero entry.
    """
    basis = linalg.nullspace(list(datum.simple_coroots), datum.torus_rank)
    out = []
    for v in basis:
        p = primitive_scale(v)
        if next(x for x in p if x != 0) < 0:
            p = tuple(-x for x in p)
        out.append(tuple(Fraction(x) for x in p))
    return out


# ---------------------------------------------------------------------------
# Parabolics and Levi subgroups


def parabolic_type(datum: GroupDatum, lam: Sequence) -> frozenset:
    """Labels of the simple roots pairing positively with a dominant ``lam``."""
    out = set()
    for label, a in zip(datum.root_labels, datum.simple_roots):
        p = dot(a, lam)
        if p < 0:
            raise NotDominant(f"<alpha_{label}, lambda> = {p} < 0")
        if p > 0:
            out.add(label)
    return frozenset(out)


def levi_center_basis(datum: GroupDatum, lam: Sequence) -> list:
    J = parabolic_type(datum, lam)
    extra = [w for label, w in zip(datum.root_labels, datum.fund_coweights) if label in J]
    return list(datum.central_basis) + extra


def levi_subdatum(datum: GroupDatum, lam: Sequence) -> GroupDatum:
    """Datum of the Levi of a dominant ``lam``: same torus, fewer simple roots."""
    J = parabolic_type(datum, lam)
    keep = [k for k, label in enumerate(datum.root_labels) if label not in J]
    roots = [datum.simple_roots[k] for k in keep]
    coroots = [datum.simple_coroots[k] for k in keep]
    return GroupDatum(
        datum.torus_rank,
        levi_center_basis(datum, lam),
        roots,
        coroots,
        fundamental_coweights(roots, coroots) if roots else (),
        datum.name,
        tuple(datum.root_labels[k] for k in keep),
    )


def dominant_rebase(datum: GroupDatum, lam: Sequence, max_steps: int = 10000) -> GroupDatum:
    """Replace the simple system by a Weyl conjugate for which ``lam`` is dominant.

    The torus, the center and the root system are unchanged; only the choice
    of positive roots moves.  Each reflection through a simple root pairing
    negatively with ``lam`` removes one positive root that is negative on
    ``lam``, so the loop terminates.
    """
    roots = list(datum.simple_roots)
    coroots = list(datum.simple_coroots)
    coweights = list(datum.fund_coweights)
    for _ in range(max_steps):
        bad = next((i for i, a in enumerate(roots) if dot(a, lam) < 0), None)
        if bad is None:
            break
        a_i, c_i = roots[bad], coroots[bad]
        roots = [
            tuple(x - dot(a, c_i) * y for x, y in zip(a, a_i)) for a in roots
        ]
        coroots = [
            tuple(x - dot(a_i, c) * y for x, y in zip(c, c_i)) for c in coroots
        ]
        coweights = [
            tuple(x - dot(a_i, w) * y for x, y in zip(w, c_i)) for w in coweights
        ]
    else:
        raise RuntimeError("Weyl normalization did not terminate")
    return GroupDatum(
        datum.torus_rank,
        datum.central_basis,
        roots,
        coroots,
        coweights,
        datum.name,
        datum.root_labels,
    )


def is_dominant(datum: GroupDatum, lam: Sequence) -> bool:
    return all(dot(a, lam) >= 0 for a in datum.simple_roots)
