"""Module structure of L(r) ⊗ L(1) and L(r) ⊗ L(2), plus diagrams for the
summands J(u) of a general tensor product.

The families for ``L(r) ⊗ L(1)`` with ``r ≡ -1 (mod p)`` are built from the
weights ``r_0 = r + 1`` and ``r_i = r + 1 - 2 p^(i-1)``.  Every report is
checked against the character oracle when it is constructed.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .chars import (
    FormalCharacter,
    frobenius_twist,
    peel_into_simples,
    simple_character,
    tilting_character,
    weyl_character,
)
from .classify import classify_summand
from .decompose import SummandProfile, decompose
from .diagram import Diagram
from .padic import ResidueData, check_prime, check_weight, residue_data

SIMPLE = "simple"
SPLIT_SUM = "split_sum"
UNISERIAL = "uniserial"
BISERIAL = "biserial"


class InvariantViolation(AssertionError):
    """A structural result disagrees with the character oracle."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantViolation(msg)


@dataclass(frozen=True)
class Component:
    """A direct summand inside a split sum.

    ``kind`` is ``"simple"`` (just ``L(weight)``) or ``"twisted_tilting"``,
    meaning ``T(base) ⊗ L(k)^(F^level)``.  A twisted tilting component may
    carry the report describing its structure.
    """

    p: int
    kind: str
    weight: int
    base: Optional[int] = None
    k: int = 0
    level: int = 0
    report: Optional["StructureReport"] = None

    @property
    def character(self) -> FormalCharacter:
        if self.kind == SIMPLE:
            return simple_character(self.weight, self.p)
        twist = frobenius_twist(simple_character(self.k, self.p), self.p, self.level)
        return tilting_character(self.base, self.p) * twist

    def render(self) -> str:
        if self.kind == SIMPLE:
            return f"L({self.weight})"
        if self.k == 0:
            return f"T({self.base})"
        return f"T({self.base}) ⊗ L({self.k})^F^{self.level}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "weight": self.weight}
        if self.kind != SIMPLE:
            out.update(base=self.base, k=self.k, level=self.level)
            out["report"] = self.report.to_json() if self.report else None
        return out

    @classmethod
    def from_json(cls, p: int, obj) -> "Component":
        rep = obj.get("report")
        return cls(
            p, obj["kind"], obj["weight"], obj.get("base"), obj.get("k", 0), obj.get("level", 0),
            StructureReport.from_json(rep) if rep else None,
        )


def simple_component(w: int, p: int) -> Component:
    return Component(p, SIMPLE, w)


def twisted_tilting(base: int, k: int, level: int, p: int, report=None) -> Component:
    return Component(p, "twisted_tilting", base + k * p**level, base, k, level, report)


@dataclass(frozen=True)
class StructureReport:
    p: int
    r: int
    other: int
    case: str
    weight: Optional[int] = None
    components: tuple[Component, ...] = ()
    diagram: Optional[Diagram] = None
    family_weights: tuple[int, ...] = ()
    residue: Optional[ResidueData] = None
    shift_k: Optional[int] = None
    base_tilting: Optional[int] = None

    @property
    def series(self) -> Optional[tuple[int, ...]]:
        if self.case == UNISERIAL and self.diagram is not None:
            return self.diagram.series
        return None

    @property
    def character(self) -> FormalCharacter:
        if self.case == SIMPLE:
            return simple_character(self.weight, self.p)
        if self.case == SPLIT_SUM:
            total = FormalCharacter()
            for c in self.components:
                total = total + c.character
            return total
        out = FormalCharacter()
        for w, n in self.diagram.factors().items():
            out = out + simple_character(w, self.p) * n
        return out

    def factors(self) -> Counter:
        if self.diagram is not None:
            return self.diagram.factors()
        return peel_into_simples(self.character, self.p)

    def render(self) -> str:
        if self.case == SIMPLE:
            return f"L({self.weight})"
        if self.case == SPLIT_SUM:
            return " ⊕ ".join(c.render() for c in self.components)
        text = self.diagram.render()
        if self.shift_k == 0 and self.base_tilting is not None:
            text += f" = T({self.base_tilting})"
        return text

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "other": self.other,
            "case": self.case,
            "weight": self.weight,
            "components": [c.to_json() for c in self.components],
            "series": list(self.series) if self.series else None,
            "diagram": self.diagram.to_json() if self.diagram else None,
            "family_weights": list(self.family_weights),
            "residue": None if self.residue is None else
            {"t": self.residue.t, "a": self.residue.a, "k": self.residue.k},
            "shift_k": self.shift_k,
            "base_tilting": self.base_tilting,
        }

    @classmethod
    def from_json(cls, obj) -> "StructureReport":
        p = obj["p"]
        res = obj.get("residue")
        diag = obj.get("diagram")
        return cls(
            p=p,
            r=obj["r"],
            other=obj["other"],
            case=obj["case"],
            weight=obj.get("weight"),
            components=tuple(Component.from_json(p, c) for c in obj.get("components", [])),
            diagram=Diagram.from_json(diag) if diag else None,
            family_weights=tuple(obj.get("family_weights", [])),
            residue=ResidueData(**res) if res else None,
            shift_k=obj.get("shift_k"),
            base_tilting=obj.get("base_tilting"),
        )


def family_weights(r: int, p: int, res: ResidueData) -> tuple[int, ...]:
    """``r_0, ..., r_t`` and, when ``a != 1``, also ``r_(t+1)``."""
    top = res.t + (0 if res.a == 1 else 1)
    return (r + 1,) + tuple(r + 1 - 2 * p ** (i - 1) for i in range(1, top + 1))


def _family_diagram(fw: tuple[int, ...], res: ResidueData) -> Diagram:
    t = res.t
    r0, low = fw[0], fw[1 : t + 1]
    if res.a == 1:
        return Diagram.chain(list(low) + [r0] + list(reversed(low)))
    layers = [[w] for w in low] + [[r0, fw[t + 1]]] + [[w] for w in reversed(low)]
    edges = []
    for i in range(t - 1):
        edges.append(((i, 0), (i + 1, 0)))
        edges.append(((2 * t - i - 1, 0), (2 * t - i, 0)))
    for j in (0, 1):
        edges.append(((t - 1, 0), (t, j)))
        edges.append(((t, j), (t + 1, 0)))
    return Diagram.build(layers, edges)


@lru_cache(maxsize=None)
def tensor_with_natural(r: int, p: int) -> StructureReport:
    """Structure of ``L(r) ⊗ L(1)``.

    >>> tensor_with_natural(3, 2).render()
    '[2,0,4,0,2] = T(4)'
    >>> tensor_with_natural(5, 3).render()
    '[4 | 6 0 | 4] = T(6)'
    """
    check_weight(r)
    check_prime(p)
    if r % p == 0:
        return StructureReport(p, r, 1, SIMPLE, weight=r + 1)
    if r % p != p - 1:
        comps = (simple_component(r + 1, p), simple_component(r - 1, p))
        return StructureReport(p, r, 1, SPLIT_SUM, components=comps)
    res = residue_data(r, p)
    fw = family_weights(r, p, res)
    _require(all(w >= 0 for w in fw), f"negative family weight for r={r}, p={p}")
    diag = _family_diagram(fw, res)
    rep = StructureReport(
        p, r, 1, UNISERIAL if res.a == 1 else BISERIAL,
        diagram=diag, family_weights=fw, residue=res, shift_k=res.k,
        base_tilting=res.a * p**res.t,
    )
    oracle = peel_into_simples(simple_character(r, p) * weyl_character(1), p)
    _require(diag.factors() == oracle, f"L({r})⊗L(1) factors disagree with characters at p={p}")
    return rep


def shift_decomposition(report: StructureReport) -> tuple[StructureReport, int, int]:
    """Split a family report into its ``k = 0`` base and the shift.

    Returns ``(base, k, level)``; every weight of ``report`` is the matching
    base weight plus ``k p^level``.
    """
    if report.case not in (UNISERIAL, BISERIAL) or report.other != 1:
        raise ValueError("shift_decomposition needs a uniserial or biserial report for L(r)⊗L(1)")
    p, res = report.p, report.residue
    level = res.t + 1
    base = tensor_with_natural(res.a * p**res.t - 1, p)
    _require(base.diagram.shifted(res.k * p**level) == report.diagram,
             f"shifted base diagram differs from the report for r={report.r}")
    return base, res.k, level


@lru_cache(maxsize=None)
def tensor_with_L2(r: int, p: int) -> StructureReport:
    """Structure of ``L(r) ⊗ L(2)`` for ``p >= 3``.

    >>> tensor_with_L2(5, 3).render()
    'T(7) ⊕ L(5)'
    """
    check_weight(r)
    check_prime(p)
    if p == 2:
        raise ValueError("L(r) ⊗ L(2) structure is only described for p >= 3")
    c = r % p
    if c == 0:
        return StructureReport(p, r, 2, SIMPLE, weight=r + 2)
    if c == p - 1:
        res = residue_data(r, p)
        comps = (
            twisted_tilting(res.a * p**res.t + 1, res.k, res.t + 1, p),
            simple_component(r, p),
        )
        return StructureReport(p, r, 2, SPLIT_SUM, components=comps, residue=res, shift_k=res.k)
    if p == 3:  # c == 1: L(r) ⊗ L(2) ≅ L(r+1) ⊗ L(1)
        inner = tensor_with_natural(r + 1, p)
        return StructureReport(
            p, r, 2, inner.case, weight=inner.weight, components=inner.components,
            diagram=inner.diagram, family_weights=inner.family_weights,
            residue=inner.residue, shift_k=inner.shift_k, base_tilting=inner.base_tilting,
        )
    if c == 1:
        comps = (simple_component(r + 2, p), simple_component(r, p))
        return StructureReport(p, r, 2, SPLIT_SUM, components=comps)
    if c == p - 2:
        res = residue_data(r + 1, p)
        inner = tensor_with_natural(r + 1, p)
        comps = (
            twisted_tilting(res.a * p**res.t, res.k, res.t + 1, p, report=inner),
            simple_component(r - 2, p),
        )
        return StructureReport(p, r, 2, SPLIT_SUM, components=comps, residue=res, shift_k=res.k)
    comps = tuple(simple_component(w, p) for w in (r + 2, r, r - 2))
    return StructureReport(p, r, 2, SPLIT_SUM, components=comps)


def is_simple_weyl_weight(r: int, p: int) -> bool:
    """True iff ``r + 1 = a p^t`` with ``1 <= a <= p-1``."""
    n = check_weight(r) + 1
    check_prime(p)
    while n % p == 0:
        n //= p
    return n <= p - 1


def _weyl_series_for(w: int, r: int, p: int) -> Optional[tuple[int, ...]]:
    if r <= 0 or r % p != p - 1:
        return None
    res = residue_data(r, p)
    if res.k != 0:
        return None
    fw = family_weights(r, p, res)
    t = res.t
    if w == r + 1:
        return (fw[0],) + tuple(reversed(fw[1 : t + 1]))
    return tuple(fw[1:])


def weyl_series_in_family(w: int, p: int) -> tuple[int, ...]:
    """Composition series of ``∇(w)``, socle first, for ``w = r ± 1`` with
    ``r = a p^t - 1``.

    >>> weyl_series_in_family(4, 2)
    (4, 0, 2)
    """
    check_weight(w)
    check_prime(p)
    found = [s for s in (_weyl_series_for(w, w - 1, p), _weyl_series_for(w, w + 1, p)) if s]
    if not found:
        raise ValueError(f"{w} is not r±1 for any r = a p^t - 1 at p={p}")
    _require(all(s == found[0] for s in found), f"two readings of ∇({w}) disagree")
    series = found[0]
    _require(Counter(series) == peel_into_simples(weyl_character(w), p),
             f"∇({w}) series disagrees with characters at p={p}")
    return series


# --- summand diagrams --------------------------------------------------------


def _natural_socle(b: int, p: int) -> tuple[int, ...]:
    if b % p == 0:
        return (b + 1,)
    if b % p == p - 1:
        return (b - 1,)
    return (b + 1, b - 1)


@lru_cache(maxsize=None)
def ext1_nonzero(lam: int, mu: int, p: int) -> bool:
    """Whether ``Ext^1(L(lam), L(mu))`` is nonzero.

    Scans digit positions: at the first ``i`` where the digits sum to
    ``p-2`` (all lower digits equal), the quotients by ``p^(i+1)`` must be
    linked through the socle of ``L(mu') ⊗ L(1)``.
    """
    while lam or mu:
        a, b = lam % p, mu % p
        if a + b == p - 2 and lam // p in _natural_socle(mu // p, p):
            return True
        if a != b:
            return False
        lam //= p
        mu //= p
    return False


def _pieces(J: SummandProfile) -> list[Diagram]:
    p = J.p
    out = []
    simple = 0
    for i, x in enumerate(J.u):
        if x >= p:
            s = (2 * p - 2 - x) * p**i
            out.append(Diagram.chain([s, x * p**i, s]))
        else:
            simple += x * p**i
    if simple or not out:
        out.append(Diagram.point(simple))
    return out


def _cell(x: int, y: int, p: int):
    """``L(x) ⊗ L(y)`` as a list of simple weights, or an indecomposable
    summand profile, or ``None`` when neither description applies."""
    dec = decompose(x, y, p)
    classes = [classify_summand(J) for J in dec.summands]
    if all(c.is_simple for c in classes):
        return [J.highest_weight for J in dec.summands]
    if len(dec) == 1:
        return dec.summands[0]
    return None


def _grid(X: Diagram, Y: Diagram, p: int) -> Optional[Diagram]:
    cells = {}
    for (vx, x), (vy, y) in itertools.product(X.vertices(), Y.vertices()):
        c = _cell(x, y, p)
        if not isinstance(c, list):
            return None
        cells[vx, vy] = c
    layers: dict[int, list[int]] = {}
    ids = {}
    for (vx, vy), ws in cells.items():
        lay = layers.setdefault(vx[0] + vy[0], [])
        ids[vx, vy] = []
        for w in ws:
            ids[vx, vy].append((vx[0] + vy[0], len(lay)))
            lay.append(w)
    edges = []

    def link(c1, c2):
        for v1, v2 in itertools.product(ids[c1], ids[c2]):
            if ext1_nonzero(layers[v1[0]][v1[1]], layers[v2[0]][v2[1]], p):
                edges.append((v1, v2))

    for a, b in X.edges:
        for vy, _ in Y.vertices():
            link((a, vy), (b, vy))
    for a, b in Y.edges:
        for vx, _ in X.vertices():
            link((vx, a), (vx, b))
    return Diagram.build([layers[i] for i in range(len(layers))], edges)


def _stack(point: int, chain: tuple[int, ...], p: int) -> Optional[Diagram]:
    blocks = []
    for y in chain:
        c = _cell(point, y, p)
        if c is None:
            return None
        if isinstance(c, list):
            blocks.append(Diagram(((tuple(sorted(c, reverse=True))),), ()))
        else:
            d = summand_diagram(c)
            if d is None:
                return None
            blocks.append(d)
    layers: list[list[int]] = []
    edges = []
    for n, d in enumerate(blocks):
        off = len(layers)
        layers.extend(list(l) for l in d.layers)
        edges.extend(((a[0] + off, a[1]), (b[0] + off, b[1])) for a, b in d.edges)
        if n:
            below = off - 1
            for i, j in itertools.product(range(len(layers[below])), range(len(d.layers[0]))):
                if ext1_nonzero(layers[below][i], d.layers[0][j], p):
                    edges.append(((below, i), (off, j)))
    return Diagram.build(layers, edges)


def _merge(X: Diagram, Y: Diagram, p: int) -> Optional[Diagram]:
    g = _grid(X, Y, p)
    if g is not None:
        return g
    for A, B in ((X, Y), (Y, X)):
        if len(A) == 1 and B.is_chain():
            return _stack(A.layers[0][0], B.series, p)
    return None


def _valid(d: Diagram, J: SummandProfile) -> bool:
    return (
        d.factors() == J.factors
        and d.socle == (J.socle_weight,)
        and d.head == (J.socle_weight,)
        and d.is_self_dual()
    )


def _search(pieces: tuple[Diagram, ...], J: SummandProfile) -> Optional[Diagram]:
    if len(pieces) == 1:
        return pieces[0] if _valid(pieces[0], J) else None
    for i, j in itertools.combinations(range(len(pieces)), 2):
        m = _merge(pieces[i], pieces[j], J.p)
        if m is None:
            continue
        rest = tuple(x for n, x in enumerate(pieces) if n not in (i, j))
        found = _search(rest + (m,), J)
        if found is not None:
            return found
    return None


@lru_cache(maxsize=None)
def summand_diagram(J: SummandProfile) -> Optional[Diagram]:
    """A structure diagram for the summand ``J``, or ``None``.

    The fundamental pieces ``T(u_i)^(F^i)`` are combined pairwise.  When all
    products of factors are semisimple the result is the product grid with
    edges kept where ``Ext^1`` is nonzero; a simple factor times a uniserial
    piece is stacked cell by cell.  This is a heuristic: the result is only
    returned if its factors, socle, head and self-duality all check out.
    """
    return _search(tuple(_pieces(J)), J)
