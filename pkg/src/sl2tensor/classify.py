"""Which summands are tilting or simple, and which tilting modules factor as L ⊗ L'."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .decompose import Decomposition, SummandProfile, decompose, digit_pairs
from .padic import admissible_expansion, check_prime, check_weight, from_digits

TILTING = "tilting"
SIMPLE = "simple"
SIMPLE_TILTING = "simple_tilting"
NEITHER = "neither"


@dataclass(frozen=True)
class SummandClass:
    kind: str
    weight: Optional[int] = None

    @property
    def is_tilting(self) -> bool:
        return self.kind in (TILTING, SIMPLE_TILTING)

    @property
    def is_simple(self) -> bool:
        return self.kind in (SIMPLE, SIMPLE_TILTING)


def classify_summand(J: SummandProfile) -> SummandClass:
    """Tilting iff every digit below the top one is at least ``p-1``; simple
    iff every digit is at most ``p-1``.

    Trailing zero digits are dropped first: ``T(0)^(F^m)`` is the trivial
    module and does not change the summand.
    """
    p = J.p
    u = J.trimmed
    w = J.highest_weight
    tilting = all(x >= p - 1 for x in u[:-1])
    simple = all(x <= p - 1 for x in u)
    if tilting and simple:
        return SummandClass(SIMPLE_TILTING, w)
    if tilting:
        return SummandClass(TILTING, w)
    if simple:
        return SummandClass(SIMPLE, w)
    return SummandClass(NEITHER)


def classify_decomposition(dec: Decomposition) -> list[tuple[SummandProfile, SummandClass]]:
    return [(J, classify_summand(J)) for J in dec.summands]


def is_indecomposable_product(r: int, s: int, p: int) -> bool:
    check_prime(p)
    for a, b in digit_pairs(check_weight(r), check_weight(s), p):
        if a == 0 or b == 0:
            continue
        if a + b == p and 1 in (a, b):
            continue
        return False
    return True


def indecomposable_tilting_product(r: int, s: int, p: int) -> Optional[int]:
    """Return ``r + s`` when ``L(r) ⊗ L(s) ≅ T(r + s)``, else ``None``."""
    check_prime(p)
    pairs = digit_pairs(check_weight(r), check_weight(s), p)
    m = len(pairs) - 1
    for i, (a, b) in enumerate(pairs):
        total = a + b
        if i < m and not p - 1 <= total <= p:
            return None
        if i == m and total > p:
            return None
        if total == p and 1 not in (a, b):
            return None
        if total < p and 0 not in (a, b):
            return None
    return r + s


def _position_choices(x: int, p: int, top: bool) -> list[tuple[int, int]]:
    if x <= p - 1 and (top or x == p - 1):
        return sorted({(0, x), (x, 0)})
    if x == p and not top:
        return sorted({(1, p - 1), (p - 1, 1)})
    return []


def enumerate_tilting_factorizations(u: int, p: int) -> set[tuple[int, int]]:
    """All ``{r, s}`` (reported with ``r >= s``) with ``L(r) ⊗ L(s) ≅ T(u)``.

    Built digit by digit from the admissible expansion of ``u``.

    >>> sorted(enumerate_tilting_factorizations(6, 3))
    [(4, 2), (5, 1)]
    """
    digits = admissible_expansion(check_weight(u), check_prime(p))
    m = len(digits) - 1
    options = [_position_choices(x, p, i == m) for i, x in enumerate(digits)]
    if any(not o for o in options):
        return set()
    out = set()
    for combo in itertools.product(*options):
        r = from_digits([c[0] for c in combo], p)
        s = from_digits([c[1] for c in combo], p)
        out.add((max(r, s), min(r, s)))
    return out


def scan_tilting_factorizations(u: int, p: int) -> set[tuple[int, int]]:
    """Exhaustive search over all ``r + s = u``; the oracle for the enumeration."""
    return {(r, u - r) for r in range((u + 1) // 2, u + 1)
            if indecomposable_tilting_product(r, u - r, p) == u}


def is_factorizable(u: int, p: int) -> bool:
    digits = admissible_expansion(u, p)
    return all(x in (p - 1, p) for x in digits[:-1])


def factorization_count_readings(u: int, p: int) -> dict:
    """Closed-form factorization counts under the possible readings.

    For odd ``p`` the count is ``2^m`` or ``2^(m-1)`` unordered pairs.  For
    ``p = 2`` the exponent ``t`` counts digits equal to 1, either over all
    positions or only below the top, and the pairs may be ordered or not;
    all four combinations are reported.
    """
    digits = admissible_expansion(u, p)
    m = len(digits) - 1
    if not is_factorizable(u, p):
        return {"factorizable": False}
    if p > 2:
        exp = m if digits[-1] > 0 else m - 1
        return {"factorizable": True, "formula": 2**exp if exp >= 0 else None}
    t_all = sum(1 for x in digits if x == 1)
    t_low = sum(1 for x in digits[:-1] if x == 1)
    return {"factorizable": True, "t_all": 2**t_all, "t_below_top": 2**t_low}


def ordered_count(pairs: set[tuple[int, int]]) -> int:
    return sum(1 if r == s else 2 for r, s in pairs)


def construct_tensor_containing(u: int, p: int) -> tuple[int, int]:
    """A pair ``(r, s)`` such that ``T(u)`` is a summand of ``L(r) ⊗ L(s)``."""
    digits = admissible_expansion(check_weight(u), check_prime(p))
    rs = [min(x, p - 1) for x in digits]
    ss = [x - y for x, y in zip(digits, rs)]
    return from_digits(rs, p), from_digits(ss, p)


def tilting_summand_weights(dec: Decomposition) -> list[int]:
    return [c.weight for _, c in classify_decomposition(dec) if c.is_tilting]


def contains_tilting(u: int, r: int, s: int, p: int) -> bool:
    return u in tilting_summand_weights(decompose(r, s, p))
