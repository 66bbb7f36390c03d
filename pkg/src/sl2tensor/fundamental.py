"""Restricted layer: fundamental tilting modules and the strike-rule sets W(a, b)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .padic import check_prime


def _check_restricted(a: int, p: int) -> None:
    if not 0 <= a <= p - 1:
        raise ValueError(f"weight {a} is not restricted for p={p}")


def _strike(a: int, b: int, p: int) -> list[int]:
    # literal procedure: list r+s, r+s-2, ..., r-s and strike 2p-2-u for each u >= p
    r, s = max(a, b), min(a, b)
    listed = [r + s - 2 * i for i in range(s + 1)]
    kept = list(listed)
    for u in listed:
        if u >= p and (2 * p - 2 - u) in kept:
            kept.remove(2 * p - 2 - u)
    return kept


@lru_cache(maxsize=None)
def small_tensor_W(a: int, b: int, p: int) -> tuple[int, ...]:
    """Weights ``u`` with ``L(a) ⊗ L(b) ≅ ⊕ T(u)`` for restricted ``a, b``.

    Returned in descending order.

    >>> small_tensor_W(2, 2, 3)
    (4, 2)
    """
    check_prime(p)
    _check_restricted(a, p)
    _check_restricted(b, p)
    kept = _strike(a, b, p)
    s = {a + b - 2 * i for i in range(min(a, b) + 1)}
    formula = s - {2 * p - 2 - u for u in s if u >= p}
    assert set(kept) == formula and len(kept) == len(formula), (a, b, p)
    return tuple(sorted(formula, reverse=True))


@dataclass(frozen=True)
class FundamentalTilting:
    p: int
    u: int
    series: tuple[int, ...]

    @property
    def socle(self) -> int:
        return self.series[0]


def fundamental_structure(u: int, p: int) -> FundamentalTilting:
    """Composition series (socle first) of T(u) for ``0 <= u <= 2p-2``."""
    check_prime(p)
    if not 0 <= u <= 2 * p - 2:
        raise ValueError(f"fundamental tilting weights lie in [0, 2p-2], got u={u}, p={p}")
    if u <= p - 1:
        return FundamentalTilting(p, u, (u,))
    s = 2 * p - 2 - u
    return FundamentalTilting(p, u, (s, u, s))
