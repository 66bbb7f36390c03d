"""Splitting L(r) ⊗ L(s) into twisted tensor products of fundamental tilting modules."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .chars import FormalCharacter, peel_into_simples, twisted_product
from .fundamental import small_tensor_W
from .padic import check_prime, check_weight, from_digits, padic_digits, tilde


@dataclass(frozen=True, order=True)
class SummandProfile:
    """One indecomposable summand ``J(u) = ⊗ T(u_i)^(F^i)``."""

    p: int
    u: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= x <= 2 * self.p - 2 for x in self.u):
            raise ValueError(f"digits of a summand profile lie in [0, 2p-2]: {self.u}")

    @property
    def highest_weight(self) -> int:
        return from_digits(self.u, self.p)

    @property
    def socle_weight(self) -> int:
        return socle_weight(self)

    @property
    def character(self) -> FormalCharacter:
        return summand_character(self)

    @property
    def factors(self) -> Counter:
        return summand_factors(self)

    @property
    def trimmed(self) -> tuple[int, ...]:
        """Digits with trailing zeros removed (at least one digit kept)."""
        u = list(self.u)
        while len(u) > 1 and u[-1] == 0:
            u.pop()
        return tuple(u)


@dataclass(frozen=True)
class Decomposition:
    p: int
    r: int
    s: int
    summands: tuple[SummandProfile, ...]

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    @property
    def highest_weights(self) -> list[int]:
        return [J.highest_weight for J in self.summands]


def digit_pairs(r: int, s: int, p: int) -> list[tuple[int, int]]:
    dr, ds = padic_digits(r, p), padic_digits(s, p)
    n = max(len(dr), len(ds))
    dr = dr + (0,) * (n - len(dr))
    ds = ds + (0,) * (n - len(ds))
    return list(zip(dr, ds))


def w_sets(r: int, s: int, p: int) -> list[tuple[int, ...]]:
    return [small_tensor_W(a, b, p) for a, b in digit_pairs(r, s, p)]


def summand_count(r: int, s: int, p: int) -> int:
    n = 1
    for w in w_sets(r, s, p):
        n *= len(w)
    return n


def decompose(r: int, s: int, p: int) -> Decomposition:
    """Indecomposable summands of ``L(r) ⊗ L(s)``, highest weight first.

    >>> [J.highest_weight for J in decompose(8, 8, 3)]
    [16, 14, 10, 8]
    """
    check_weight(r)
    check_weight(s)
    check_prime(p)
    profiles = [SummandProfile(p, u) for u in itertools.product(*w_sets(r, s, p))]
    weights = [J.highest_weight for J in profiles]
    if len(set(weights)) == len(weights):
        profiles.sort(key=lambda J: J.highest_weight, reverse=True)
    else:  # pragma: no cover - distinct digit vectors never collide
        profiles.sort(key=lambda J: J.u, reverse=True)
    return Decomposition(p, r, s, tuple(profiles))


@lru_cache(maxsize=None)
def _summand_character(p: int, u: tuple[int, ...]) -> FormalCharacter:
    return twisted_product(u, p)


def summand_character(J: SummandProfile) -> FormalCharacter:
    return _summand_character(J.p, J.trimmed)


@lru_cache(maxsize=None)
def _summand_factors(p: int, u: tuple[int, ...]) -> Counter:
    return peel_into_simples(_summand_character(p, u), p)


def summand_factors(J: SummandProfile) -> Counter:
    """Composition factors of ``J`` via the character oracle."""
    return Counter(_summand_factors(J.p, J.trimmed))


def socle_weight(J: SummandProfile) -> int:
    return from_digits([tilde(x, J.p) for x in J.u], J.p)
