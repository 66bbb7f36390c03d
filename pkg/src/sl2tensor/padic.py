"""Base-p digit arithmetic for SL2 weights.

All functions here are pure and work on plain Python integers.  Digit
vectors are returned as tuples, lowest index first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p!r}")
    return p


def check_weight(r: int) -> int:
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"dominant weight must be a nonnegative integer, got {r!r}")
    return r


@lru_cache(maxsize=None)
def padic_digits(r: int, p: int) -> tuple[int, ...]:
    """Return the base-p digits of ``r``, lowest first.

    Zero has the single digit ``(0,)`` so every weight has at least one.

    >>> padic_digits(8, 3)
    (2, 2)
    """
    check_weight(r)
    check_prime(p)
    if r == 0:
        return (0,)
    out = []
    while r:
        r, d = divmod(r, p)
        out.append(d)
    return tuple(out)


def from_digits(digits, p: int) -> int:
    total = 0
    for d in reversed(digits):
        total = total * p + d
    return total


@lru_cache(maxsize=None)
def admissible_expansion(u: int, p: int) -> tuple[int, ...]:
    """Write ``u = sum(u_i p^i)`` with ``p-1 <= u_i <= 2p-2`` below the top
    digit and ``0 <= u_m <= p-1`` at the top.

    Digits are chosen greedily from the bottom: while the remainder exceeds
    ``p-1`` the next digit is the unique value in ``[p-1, 2p-2]`` congruent to
    it mod p.  A remainder of zero left after such a digit becomes an explicit
    trailing ``0``, so the lower digits always satisfy their bounds.

    >>> admissible_expansion(14, 2)
    (2, 2, 2, 0)
    >>> admissible_expansion(6, 3)
    (3, 1)
    """
    check_weight(u)
    check_prime(p)
    out = []
    rem = u
    while rem > p - 1:
        d = (p - 1) + (rem - (p - 1)) % p
        out.append(d)
        rem = (rem - d) // p
    out.append(rem)
    return tuple(out)


def tilde(u: int, p: int) -> int:
    """Highest weight of the socle (and head) of the fundamental tilting module T(u)."""
    if not 0 <= u <= 2 * p - 2:
        raise ValueError(f"tilde needs 0 <= u <= 2p-2, got u={u}, p={p}")
    return u if u <= p - 1 else 2 * p - 2 - u


@dataclass(frozen=True)
class ResidueData:
    """The unique ``(t, a, k)`` with ``r = a p^t - 1 + k p^(t+1)``."""

    t: int
    a: int
    k: int

    def weight(self, p: int) -> int:
        return self.a * p**self.t - 1 + self.k * p ** (self.t + 1)


def residue_data(r: int, p: int) -> ResidueData:
    """Shift data of a weight ``r ≡ -1 (mod p)``.

    ``t`` is the first position whose digit is not ``p-1`` and ``a`` is one
    more than that digit.

    >>> residue_data(14, 3)
    ResidueData(t=1, a=2, k=1)
    """
    check_weight(r)
    check_prime(p)
    if r <= 0 or r % p != p - 1:
        raise ValueError(f"residue data needs r > 0 and r ≡ -1 mod p, got r={r}, p={p}")
    digits = padic_digits(r, p) + (0,)
    t = next(i for i, d in enumerate(digits) if d != p - 1)
    a = digits[t] + 1
    k = (r + 1 - a * p**t) // p ** (t + 1)
    return ResidueData(t, a, k)
