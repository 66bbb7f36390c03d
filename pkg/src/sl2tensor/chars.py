"""Formal characters of SL2-modules.

A character is a Laurent polynomial in one variable ``q`` with integer
coefficients; the coefficient at ``q^e`` is the dimension of the weight
space of weight ``e``.  Storage is a dense ``int64`` array over the
exponent range actually used, so products are plain convolutions.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .padic import admissible_expansion, check_weight, padic_digits

_SAFE = 2**62


class NotAModuleCharacter(ValueError):
    """Raised when a character cannot be the character of a genuine module."""


class FormalCharacter:
    __slots__ = ("_lo", "_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        items = [(int(e), int(c)) for e, c in items if c]
        if not items:
            self._set(0, np.zeros(0, dtype=np.int64))
            return
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        arr = np.zeros(hi - lo + 1, dtype=np.int64)
        for e, c in items:
            arr[e - lo] += c
        self._set(lo, arr)

    @classmethod
    def from_dense(cls, lo: int, arr) -> "FormalCharacter":
        obj = cls.__new__(cls)
        obj._set(int(lo), np.asarray(arr))
        return obj

    def _set(self, lo, arr):
        nz = np.flatnonzero(arr)
        if nz.size == 0:
            self._lo, self._c = 0, np.zeros(0, dtype=np.int64)
        else:
            self._lo = lo + int(nz[0])
            self._c = arr[nz[0] : nz[-1] + 1].copy()
        self._c.setflags(write=False)
        self._hash = None

    # --- views -----------------------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        return {self._lo + int(i): int(self._c[i]) for i in np.flatnonzero(self._c)}

    def dense(self) -> tuple[int, np.ndarray]:
        return self._lo, self._c

    def __getitem__(self, e: int) -> int:
        i = e - self._lo
        if 0 <= i < len(self._c):
            return int(self._c[i])
        return 0

    def __bool__(self):
        return len(self._c) > 0

    @property
    def top(self) -> int:
        """Largest exponent with a nonzero coefficient."""
        if not self:
            raise ValueError("zero character has no top exponent")
        return self._lo + len(self._c) - 1

    def is_symmetric(self) -> bool:
        if not self:
            return True
        return self._lo == -self.top and bool(np.array_equal(self._c, self._c[::-1]))

    def dimension(self) -> int:
        return int(self._c.sum(dtype=object)) if len(self._c) else 0

    # --- arithmetic -------------------------------------------------------
    def _aligned(self, other):
        if not self:
            return other._lo, np.zeros_like(other._c), other._c
        if not other:
            return self._lo, self._c, np.zeros_like(self._c)
        lo = min(self._lo, other._lo)
        hi = max(self.top, other.top)
        a = np.zeros(hi - lo + 1, dtype=np.result_type(self._c, other._c))
        b = np.zeros_like(a)
        a[self._lo - lo : self._lo - lo + len(self._c)] = self._c
        b[other._lo - lo : other._lo - lo + len(other._c)] = other._c
        return lo, a, b

    def __add__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        lo, a, b = self._aligned(other)
        return FormalCharacter.from_dense(lo, a + b)

    def __sub__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        lo, a, b = self._aligned(other)
        return FormalCharacter.from_dense(lo, a - b)

    def __neg__(self):
        return FormalCharacter.from_dense(self._lo, -self._c)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return FormalCharacter.from_dense(self._lo, self._c * int(other))
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def twist(self, p: int, i: int = 1) -> "FormalCharacter":
        return frobenius_twist(self, p, i)

    # --- identity ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self._lo == other._lo and np.array_equal(self._c, other._c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._lo, self._c.astype(np.int64).tobytes()))
        return self._hash

    def __repr__(self):
        terms = sorted(self.coefficients.items(), reverse=True)
        return "FormalCharacter({%s})" % ", ".join(f"{e}: {c}" for e, c in terms)

    def to_json(self) -> list[list[int]]:
        """Sorted ``[exponent, coefficient]`` pairs, exponents descending."""
        return [[e, c] for e, c in sorted(self.coefficients.items(), reverse=True)]

    @classmethod
    def from_json(cls, pairs) -> "FormalCharacter":
        return cls((int(e), int(c)) for e, c in pairs)


ZERO = FormalCharacter()
ONE = FormalCharacter({0: 1})


def multiply(x: FormalCharacter, y: FormalCharacter) -> FormalCharacter:
    """Character of a tensor product: the Laurent polynomial product."""
    if not x or not y:
        return ZERO
    xlo, xc = x.dense()
    ylo, yc = y.dense()
    bound = int(np.abs(xc).max()) * int(np.abs(yc).max()) * min(len(xc), len(yc))
    if xc.dtype == object or yc.dtype == object or bound >= _SAFE:
        c = np.convolve(xc.astype(object), yc.astype(object))
    else:
        c = np.convolve(xc, yc)
    return FormalCharacter.from_dense(xlo + ylo, c)


def frobenius_twist(x: FormalCharacter, p: int, i: int = 1) -> FormalCharacter:
    """Replace every exponent ``e`` by ``e * p**i``."""
    if i < 0:
        raise ValueError("twist exponent must be nonnegative")
    if i == 0 or not x:
        return x
    lo, c = x.dense()
    step = p**i
    out = np.zeros((len(c) - 1) * step + 1, dtype=c.dtype)
    out[::step] = c
    return FormalCharacter.from_dense(lo * step, out)


@lru_cache(maxsize=None)
def weyl_character(r: int) -> FormalCharacter:
    """Character of the Weyl module: ``q^r + q^(r-2) + ... + q^-r``."""
    check_weight(r)
    arr = np.zeros(2 * r + 1, dtype=np.int64)
    arr[::2] = 1
    return FormalCharacter.from_dense(-r, arr)


@lru_cache(maxsize=None)
def simple_character(r: int, p: int) -> FormalCharacter:
    # Steinberg: L(r) is the twisted product of its restricted digits.
    out = ONE
    for i, d in enumerate(padic_digits(r, p)):
        if d:
            out = multiply(out, frobenius_twist(weyl_character(d), p, i))
    return out


@lru_cache(maxsize=None)
def fundamental_tilting_character(u: int, p: int) -> FormalCharacter:
    if not 0 <= u <= 2 * p - 2:
        raise ValueError(f"fundamental tilting weights lie in [0, 2p-2], got u={u}, p={p}")
    if u <= p - 1:
        return weyl_character(u)
    return weyl_character(u) + weyl_character(2 * p - 2 - u)


def twisted_product(digits, p: int) -> FormalCharacter:
    """Character of ``T(u_0) ⊗ T(u_1)^F ⊗ ... ⊗ T(u_m)^(F^m)``."""
    out = ONE
    for i, u in enumerate(digits):
        if u:
            out = multiply(out, frobenius_twist(fundamental_tilting_character(u, p), p, i))
    return out


@lru_cache(maxsize=None)
def tilting_character(u: int, p: int) -> FormalCharacter:
    return twisted_product(admissible_expansion(u, p), p)


def _peel(x: FormalCharacter, basis, strict: bool) -> Counter:
    if not x.is_symmetric():
        raise NotAModuleCharacter(f"character is not symmetric: {x!r}")
    out = Counter()
    if not x:
        return out
    lo, c = x.dense()
    work = np.array(c, dtype=object if c.dtype == object else np.int64)
    # lo == -top, so exponent e sits at index e - lo
    while True:
        nz = np.flatnonzero(work)
        if nz.size == 0:
            return out
        e = lo + int(nz[-1])
        coeff = int(work[nz[-1]])
        if strict and coeff < 0:
            raise NotAModuleCharacter(f"negative leading coefficient {coeff} at weight {e}")
        if e < 0:
            raise NotAModuleCharacter(f"leftover negative weight {e}")
        out[e] += coeff
        blo, bc = basis(e).dense()
        work[blo - lo : blo - lo + len(bc)] -= coeff * bc


def peel_into_simples(x: FormalCharacter, p: int) -> Counter:
    """Composition factor multiplicities of a module with character ``x``.

    Repeatedly strips the simple character belonging to the largest weight
    still present.  A negative leading coefficient means ``x`` is not the
    character of any module.

    >>> sorted(peel_into_simples(weyl_character(4), 3).items())
    [(0, 1), (4, 1)]
    """
    return _peel(x, lambda e: simple_character(e, p), strict=True)


def peel_into_weyls(x: FormalCharacter) -> Counter:
    """Signed good-filtration multiplicities; nonnegative for tilting characters."""
    return _peel(x, weyl_character, strict=False)


def dimension(x: FormalCharacter) -> int:
    return x.dimension()


def character_from_factors(factors: Mapping[int, int], p: int) -> FormalCharacter:
    out = ZERO
    for w, m in factors.items():
        out = out + simple_character(w, p) * m
    return out
