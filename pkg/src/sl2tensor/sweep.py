"""Property sweeps: every closed-form result checked against the character oracle.

Each ``check_*`` function returns a :class:`VerifyReport` whose failures are
``(case, computed, expected)`` triples.
"""
from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache

import numpy as np

from .chars import (
    NotAModuleCharacter,
    character_from_factors,
    peel_into_simples,
    peel_into_weyls,
    simple_character,
    tilting_character,
    weyl_character,
)
from .classify import (
    classify_summand,
    construct_tensor_containing,
    enumerate_tilting_factorizations,
    factorization_count_readings,
    is_factorizable,
    is_indecomposable_product,
    ordered_count,
    scan_tilting_factorizations,
)
from .corpus import VerifyReport
from .decompose import decompose, summand_character
from .padic import admissible_expansion
from .structure import (
    BISERIAL,
    UNISERIAL,
    is_simple_weyl_weight,
    shift_decomposition,
    tensor_with_L2,
    tensor_with_natural,
    weyl_series_in_family,
)


@lru_cache(maxsize=None)
def _tilting_ok(w: int, p: int) -> bool:
    weyls = peel_into_weyls(tilting_character(w, p))
    return all(n >= 0 for n in weyls.values()) and weyls[w] == 1


def _dense_total(summands, n: int) -> np.ndarray:
    """Sum of summand characters as a dense array over exponents ``-n..n``."""
    buf = np.zeros(2 * n + 1, dtype=object if n > 10**6 else np.int64)
    for J in summands:
        lo, c = summand_character(J).dense()
        buf[lo + n : lo + n + len(c)] += c
    return buf


def check_products(primes, max_weight: int) -> tuple[VerifyReport, VerifyReport]:
    """Character conservation over ``0 <= s <= r <= max_weight`` and, on the
    same sweep, soundness of every tilting classification."""
    cons, tilt = VerifyReport(), VerifyReport()
    for p in primes:
        for r in range(max_weight + 1):
            ch_r = simple_character(r, p)
            for s in range(r + 1):
                dec = decompose(r, s, p)
                for J in dec.summands:
                    c = classify_summand(J)
                    if c.is_tilting:
                        good = summand_character(J) == tilting_character(c.weight, p) and _tilting_ok(c.weight, p)
                        tilt.record((p, r, s, J.u), None if good else f"T({c.weight}) mismatch")
                lo, want = (ch_r * simple_character(s, p)).dense()
                got = _dense_total(dec.summands, r + s)
                ok = lo == -(r + s) and np.array_equal(got, want)
                cons.record((p, r, s), None if ok else "character sum differs")
    return cons, tilt


def check_indecomposability(primes, max_weight: int) -> VerifyReport:
    rep = VerifyReport()
    for p in primes:
        for r in range(max_weight + 1):
            for s in range(max_weight + 1):
                n = len(decompose(r, s, p))
                ok = is_indecomposable_product(r, s, p) == (n == 1) and (p != 2 or n == 1)
                rep.record((p, r, s), None if ok else f"{n} summands")
    return rep


def check_factorizations(primes, max_u: int) -> tuple[VerifyReport, list[dict]]:
    """Enumeration against the exhaustive scan.  Also returns one row per
    factorizable ``u`` comparing the closed-form count readings."""
    rep = VerifyReport()
    rows = []
    for p in primes:
        for u in range(max_u + 1):
            got = enumerate_tilting_factorizations(u, p)
            want = scan_tilting_factorizations(u, p)
            ok = got == want and bool(got) == is_factorizable(u, p)
            rep.record((p, u), None if ok else str(sorted(got)), sorted(want))
            if got:
                row = {"p": p, "u": u, "digits": admissible_expansion(u, p),
                       "unordered": len(got), "ordered": ordered_count(got)}
                row.update(factorization_count_readings(u, p))
                rows.append(row)
    return rep, rows


def count_formula_summary(rows) -> dict:
    """How often each closed-form reading agrees with the enumeration."""
    out = Counter()
    for row in rows:
        if row["p"] > 2:
            if row["formula"] is None:
                out["odd_degenerate"] += 1
                continue
            out["odd_total"] += 1
            out["odd_match"] += row["formula"] == row["unordered"]
        else:
            out["p2_total"] += 1
            for key in ("t_all", "t_below_top"):
                out[f"p2_{key}_vs_unordered"] += row[key] == row["unordered"]
                out[f"p2_{key}_vs_ordered"] += row[key] == row["ordered"]
    return dict(out)


def check_structure(primes, max_exp: int = 4) -> VerifyReport:
    rep = VerifyReport()
    for p in primes:
        for r in range(p**max_exp + 1):
            _structure_case(rep, r, p)
    return rep


def _structure_case(rep: VerifyReport, r: int, p: int) -> None:
    case = ("L1", p, r)
    try:
        M = tensor_with_natural(r, p)
    except (AssertionError, NotAModuleCharacter) as exc:
        rep.record(case, f"raised {exc}")
        return
    prod = simple_character(r, p) * weyl_character(1)
    problems = []
    if M.factors() != peel_into_simples(prod, p):
        problems.append("factor multiset")
    if M.character != prod:
        problems.append("character")
    if M.case in (UNISERIAL, BISERIAL):
        (J,) = decompose(r, 1, p).summands
        if M.diagram.socle != (J.socle_weight,):
            problems.append("socle")
        if not M.diagram.is_self_dual():
            problems.append("self-duality")
        if M.residue.a == 1 and len(M.family_weights) != M.residue.t + 1:
            problems.append("r_(t+1) present for a=1")
        base, k, level = shift_decomposition(M)
        if k != M.shift_k or base.shift_k != 0:
            problems.append("shift")
        if k == 0:
            r0, r1 = M.family_weights[0], M.family_weights[1]
            if M.character != tilting_character(r + 1, p):
                problems.append("tilting character")
            if peel_into_weyls(M.character) != Counter({r0: 1, r1: 1}):
                problems.append("good filtration")
            for w in (r + 1, r - 1):
                if weyl_series_in_family(w, p)[0] != w:
                    problems.append(f"∇({w}) socle")
    rep.record(case, "; ".join(problems) or None)
    if p >= 3:
        case = ("L2", p, r)
        M2 = tensor_with_L2(r, p)
        total = None
        for J in decompose(r, 2, p).summands:
            total = summand_character(J) if total is None else total + summand_character(J)
        ok = M2.character == total
        rep.record(case, None if ok else "L(2) component characters")


def check_weyl_simplicity(primes, tmax: int = 4) -> VerifyReport:
    rep = VerifyReport()
    for p in primes:
        for t in range(tmax + 1):
            for a in range(1, p):
                w = a * p**t - 1
                got = peel_into_simples(weyl_character(w), p)
                ok = got == Counter({w: 1}) and is_simple_weyl_weight(w, p)
                rep.record((p, a, t), None if ok else str(dict(got)))
    return rep


def check_tilting_summands(primes, max_u: int) -> VerifyReport:
    rep = VerifyReport()
    for p in primes:
        for u in range(max_u + 1):
            r, s = construct_tensor_containing(u, p)
            ok = any(
                classify_summand(J).is_tilting and classify_summand(J).weight == u
                for J in decompose(r, s, p).summands
            )
            rep.record((p, u), None if ok else f"no T({u}) in L({r})⊗L({s})")
    return rep


def check_peel_roundtrip(primes, max_weight: int, seed: int, trials: int = 50) -> VerifyReport:
    rng = random.Random(seed)
    rep = VerifyReport()
    for p in primes:
        for _ in range(trials):
            fac = Counter({rng.randint(0, max_weight): rng.randint(1, 3) for _ in range(rng.randint(1, 5))})
            got = peel_into_simples(character_from_factors(fac, p), p)
            rep.record((p, dict(sorted(fac.items()))), None if got == fac else str(dict(got)))
    return rep


def run_sweep(primes, max_weight: int, seed: int = 0) -> dict[str, VerifyReport]:
    """All suites at the given bound.  The structure suite covers ``r <= max_weight``."""
    cons, tilt = check_products(primes, max_weight)
    fact, _ = check_factorizations([p for p in primes if p <= 5] or primes, max_weight)
    structure = VerifyReport()
    for p in primes:
        for r in range(max_weight + 1):
            _structure_case(structure, r, p)
    return {
        "character_conservation": cons,
        "tilting_soundness": tilt,
        "indecomposability": check_indecomposability(primes, max_weight),
        "factorization_scan": fact,
        "structure": structure,
        "peel_roundtrip": check_peel_roundtrip(primes, max_weight, seed),
    }
