"""JSON forms of decompositions and classifications."""
from __future__ import annotations

from .classify import SummandClass, classify_summand
from .decompose import Decomposition, SummandProfile


def summand_to_json(J: SummandProfile) -> dict:
    c = classify_summand(J)
    return {
        "u": list(J.u),
        "highest_weight": J.highest_weight,
        "socle_weight": J.socle_weight,
        "class": {"kind": c.kind, "weight": c.weight},
        "factors": [[w, n] for w, n in sorted(J.factors.items(), reverse=True)],
    }


def decomposition_to_json(dec: Decomposition) -> dict:
    return {"p": dec.p, "r": dec.r, "s": dec.s, "summands": [summand_to_json(J) for J in dec.summands]}


def decomposition_from_json(obj) -> Decomposition:
    p = obj["p"]
    summands = tuple(SummandProfile(p, tuple(d["u"])) for d in obj["summands"])
    return Decomposition(p, obj["r"], obj["s"], summands)


def class_from_json(obj) -> SummandClass:
    return SummandClass(obj["kind"], obj.get("weight"))
