"""Golden corpus of worked examples and its verifier."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .classify import classify_summand
from .decompose import SummandProfile, decompose
from .diagram import Diagram
from .structure import summand_diagram

DESCRIPTOR_KEYS = {"T", "L", "series", "diagram", "layers_only"}


class CorpusFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class CorpusEntry:
    p: int
    r: int
    s: int
    expected: tuple[dict, ...]
    source: str = ""

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "s": self.s, "source": self.source,
                "expected": list(self.expected)}


@dataclass
class VerifyReport:
    total: int = 0
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, entry, computed: Optional[str] = None, expected=None) -> None:
        self.total += 1
        if computed is None:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append((entry, computed, expected))

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        return VerifyReport(self.total + other.total, self.passed + other.passed,
                            self.failed + other.failed, self.failures + other.failures)

    def to_json(self) -> dict:
        return {
            "total": self.total, "passed": self.passed, "failed": self.failed,
            "failures": [{"entry": e.to_json() if hasattr(e, "to_json") else e,
                          "computed": c, "expected": x} for e, c, x in self.failures],
        }


def _parse_entry(obj, lineno: int) -> CorpusEntry:
    try:
        p, r, s = int(obj["p"]), int(obj["r"]), int(obj["s"])
        expected = obj["expected"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CorpusFormatError(lineno, f"missing or bad field ({exc})") from None
    if not isinstance(expected, list) or not expected:
        raise CorpusFormatError(lineno, "'expected' must be a nonempty list")
    for d in expected:
        if not isinstance(d, dict) or not d or set(d) - DESCRIPTOR_KEYS:
            raise CorpusFormatError(lineno, f"bad descriptor {d!r}")
    return CorpusEntry(p, r, s, tuple(expected), str(obj.get("source", "")))


def load_corpus(path) -> list[CorpusEntry]:
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(lineno, f"invalid JSON ({exc.msg})") from None
            entries.append(_parse_entry(obj, lineno))
    return entries


def shipped_corpus_paths() -> list[Path]:
    base = resources.files("sl2tensor") / "data"
    return [Path(str(base / f"corpus-p{p}.jsonl")) for p in (2, 3)]


def descriptor_matches(desc: dict, J: SummandProfile) -> bool:
    cls = classify_summand(J)
    if "T" in desc and not (cls.is_tilting and cls.weight == desc["T"]):
        return False
    if "L" in desc and not (cls.is_simple and cls.weight == desc["L"]):
        return False
    if "series" in desc or "diagram" in desc:
        d = summand_diagram(J)
        if d is None:
            return False
        if "series" in desc and d.series != tuple(desc["series"]):
            return False
        if "diagram" in desc:
            want = Diagram.from_json(desc["diagram"])
            if desc.get("layers_only"):
                if not d.same_layers(want):
                    return False
            elif not d.is_isomorphic(want):
                return False
    return True


def _assign(descs, summands) -> bool:
    if not descs:
        return not summands
    first, rest = descs[0], descs[1:]
    for i, J in enumerate(summands):
        if descriptor_matches(first, J) and _assign(rest, summands[:i] + summands[i + 1:]):
            return True
    return False


def render_summand(J: SummandProfile) -> str:
    cls = classify_summand(J)
    if cls.kind == "neither":
        digits = ",".join(map(str, J.u))
        return f"J({digits}; socle={J.socle_weight})"
    if cls.kind == "simple_tilting":
        return f"L({cls.weight})" if cls.weight <= J.p - 1 else f"T({cls.weight})"
    return f"T({cls.weight})" if cls.is_tilting else f"L({cls.weight})"


def render_decomposition(dec) -> str:
    return " ⊕ ".join(render_summand(J) for J in dec.summands)


def verify_entry(entry: CorpusEntry) -> Optional[str]:
    """``None`` if the entry reproduces, else a description of what was computed."""
    dec = decompose(entry.r, entry.s, entry.p)
    if len(dec) == len(entry.expected) and _assign(list(entry.expected), list(dec.summands)):
        return None
    parts = []
    for J in dec.summands:
        d = summand_diagram(J)
        parts.append(render_summand(J) + ("" if d is None else " " + d.render()))
    return " ⊕ ".join(parts)


def verify_corpus(entries) -> VerifyReport:
    rep = VerifyReport()
    for e in entries:
        rep.record(e, verify_entry(e), list(e.expected))
    return rep
