"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .chars import (
    NotAModuleCharacter,
    peel_into_simples,
    peel_into_weyls,
    simple_character,
    tilting_character,
    weyl_character,
)
from .classify import (
    enumerate_tilting_factorizations,
    factorization_count_readings,
    ordered_count,
)
from .corpus import (
    CorpusFormatError,
    load_corpus,
    render_decomposition,
    shipped_corpus_paths,
    verify_corpus,
)
from .decompose import decompose
from .padic import admissible_expansion, check_prime, check_weight
from .serialize import decomposition_to_json
from .structure import InvariantViolation, tensor_with_L2, tensor_with_natural
from .sweep import run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _twist_suffix(i: int) -> str:
    return "" if i == 0 else "^F" if i == 1 else f"^F^{i}"


def _char_text(ch) -> str:
    return " + ".join(f"{c}·q^{e}" if c != 1 else f"q^{e}" for e, c in ch.to_json()) or "0"


def cmd_decompose(args) -> tuple[str, int]:
    dec = decompose(args.r, args.s, args.p)
    if args.format == "json":
        return _dump(decomposition_to_json(dec)), EXIT_OK
    return render_decomposition(dec) + "\n", EXIT_OK


def cmd_structure(args) -> tuple[str, int]:
    if args.other == 2:
        if args.p == 2:
            raise UsageError("--other 2 needs p >= 3: at p = 2, L(2) is a twist of L(1); use 'decompose' instead")
        rep = tensor_with_L2(args.r, args.p)
    else:
        rep = tensor_with_natural(args.r, args.p)
    if args.format == "json":
        return _dump(rep.to_json()), EXIT_OK
    if args.format == "dot":
        if rep.diagram is not None:
            return rep.diagram.to_dot(f"L{args.r}_x_L{args.other}"), EXIT_OK
        out = []
        for n, c in enumerate(rep.components):
            d = c.report.diagram if c.report is not None else None
            if d is not None:
                out.append(d.to_dot(f"component{n}"))
        if not out:
            raise UsageError("no structure diagram for a semisimple result; use --format text")
        return "".join(out), EXIT_OK
    return rep.render() + "\n", EXIT_OK


def cmd_tilting(args) -> tuple[str, int]:
    u, p = args.u, args.p
    digits = admissible_expansion(u, p)
    if args.action == "expand":
        if args.format == "json":
            return _dump({"p": p, "u": u, "digits": list(digits)}), EXIT_OK
        parts = " ⊗ ".join(f"T({x}){_twist_suffix(i)}" for i, x in enumerate(digits))
        return f"T({u}) = {parts}\n", EXIT_OK
    if args.action == "char":
        ch = tilting_character(u, p)
        weyls = peel_into_weyls(ch)
        if args.format == "json":
            return _dump({"p": p, "u": u, "character": ch.to_json(), "dimension": ch.dimension(),
                          "weyl_multiplicities": [[w, n] for w, n in sorted(weyls.items(), reverse=True)],
                          "factors": [[w, n] for w, n in sorted(peel_into_simples(ch, p).items(), reverse=True)]}), EXIT_OK
        good = " + ".join(f"∇({w})" if n == 1 else f"{n}·∇({w})" for w, n in sorted(weyls.items(), reverse=True))
        return f"ch T({u}) = {good}  (dim {ch.dimension()})\n", EXIT_OK
    pairs = sorted(enumerate_tilting_factorizations(u, p), reverse=True)
    readings = factorization_count_readings(u, p)
    if args.format == "json":
        return _dump({"p": p, "u": u, "pairs": [list(x) for x in pairs], "unordered": len(pairs),
                      "ordered": ordered_count(set(pairs)), "readings": readings}), EXIT_OK
    if not pairs:
        return f"T({u}) is not L(r) ⊗ L(s) for any r, s\n", EXIT_OK
    lines = [f"T({u}) ≅ L({r}) ⊗ L({s})" for r, s in pairs]
    lines.append(f"{len(pairs)} unordered, {ordered_count(set(pairs))} ordered")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_char(args) -> tuple[str, int]:
    ch = {"simple": lambda: simple_character(args.r, args.p),
          "weyl": lambda: weyl_character(args.r),
          "tilting": lambda: tilting_character(args.r, args.p)}[args.kind]()
    factors = peel_into_simples(ch, args.p)
    if args.format == "json":
        return _dump({"p": args.p, "kind": args.kind, "r": args.r, "character": ch.to_json(),
                      "dimension": ch.dimension(),
                      "factors": [[w, n] for w, n in sorted(factors.items(), reverse=True)]}), EXIT_OK
    fac = ", ".join(f"L({w})" + (f"^{n}" if n > 1 else "") for w, n in sorted(factors.items(), reverse=True))
    return f"{_char_text(ch)}\ndim {ch.dimension()}; factors {fac}\n", EXIT_OK


def cmd_verify_corpus(args) -> tuple[str, int]:
    paths = [Path(x) for x in args.paths] or shipped_corpus_paths()
    lines, code, summary = [], EXIT_OK, []
    for path in paths:
        try:
            entries = load_corpus(path)
        except CorpusFormatError as exc:
            raise UsageError(f"{path}: {exc}") from None
        except OSError as exc:
            raise UsageError(str(exc)) from None
        rep = verify_corpus(entries)
        summary.append({"path": str(path), **rep.to_json()})
        lines.append(f"{path.name}: {rep.passed}/{rep.total} passed")
        for entry, computed, expected in rep.failures:
            lines.append(f"  FAIL {entry.source or (entry.p, entry.r, entry.s)}: computed {computed}; expected {expected}")
        if not rep.ok:
            code = EXIT_FAIL
    if args.format == "json":
        return _dump(summary), code
    return "\n".join(lines) + "\n", code


def cmd_sweep(args) -> tuple[str, int]:
    try:
        primes = sorted({check_prime(int(x)) for x in args.primes.split(",") if x.strip()})
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.max_weight < 1:
        raise UsageError("--max-weight must be at least 1")
    start = time.perf_counter()
    reports = run_sweep(primes, args.max_weight, args.seed)
    elapsed = time.perf_counter() - start
    code = EXIT_OK if all(r.ok for r in reports.values()) else EXIT_FAIL
    if args.format == "json":
        body = {name: {"total": r.total, "passed": r.passed, "failed": r.failed,
                       "failures": [repr(f[0]) for f in r.failures[:20]]}
                for name, r in sorted(reports.items())}
        return _dump({"primes": primes, "max_weight": args.max_weight, "seed": args.seed,
                      "suites": body}), code
    lines = [f"{name}: {r.passed}/{r.total} passed" for name, r in sorted(reports.items())]
    for name, r in sorted(reports.items()):
        lines += [f"  FAIL {name} {f[0]!r}: {f[1]}" for f in r.failures[:20]]
    lines.append(f"wall clock {elapsed:.2f}s")
    return "\n".join(lines) + "\n", code


def _weight(text: str) -> int:
    try:
        return check_weight(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a nonnegative integer: {text!r}") from None


def _prime(text: str) -> int:
    try:
        return check_prime(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a prime: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", help="write output to this file (or directory) instead of stdout")
    with_p = argparse.ArgumentParser(add_help=False)
    with_p.add_argument("--p", type=_prime, required=True, help="the characteristic")

    ap = argparse.ArgumentParser(prog="sl2tensor", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", parents=[common, with_p], help="summands of L(r) ⊗ L(s)")
    d.add_argument("r", type=_weight)
    d.add_argument("s", type=_weight)
    d.set_defaults(func=cmd_decompose)

    st = sub.add_parser("structure", parents=[with_p], help="structure of L(r) ⊗ L(1) or L(r) ⊗ L(2)")
    st.add_argument("r", type=_weight)
    st.add_argument("--other", type=int, choices=[1, 2], default=1)
    st.add_argument("--format", choices=["text", "json", "dot"], default="text")
    st.add_argument("--out")
    st.set_defaults(func=cmd_structure)

    t = sub.add_parser("tilting", parents=[common, with_p], help="tilting module T(u)")
    t.add_argument("action", choices=["expand", "char", "factorize"])
    t.add_argument("u", type=_weight)
    t.set_defaults(func=cmd_tilting)

    c = sub.add_parser("char", parents=[common, with_p], help="formal character and composition factors")
    c.add_argument("r", type=_weight)
    c.add_argument("--kind", choices=["simple", "weyl", "tilting"], default="simple")
    c.set_defaults(func=cmd_char)

    v = sub.add_parser("verify-corpus", parents=[common], help="check a JSONL corpus (default: shipped)")
    v.add_argument("paths", nargs="*")
    v.set_defaults(func=cmd_verify_corpus)

    sw = sub.add_parser("sweep", parents=[common], help="run the property sweeps")
    sw.add_argument("--primes", default="2,3,5,7")
    sw.add_argument("--max-weight", type=int, default=200)
    sw.add_argument("--seed", type=int, default=0)
    sw.set_defaults(func=cmd_sweep)
    return ap


def _write(text: str, out) -> None:
    if not out:
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.is_dir():
        path = path / "output.txt"
    path.write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"sl2tensor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAModuleCharacter, InvariantViolation) as exc:
        print(f"sl2tensor: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _write(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
