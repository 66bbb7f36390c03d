import json

import pytest

from sl2tensor.cli import main
from sl2tensor.corpus import load_corpus, shipped_corpus_paths, verify_corpus
from sl2tensor.decompose import decompose
from sl2tensor.serialize import decomposition_from_json, decomposition_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,want", [
    (("decompose", "--p", "3", "8", "8"), "T(16) ⊕ T(14) ⊕ T(10) ⊕ T(8)"),
    (("decompose", "--p", "2", "7", "7"), "T(14)"),
    (("decompose", "--p", "5", "3", "0"), "L(3)"),
    (("decompose", "--p", "3", "6", "2"), "T(8)"),
    (("decompose", "--p", "3", "7", "4"), "T(11) ⊕ J(0,3; socle=3)"),
    (("structure", "--p", "2", "3"), "[2,0,4,0,2] = T(4)"),
    (("structure", "--p", "3", "5", "--other", "2"), "T(7) ⊕ L(5)"),
    (("structure", "--p", "2", "9"), "[8,10,8]"),
    (("tilting", "--p", "2", "expand", "14"), "T(14) = T(2) ⊗ T(2)^F ⊗ T(2)^F^2 ⊗ T(0)^F^3"),
])
def test_text_output(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


def test_dot_output(capsys):
    code, out, _ = run(capsys, "structure", "--p", "3", "5", "--format", "dot")
    assert code == 0
    assert out.count('label="4"') == 2 and out.count(" -- ") == 4


def test_usage_errors(capsys):
    assert run(capsys, "structure", "--p", "2", "3", "--other", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--p", "4", "1", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--p", "3", "-1", "1"])
    assert exc.value.code == 2
    assert run(capsys, "sweep", "--max-weight", "0")[0] == 2


def test_decompose_json_round_trip(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "3", "5", "5", "--format", "json")
    obj = json.loads(out)
    assert [s["highest_weight"] for s in obj["summands"]] == [10, 8, 4, 2]
    assert decomposition_from_json(obj) == decompose(5, 5, 3)
    for p, r, s in [(2, 7, 7), (5, 23, 11), (7, 100, 3)]:
        dec = decompose(r, s, p)
        assert decomposition_from_json(json.loads(json.dumps(decomposition_to_json(dec)))) == dec


def test_structure_json(capsys):
    code, out, _ = run(capsys, "structure", "--p", "3", "14", "--format", "json")
    obj = json.loads(out)
    assert obj["case"] == "biserial" and obj["residue"] == {"t": 1, "a": 2, "k": 1}


def test_char_and_tilting(capsys):
    code, out, _ = run(capsys, "char", "--p", "2", "3", "--format", "json")
    obj = json.loads(out)
    assert obj["character"] == [[3, 1], [1, 1], [-1, 1], [-3, 1]] and obj["dimension"] == 4
    code, out, _ = run(capsys, "tilting", "--p", "3", "factorize", "6", "--format", "json")
    assert json.loads(out)["pairs"] == [[5, 1], [4, 2]]
    code, out, _ = run(capsys, "tilting", "--p", "3", "factorize", "4")
    assert "not" in out


def test_determinism(capsys):
    a = run(capsys, "decompose", "--p", "5", "123", "77", "--format", "json")[1]
    b = run(capsys, "decompose", "--p", "5", "123", "77", "--format", "json")[1]
    assert a == b


def test_shipped_corpus(capsys):
    code, out, _ = run(capsys, "verify-corpus")
    assert code == 0
    assert "corpus-p2.jsonl: 49/49 passed" in out
    assert "corpus-p3.jsonl: 64/64 passed" in out


def test_corpus_covers_every_pair():
    # every product [r]⊗[s] shown in the worked examples, r + s up to 14 / 16
    for path, p, top in zip(shipped_corpus_paths(), (2, 3), (14, 16)):
        pairs = {(e.r, e.s) for e in load_corpus(path)}
        assert pairs == {(r, s) for r in range(1, top) for s in range(1, r + 1) if r + s <= top}


def test_wrong_entry_fails(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text(
        '{"p": 3, "r": 8, "s": 8, "expected": [{"T": 16}, {"T": 14}, {"T": 10}, {"T": 8}]}\n'
        '{"p": 3, "r": 4, "s": 4, "expected": [{"T": 8}]}\n'
    )
    code, out, _ = run(capsys, "verify-corpus", str(bad))
    assert code == 1 and "1/2 passed" in out and "FAIL" in out
    rep = verify_corpus(load_corpus(bad))
    assert rep.failed == 1 and rep.failures[0][0].r == 4


def test_malformed_corpus(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"p": 3, "r": 1, "s": 1, "expected": [{"T": 2}, {"T": 0}]}\n{oops\n')
    code, _, err = run(capsys, "verify-corpus", str(bad))
    assert code == 2 and "line 2" in err


def test_small_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--primes", "2", "--max-weight", "20", "--seed", "3")
    assert code == 0 and "wall clock" in out
    code, out, _ = run(capsys, "sweep", "--max-weight", "1")
    assert code == 0


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "o.txt"
    assert main(["decompose", "--p", "3", "2", "2", "--out", str(target)]) == 0
    # T(2) = L(2) at p = 3; restricted simple tilting summands print as L
    assert target.read_text().strip() == "T(4) ⊕ L(2)"
