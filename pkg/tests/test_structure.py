from collections import Counter

import pytest

from sl2tensor.chars import peel_into_simples, peel_into_weyls, simple_character, weyl_character
from sl2tensor.decompose import decompose, summand_character
from sl2tensor.padic import ResidueData
from sl2tensor.structure import (
    BISERIAL, SIMPLE, SPLIT_SUM, UNISERIAL, StructureReport, ext1_nonzero, is_simple_weyl_weight,
    shift_decomposition, summand_diagram, tensor_with_L2, tensor_with_natural, weyl_series_in_family,
)


def test_natural_examples():
    m = tensor_with_natural(3, 2)
    assert m.case == UNISERIAL and m.series == (2, 0, 4, 0, 2) and m.base_tilting == 4 and m.shift_k == 0
    m = tensor_with_natural(5, 3)
    assert m.case == BISERIAL
    assert m.diagram.layers == ((4,), (6, 0), (4,))
    assert m.base_tilting == 6
    m = tensor_with_natural(6, 3)
    assert m.case == SIMPLE and m.weight == 7
    m = tensor_with_natural(9, 2)
    assert m.series == (8, 10, 8) and m.residue == ResidueData(1, 1, 2) and m.shift_k == 2
    m = tensor_with_natural(4, 3)
    assert m.case == SPLIT_SUM and [c.weight for c in m.components] == [5, 3]


def test_family_weights():
    m = tensor_with_natural(3, 2)
    assert m.family_weights == (4, 2, 0)
    m = tensor_with_natural(5, 3)
    assert m.family_weights == (6, 4, 0)


def test_longer_biserial_chain():
    # r = 2*9 - 1 at p = 3: t = 2, a = 2, so chains of length two around the diamond
    m = tensor_with_natural(17, 3)
    assert m.diagram.layers == ((16,), (12,), (18, 0), (12,), (16,))
    assert len(m.diagram.edges) == 6 and m.diagram.is_self_dual()


def test_L2_examples():
    m = tensor_with_L2(5, 3)
    assert m.render() == "T(7) ⊕ L(5)" and m.residue == ResidueData(1, 2, 0)
    m = tensor_with_L2(4, 3)
    assert m.case == BISERIAL and m.base_tilting == 6
    m = tensor_with_L2(7, 5)
    assert m.case == SPLIT_SUM and [c.weight for c in m.components] == [9, 7, 5]
    # the same three simples come out of the general decomposition
    assert sorted(J.highest_weight for J in decompose(7, 2, 5)) == [5, 7, 9]
    with pytest.raises(ValueError):
        tensor_with_L2(3, 2)


def test_L2_minus_two_case():
    m = tensor_with_L2(8, 5)  # 8 ≡ -2 mod 5
    tt, simple = m.components
    assert (tt.base, tt.k, tt.level) == (10, 0, 2) and simple.weight == 6
    assert tt.report == tensor_with_natural(9, 5)


def test_simple_weyl_examples():
    assert is_simple_weyl_weight(8, 3)
    assert not is_simple_weyl_weight(4, 3)
    assert all(is_simple_weyl_weight(r, 7) for r in range(7))


def test_weyl_series_examples():
    assert weyl_series_in_family(6, 3) == (6, 4)
    assert weyl_series_in_family(4, 2) == (4, 0, 2)
    assert weyl_series_in_family(1, 3) == (1,)
    with pytest.raises(ValueError):
        weyl_series_in_family(11, 2)


def test_shift_examples():
    base, k, level = shift_decomposition(tensor_with_natural(9, 2))
    assert base.series == (0, 2, 0) and k * 2**level == 8
    base, k, level = shift_decomposition(tensor_with_natural(5, 3))
    assert base == tensor_with_natural(5, 3) and k == 0
    m = tensor_with_natural(14, 3)
    base, k, level = shift_decomposition(m)
    assert base.r == 5 and (k, level) == (1, 2)
    assert m.diagram.layers == ((13,), (15, 9), (13,))
    with pytest.raises(ValueError):
        shift_decomposition(tensor_with_natural(4, 3))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_weyl_series_family(p):
    for t in range(1, 4):
        for a in range(1, p):
            r = a * p**t - 1
            for w in (r + 1, r - 1):
                s = weyl_series_in_family(w, p)
                assert s[0] == w
                assert Counter(s) == peel_into_simples(weyl_character(w), p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_natural_oracle(p):
    for r in range(min(p**4, 400)):
        m = tensor_with_natural(r, p)
        assert m.character == simple_character(r, p) * weyl_character(1)
        if m.case in (UNISERIAL, BISERIAL):
            assert m.diagram.is_self_dual()
            (J,) = decompose(r, 1, p).summands
            assert m.diagram.socle == (J.socle_weight,)
            if m.shift_k == 0:
                assert peel_into_weyls(m.character) == Counter(m.family_weights[:2])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_L2_oracle(p):
    for r in range(min(p**4, 400)):
        m = tensor_with_L2(r, p)
        total = sum((summand_character(J) for J in decompose(r, 2, p)), weyl_character(0) * 0)
        assert m.character == total


def test_json_round_trip():
    for p, r, other in [(2, 3, 1), (3, 5, 1), (3, 14, 1), (3, 5, 2), (5, 8, 2), (5, 7, 2), (7, 0, 1)]:
        m = tensor_with_natural(r, p) if other == 1 else tensor_with_L2(r, p)
        assert StructureReport.from_json(m.to_json()) == m


def test_ext1_spot_checks():
    assert ext1_nonzero(0, 2, 2) and ext1_nonzero(2, 0, 2)
    assert not ext1_nonzero(2, 6, 2)
    assert not ext1_nonzero(4, 12, 2)
    assert ext1_nonzero(8, 12, 2)
    assert not ext1_nonzero(6, 14, 2)
    assert ext1_nonzero(2, 10, 2)
    assert not ext1_nonzero(4, 16, 3)
    assert ext1_nonzero(4, 10, 3)
    assert not ext1_nonzero(6, 12, 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ext1_symmetric(p):
    for a in range(60):
        for b in range(60):
            assert ext1_nonzero(a, b, p) == ext1_nonzero(b, a, p)
            if ext1_nonzero(a, b, p):
                assert (a - b) % 2 == 0 and a != b


@pytest.mark.parametrize("p", [2, 3])
def test_summand_diagrams_validate(p):
    # whenever a diagram is produced it is consistent with the oracle
    seen = 0
    for r in range(30):
        for s in range(r + 1):
            for J in decompose(r, s, p):
                d = summand_diagram(J)
                if d is None:
                    continue
                seen += 1
                assert d.factors() == J.factors
                assert d.socle == d.head == (J.socle_weight,)
    assert seen > 100
