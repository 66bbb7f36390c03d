import pytest

from sl2tensor.chars import peel_into_simples, simple_character, tilting_character
from sl2tensor.classify import classify_summand
from sl2tensor.decompose import (
    SummandProfile, decompose, socle_weight, summand_character, summand_count, summand_factors,
)
from sl2tensor.padic import padic_digits


def test_examples():
    dec = decompose(8, 8, 3)
    assert dec.highest_weights == [16, 14, 10, 8]
    assert all(classify_summand(J).is_tilting for J in dec)
    (J,) = decompose(7, 7, 2).summands
    assert J.u == (2, 2, 2) and J.highest_weight == 14
    (J,) = decompose(13, 0, 5).summands
    assert classify_summand(J).is_simple and J.highest_weight == 13


def test_summand_character_examples():
    from sl2tensor.chars import weyl_character
    assert summand_character(SummandProfile(3, (2,))) == weyl_character(2)
    assert summand_character(SummandProfile(3, (4, 2))) == tilting_character(10, 3)
    assert summand_character(SummandProfile(2, (2, 1))).dimension() == 8


def test_factor_examples():
    assert summand_factors(SummandProfile(2, (2, 1))) == {2: 2, 0: 2, 4: 1}
    assert summand_factors(SummandProfile(3, (3, 1))) == {4: 2, 6: 1, 0: 1}
    assert summand_factors(SummandProfile(7, (5,))) == {5: 1}


def test_socle_examples():
    assert socle_weight(SummandProfile(2, (2, 1))) == 2
    assert socle_weight(SummandProfile(3, (3, 1))) == 4
    assert socle_weight(SummandProfile(5, (3,))) == 3


def test_profile_validation():
    with pytest.raises(ValueError):
        SummandProfile(3, (5,))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_conservation_small(p):
    for r in range(60):
        for s in range(r + 1):
            dec = decompose(r, s, p)
            total = sum((summand_character(J) for J in dec.summands[1:]), summand_character(dec.summands[0]))
            assert total == simple_character(r, p) * simple_character(s, p)
            assert len(dec) == summand_count(r, s, p)
            dims = 1
            for x in padic_digits(r, p) + padic_digits(s, p):
                dims *= x + 1
            assert total.dimension() == dims
            assert len({J.u for J in dec}) == len(dec)
            if p == 2:
                assert len(dec) == 1
            for J in dec:
                f = summand_factors(J)
                assert f[J.socle_weight] >= 1 and J.socle_weight <= J.highest_weight
                c = classify_summand(J)
                if c.is_tilting:
                    assert f == peel_into_simples(tilting_character(c.weight, p), p)


def test_ordering_descending():
    for p in (3, 5, 7):
        for r in range(40):
            w = decompose(r, 17, p).highest_weights
            assert w == sorted(w, reverse=True) and len(set(w)) == len(w)
