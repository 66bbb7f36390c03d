import pytest

from sl2tensor.diagram import Diagram


def diamond():
    return Diagram.build([[4], [0, 6], [4]], [((0, 0), (1, 0)), ((0, 0), (1, 1)), ((1, 0), (2, 0)), ((1, 1), (2, 0))])


def test_build_sorts_layers():
    d = diamond()
    assert d.layers == ((4,), (6, 0), (4,))
    assert len(d.edges) == 4 and len(d) == 4


def test_chain():
    d = Diagram.chain([2, 0, 4, 0, 2])
    assert d.is_chain() and d.series == (2, 0, 4, 0, 2)
    assert d.render() == "[2,0,4,0,2]"
    assert diamond().series is None
    assert diamond().render() == "[4 | 6 0 | 4]"


def test_adjacent_layers_only():
    with pytest.raises(ValueError):
        Diagram.build([[1], [2], [3]], [((0, 0), (2, 0))])


def test_self_duality():
    assert diamond().is_self_dual()
    lop = Diagram.build([[0], [2, 4]], [((0, 0), (1, 0)), ((0, 0), (1, 1))])
    assert not lop.is_self_dual()


def test_isomorphism_ignores_position():
    a = Diagram.build([[0], [2, 2], [0]], [((0, 0), (1, 0)), ((1, 0), (2, 0)), ((1, 1), (2, 0))])
    b = Diagram.build([[0], [2, 2], [0]], [((0, 0), (1, 1)), ((1, 1), (2, 0)), ((1, 0), (2, 0))])
    assert a.is_isomorphic(b)
    c = Diagram.build([[0], [2, 2], [0]], [((0, 0), (1, 0)), ((1, 1), (2, 0)), ((1, 0), (2, 0))])
    assert not a.is_isomorphic(c) or a == c


def test_shift_and_json():
    d = diamond().shifted(9)
    assert d.layers == ((13,), (15, 9), (13,))
    assert Diagram.from_json(d.to_json()) == d


def test_dot():
    text = diamond().to_dot()
    assert text.startswith("graph M {")
    assert text.count("rank=same") == 3
    assert text.count(" -- ") == 4
    assert 'label="6"' in text
