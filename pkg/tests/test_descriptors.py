import json
from fractions import Fraction as F

import pytest

from secantdeg import descriptors
from secantdeg.descriptors import IncompleteTable, ParseError, ZeroDegree


def test_curve():
    t = descriptors.curve(6, 0)
    assert t.entries == {(0, 0): 6, (0, 1): -2} and t.ample5 == "yes"
    t = descriptors.curve(7, 1)
    assert t.entries == {(0, 0): 7, (0, 1): 0} and t.ample5 == "yes"
    assert descriptors.curve(4, 0).ample5 == "unknown"


def test_surface():
    t = descriptors.surface(25, -15, 9, 3)
    assert t.entries == {(0, 0): 25, (0, 1): -15, (1, 1): 9, (0, 2): 6}
    assert descriptors.surface(9, -9, 9, 3)[(0, 2)] == 6
    assert t[(1, 0)] == t[(0, 1)]
    assert t.ample5 == "unknown"


def test_veronese_examples():
    assert descriptors.veronese(2, 5).entries == descriptors.surface(25, -15, 9, 3).entries
    t = descriptors.veronese(2, 3)
    assert t.entries == {(0, 0): 9, (0, 1): -9, (1, 1): 9, (0, 2): 6}
    assert t.ample5 == "no"
    assert descriptors.veronese(2, 5).ample5 == "yes"


@pytest.mark.parametrize("d", range(1, 21))
def test_veronese_line_is_rational_curve(d):
    assert descriptors.veronese(1, d).entries == descriptors.curve(d, 0).entries


@pytest.mark.parametrize("t", range(1, 13))
def test_veronese_plane(t):
    assert descriptors.veronese(2, t).entries == descriptors.surface(t * t, -3 * t, 9, 3).entries


def test_veronese_p3():
    # s(T_P3) = 1 - 4H + 10H^2 - 20H^3
    t = descriptors.veronese(3, 2)
    assert t.degree == 8
    assert t[(0, 3)] == -20 and t[(1, 2)] == -40 and t[(1, 1)] == 32


SEXTIC = '{"n":1, "name":"rational sextic", "table":{"0,0":"6", "0,1":"-2"}}'


def test_from_text_sextic():
    t = descriptors.from_text(SEXTIC)
    assert t.entries == descriptors.curve(6, 0).entries
    assert t.name == "rational sextic"


@pytest.mark.parametrize("table", [
    descriptors.curve(6, 0), descriptors.curve(F(9, 2), 3), descriptors.surface(25, -15, 9, 3),
    descriptors.veronese(2, 3), descriptors.veronese(4, 5),
])
def test_round_trip(table):
    assert descriptors.from_text(descriptors.to_text(table)) == table


def test_missing_key():
    doc = {"n": 2, "table": {"0,0": "1", "0,1": "2", "0,2": "3"}}
    with pytest.raises(IncompleteTable):
        descriptors.from_text(json.dumps(doc))


def test_zero_degree():
    with pytest.raises(ZeroDegree):
        descriptors.from_text('{"n":1, "table":{"0,0":"0", "0,1":"-2"}}')


@pytest.mark.parametrize("doc", [
    "not json",
    "[1, 2]",
    '{"n": 0, "table": {}}',
    '{"n": 1}',
    '{"n":1, "table":{"0,0":"6", "1,0":"-2"}}',
    '{"n":1, "table":{"0,0":"6", "0,1":"-2", "1,1":"3"}}',
    '{"n":1, "table":{"0,0":"6", "0,1":"0.5"}}',
    '{"n":1, "table":{"0,0":"6", "0,1":"1/0"}}',
    '{"n":1, "table":{"0,0":"6", "a,1":"1"}}',
    '{"n":1, "ample5":"maybe", "table":{"0,0":"6", "0,1":"1"}}',
])
def test_parse_errors(doc):
    with pytest.raises(ParseError):
        descriptors.from_text(doc)
