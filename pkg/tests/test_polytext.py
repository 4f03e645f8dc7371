from fractions import Fraction

import pytest
from hypothesis import given

from qint.polyring import Poly, ZERO
from qint.polytext import ParseError, parse_poly, render_poly
from qint.quantum import quantum_int

from conftest import polys


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("1 + q^2", [1, 0, 1]),
        ("0", []),
        ("q - q", []),
        ("1 - 2/3 q^2 + q^5", [1, 0, Fraction(-2, 3), 0, 0, 1]),
        ("-q", [0, -1]),
        ("3*q - q^2", [0, 3, -1]),
        ("  2 / 4 q ", [0, Fraction(1, 2)]),
        ("q^0 + q + q", [1, 2]),
        ("+5", [5]),
    ],
)
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == tuple(Fraction(c) for c in coeffs)


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("1 +", 3),
        ("x", 0),
        ("1 + + q", 4),
        ("q^", 2),
        ("q^1/2", 2),
        ("2 3", 2),
        ("1/0", 0),
        ("2*", 2),
    ],
)
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == position


def test_render_examples():
    assert render_poly(quantum_int(3), "latex") == "1 + q + q^{2}"
    assert render_poly(ZERO, "plain") == "0"
    assert render_poly(ZERO, "latex") == "0"
    assert render_poly(Poly([0, 0, Fraction(2, 3)]), "json") == '{"coeffs":["0","0","2/3"]}'
    assert render_poly(Poly([1, 0, Fraction(-2, 3), 0, 0, 1])) == "1 - 2/3 q^2 + q^5"
    assert render_poly(Poly([-1, -1]), "latex") == "-1 - q"
    assert render_poly(Poly([0, Fraction(-1, 2)]), "latex") == r"-\frac{1}{2} q"


@given(polys(8, 50, 12))
def test_round_trip_plain(p):
    assert parse_poly(render_poly(p, "plain")) == p


def test_render_rejects_format():
    with pytest.raises(ValueError):
        render_poly(ZERO, "html")
