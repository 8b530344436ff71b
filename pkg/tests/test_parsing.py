from fractions import Fraction

import pytest

from errors import GeometryError, UsageError
from utils.parsing import parse_angle, parse_vectors

BITS = 256


def test_parse_vectors():
    assert parse_vectors("(1,0);(1,1)") == [(1, 0), (1, 1)]
    assert parse_vectors(" (1/2, -3) ") == [(Fraction(1, 2), -3)]


@pytest.mark.parametrize("text", ["1,0", "(1,0);(1)", "(a,0)", "(1,0", ""])
def test_parse_vectors_rejects(text):
    with pytest.raises(UsageError):
        parse_vectors(text)


@pytest.mark.parametrize("text, q", [
    ("pi/2", Fraction(1, 2)),
    ("π/3", Fraction(1, 3)),
    ("arccos(1/2)", Fraction(1, 3)),
    ("arccos(0)", Fraction(1, 2)),
    ("0", Fraction(0)),
])
def test_pi_rational_angles(text, q):
    assert parse_angle(text, BITS).pi_rational == q


def test_arccos_keeps_the_exact_cosine():
    a = parse_angle("arccos(-1/3)", BITS)
    assert a.pi_rational is None
    assert a.exact_cos == Fraction(-1, 3)


def test_plain_rational_angle():
    a = parse_angle("1", BITS)
    assert a.pi_rational is None and a.exact_cos is None
    assert a.value == 1


@pytest.mark.parametrize("text", ["1.5", "x", "sin(1)", "pi/"])
def test_parse_angle_rejects(text):
    with pytest.raises(UsageError):
        parse_angle(text, BITS)


def test_angle_outside_the_half_turn():
    with pytest.raises(GeometryError):
        parse_angle("2*pi", BITS)
    with pytest.raises(GeometryError):
        parse_angle("-1", BITS)
