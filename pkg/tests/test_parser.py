from fractions import Fraction

import pytest
from hypothesis import given

from strategies import hyperreals
from nondedekind.errors import ParseError
from nondedekind.hyperreal import EPS, Hyperreal, Poly, parse_hyperreal

e = EPS


def test_ratio_literal():
    h = parse_hyperreal("(1+2*e)/(e^2)")
    assert h.num == Poly([1, 2]) and h.den == Poly([0, 0, 1])
    assert str(h) == "(1 + 2*e) / (e^2)"


def test_reduction():
    assert parse_hyperreal("e/e") == 1


def test_common_denominator():
    # 1/(1+e) + 1/(1-e) = ((1-e) + (1+e)) / (1 - e^2)
    expected = Hyperreal(Poly([2]), Poly([1, 0, -1]))
    assert parse_hyperreal("1/(1+e) + 1/(1-e)") == expected


@pytest.mark.parametrize(
    "text,value",
    [
        ("-e^2", -(e * e)),
        ("2^-1", Fraction(1, 2)),
        ("-3/4", Fraction(-3, 4)),
        ("3/2^2", Fraction(9, 4)),  # p/q is one literal
        ("1 - 2 - 3", Fraction(-4)),
        ("2*e*e / e", 2 * e),
        ("  ( 1 )  ", Fraction(1)),
        ("--e", e),
        ("std((2+e)/(1+e))", Fraction(2)),
    ],
)
def test_values(text, value):
    assert parse_hyperreal(text) == value


@pytest.mark.parametrize(
    "text,pos",
    [("1 +", 3), ("(1", 2), ("e^e", 2), ("1 $ 2", 2), ("x", 0), ("1 2", 2), ("", 0)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_hyperreal(text)
    assert info.value.position == pos


@pytest.mark.parametrize("text", ["1/0", "1/(e-e)", "0^-1"])
def test_division_by_zero(text):
    with pytest.raises(ZeroDivisionError):
        parse_hyperreal(text)


def test_std_of_unbounded():
    from nondedekind.errors import NoStandardPartError

    with pytest.raises(NoStandardPartError):
        parse_hyperreal("std(1/e)")


@given(hyperreals())
def test_printed_form_reparses(x):
    assert parse_hyperreal(str(x)) == x


def test_pure_rational_prints_as_fraction():
    assert str(parse_hyperreal("6/4")) == "3/2"
    assert str(parse_hyperreal("e - e + 2")) == "2"
