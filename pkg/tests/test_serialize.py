"""Rational parsing/formatting and matrix round trips."""

from fractions import Fraction as F

import pytest

from involute.errors import OutOfRange
from involute.serialize import (
    format_rational,
    matrix_from_csv,
    matrix_to_csv,
    matrix_to_pretty,
    parse_rational,
    parse_rational_list,
)


def test_rational_round_trip():
    for text, value in (("3/4", F(3, 4)), ("-7", F(-7)), ("0.25", F(1, 4)), ("2", F(2))):
        assert parse_rational(text) == value
        assert parse_rational(format_rational(value)) == value
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-1, 2)) == "-1/2"


def test_parse_errors():
    with pytest.raises(OutOfRange):
        parse_rational("eleven")
    with pytest.raises(OutOfRange):
        parse_rational("1/0")
    with pytest.raises(OutOfRange):
        parse_rational_list(" , ,")


def test_parse_rational_list():
    assert parse_rational_list("1,1/2, 0.5") == [F(1), F(1, 2), F(1, 2)]


def test_matrix_csv_round_trip():
    rows = [[F(0), F(1)], [F(1, 3), F(2, 3)]]
    text = matrix_to_csv(rows)
    assert text.splitlines()[0] == "c0,c1"
    assert matrix_from_csv(text) == rows
    assert matrix_from_csv("0,1\n1/3,2/3\n") == rows
    with pytest.raises(OutOfRange):
        matrix_from_csv("1,2\n3\n")


def test_pretty_structural_dots():
    rows = [[F(0), F(1)], [F(1, 2), F(1, 2)]]
    out = matrix_to_pretty(rows)
    assert "·" in out.splitlines()[0]
    # true zeros inside the support region print as 0, not as a dot
    rows = [[F(0), F(0), F(1)], [F(0), F(1), F(0)], [F(1), F(0), F(0)]]
    lines = matrix_to_pretty(rows).splitlines()
    assert lines[1].split() == ["·", "1", "0"]
