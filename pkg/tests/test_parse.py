import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqcm.arith import Poly, Ring
from seqcm.parse import ParseError, format_polynomial, parse_polynomial

R = Ring(("X1", "X2", "X3", "X4"))


def test_two_term_polynomial():
    R3 = Ring(("X1", "X2", "X3"))
    f = parse_polynomial("X1*X3 + X2^2", R3)
    assert f.terms == {(1, 0, 1): 1, (0, 2, 0): 1}


def test_unary_minus_is_modular_negation():
    f = parse_polynomial("-X2", R)
    assert f.terms == {(0, 1, 0, 0): 32002}


def test_binomial_square():
    f = parse_polynomial("(X1+X4)^2", R)
    x1, x4 = R.var("X1"), R.var("X4")
    assert f == x1 * x1 + x1 * x4 * 2 + x4 * x4


def test_precedence():
    assert parse_polynomial("2*X1^2 + 1", R) == R.var(0) ** 2 * 2 + 1
    assert parse_polynomial("-X1^2", R) == -(R.var(0) ** 2)
    assert parse_polynomial("X1 - X2 - X3", R) == R.var(0) - R.var(1) - R.var(2)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("X1 X2", 3),  # juxtaposition
        ("X9", 0),
        ("X1^0", 3),
        ("X1^-1", 3),
        ("(X1+X2", 6),
        ("X1+X2)", 5),
        ("X1^2^3", 4),
        ("", 0),
    ],
)
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, R)
    assert info.value.pos == pos


def test_whitespace_ignored():
    assert parse_polynomial("  X1  *  X2 ", R) == R.var(0) * R.var(1)


def test_format_uses_symmetric_coefficients():
    assert format_polynomial(parse_polynomial("X1^2 - X4^2", R)) == "X1^2 - X4^2"
    assert format_polynomial(parse_polynomial("2*X1*X4", R)) == "2*X1*X4"
    assert format_polynomial(R.zero()) == "0"


terms = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 4), st.integers(0, 32002), max_size=6
)


@given(terms)
def test_print_parse_roundtrip(t):
    f = Poly(R, t)
    text = format_polynomial(f)
    g = parse_polynomial(text, R)
    assert g == f
    assert format_polynomial(g) == text
