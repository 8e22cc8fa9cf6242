import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from seqcm.arith import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    Ring,
    RingMismatchError,
    ZeroPolynomialError,
    coprime,
    divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    poly_arith,
)

P = 32003
R3 = Ring(("X1", "X2", "X3"))
SYMS = sympy.symbols("X1 X2 X3")

exps = st.tuples(*[st.integers(0, 3)] * 3)
coeffs = st.integers(-P, P)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda t: Poly(R3, t))


def to_sympy(f: Poly):
    expr = sum(c * sympy.prod(s**e for s, e in zip(SYMS, m)) for m, c in f.terms.items())
    return sympy.Poly(expr, *SYMS, modulus=P)


def test_ring_rejects_composite_modulus():
    with pytest.raises(ValueError):
        Ring(("X",), 32004)


def test_ring_rejects_duplicate_names():
    with pytest.raises(ValueError):
        Ring(("X", "X"))


def test_coefficients_reduced_and_zero_terms_dropped():
    f = Poly(R3, {(1, 0, 0): P + 2, (0, 1, 0): P})
    assert f.terms == {(1, 0, 0): 2}


def test_ring_mismatch():
    other = Ring(("X1", "X2", "X3"), 101)
    with pytest.raises(RingMismatchError):
        R3.var(0) + other.var(0)


def test_monomial_exponent_arithmetic():
    a, b = (2, 0, 1), (1, 3, 0)
    assert mono_mul(a, b) == (3, 3, 1)
    assert mono_lcm(a, b) == (2, 3, 1)
    assert mono_gcd(a, b) == (1, 0, 0)
    assert divides((1, 0, 0), a) and not divides(b, a)
    assert coprime((1, 0, 0), (0, 2, 1)) and not coprime(a, b)


def test_monomials_of_degree_counts():
    assert len(list(monomials_of_degree(3, 4))) == 15
    assert list(monomials_of_degree(0, 0)) == [()]


def test_grevlex_breaks_ties_on_last_variable():
    # X1*X3 < X2^2 in grevlex, but not in lex
    a, b = (1, 0, 1), (0, 2, 0)
    assert GREVLEX.key(a) < GREVLEX.key(b)
    assert LEX.key(a) > LEX.key(b)


def test_block_order_eliminates_first_block():
    order = MonomialOrder("block", 1)
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))


def test_leading_term_of_zero():
    with pytest.raises(ZeroPolynomialError):
        R3.zero().leading_term()


def test_homogeneity_and_degree():
    f = R3.parse("X1^2 - X2*X3")
    assert f.is_homogeneous and f.degree == 2
    assert not R3.parse("X1^2 - X2").is_homogeneous


def test_embed_into_larger_ring():
    big = Ring(("Y1", "X1", "X2", "X3"))
    f = R3.parse("X1*X3 + 2")
    assert str(f.embed(big, [1, 2, 3])) == "X1*X3 + 2"


@given(polys, polys)
def test_add_mul_match_sympy(f, g):
    assert to_sympy(f + g) == to_sympy(f) + to_sympy(g)
    assert to_sympy(f * g) == to_sympy(f) * to_sympy(g)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R3.zero()


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(f, n):
    expected = R3.one()
    for _ in range(n):
        expected = expected * f
    assert f**n == expected


def test_poly_arith_dispatch():
    f, g = R3.var(0), R3.var(1)
    assert poly_arith(f, g, "add") == f + g
    assert poly_arith(f, g, "mul") == f * g
    assert poly_arith(f, 3, "sub") == f - 3
    assert poly_arith(f, 2, "scale") == f + f
    with pytest.raises(ValueError):
        poly_arith(f, g, "div")
