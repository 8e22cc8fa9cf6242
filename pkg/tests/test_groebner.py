import sympy
from hypothesis import given
from hypothesis import strategies as st

from seqcm.arith import LEX, Poly, Ring
from seqcm.groebner import (
    Ideal,
    colon,
    eliminate,
    ideals_equal,
    intersect,
    irrelevant_ideal,
    is_contained,
    is_member,
    reduced_gb,
    saturate,
)

P = 32003
R = Ring(("X1", "X2", "X3", "X4", "X5"))
R3 = Ring(("X1", "X2", "X3"))
SYMS = sympy.symbols("X1 X2 X3")


def ideal(ring, *gens):
    return Ideal(ring, tuple(ring.parse(g) for g in gens))


def as_strings(gb):
    return sorted(str(g) for g in gb.elements)


def test_small_reduced_basis():
    gb = reduced_gb(ideal(R, "X1+X4", "X1*X3"))
    assert as_strings(gb) == sorted(["X3*X4", "X1 + X4"])


def test_unit_ideal():
    R2 = Ring(("X1", "X2"))
    gb = reduced_gb(ideal(R2, "X1^2", "X1*X2 - 1"))
    assert gb.is_unit()
    assert as_strings(gb) == ["1"]


def test_elimination():
    R2 = Ring(("X1", "X2"))
    J = eliminate(ideal(R2, "X1 - X2", "X1*X2"), 1)
    assert ideals_equal(J, ideal(R2, "X2^2"))


def test_intersection_of_principal_ideals():
    J = intersect(ideal(R, "X1+X4"), ideal(R, "X3"))
    assert ideals_equal(J, ideal(R, "X1*X3 + X3*X4"))


def test_colon_of_product_ideal():
    I = ideal(R, "X1*X3", "X1*X4", "X1*X5", "X2*X3", "X2*X4", "X2*X5")
    assert ideals_equal(colon(I, ideal(R, "X3", "X4", "X5")), ideal(R, "X1", "X2"))


def test_saturation_removes_embedded_component():
    R2 = Ring(("X1", "X2"))
    sat = saturate(ideal(R2, "X1^2", "X1*X2"), irrelevant_ideal(R2))
    assert ideals_equal(sat, ideal(R2, "X1"))


def test_membership():
    I = ideal(R3, "X1*X2 - X3^2", "X1^2")
    assert is_member(R3.parse("X1^3 + X1*X2*X3 - X3^3"), I)
    assert not is_member(R3.parse("X2"), I)


def test_gb_is_order_specific():
    I = ideal(R3, "X1 - X2^2", "X2 - X3^2")
    lex = reduced_gb(I, LEX)
    assert lex.order == LEX
    assert as_strings(lex) == sorted(["X1 - X3^4", "X2 - X3^2"])


# -- random cross-check against an independent implementation ------------------

small_poly = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(1, P - 1), min_size=1, max_size=3
)


def sym(f: Poly):
    return sum(c * sympy.prod(s**e for s, e in zip(SYMS, m)) for m, c in f.terms.items())


def sympy_reduced(gens, order):
    G = sympy.groebner([sym(g) for g in gens], *SYMS, modulus=P, order=order)
    out = set()
    for g in G.exprs:
        poly = sympy.Poly(g, *SYMS, modulus=P)
        lc = int(poly.LC(order=order)) % P
        inv = pow(lc, -1, P)
        out.add(frozenset((m, int(c) * inv % P) for m, c in poly.terms()))
    return out


@given(st.lists(small_poly, min_size=1, max_size=3))
def test_reduced_basis_matches_sympy(term_lists):
    gens = [Poly(R3, t) for t in term_lists]
    mine = {frozenset(g.terms.items()) for g in reduced_gb(Ideal(R3, tuple(gens))).elements}
    assert mine == sympy_reduced(gens, "grevlex")


@given(st.lists(small_poly, min_size=1, max_size=3))
def test_lex_basis_matches_sympy(term_lists):
    gens = [Poly(R3, t) for t in term_lists]
    mine = {frozenset(g.terms.items()) for g in reduced_gb(Ideal(R3, tuple(gens)), LEX).elements}
    assert mine == sympy_reduced(gens, "lex")


@given(st.lists(small_poly, min_size=1, max_size=2), st.lists(small_poly, min_size=1, max_size=2))
def test_intersection_is_contained_in_both(a, b):
    I = Ideal(R3, tuple(Poly(R3, t) for t in a))
    J = Ideal(R3, tuple(Poly(R3, t) for t in b))
    K = intersect(I, J)
    assert is_contained(K, I) and is_contained(K, J)
    assert is_contained(I * J, K)
