from hypothesis import given
from hypothesis import strategies as st

from seqcm.monomial import (
    NEG_INF,
    MonomialIdeal,
    associated_primes,
    hilbert_numerator,
    intersect_all,
    irreducible_decomposition,
    minimalize,
    mono_dimension,
    pole_split,
    primary_decomposition,
    series_coefficients,
    standard_monomial_counts,
    upoly_eval,
)

mono_ideals = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=5).map(
        lambda gens: minimalize(gens, n)
    )
)


def mi(n, *gens):
    return minimalize(gens, n)


def test_minimalize_drops_multiples():
    I = mi(2, (2, 0), (1, 1), (3, 1), (1, 2))
    assert I.gens == frozenset({(2, 0), (1, 1)})


def test_primary_decomposition_of_product_ideal():
    # (X1, X2)(X3, X4, X5)
    I = mi(5, *[tuple(int(j in (a, b)) for j in range(5)) for a in (0, 1) for b in (2, 3, 4)])
    comps = primary_decomposition(I)
    assert [(sorted(c.prime), c.dim) for c in comps] == [([0, 1], 3), ([2, 3, 4], 2)]


def test_embedded_component():
    comps = primary_decomposition(mi(2, (2, 0), (1, 1)))
    assert [(sorted(c.prime), c.dim) for c in comps] == [([0], 1), ([0, 1], 0)]
    primes = associated_primes(mi(2, (2, 0), (1, 1)))
    assert [a.assh for a in primes] == [True, False]


def test_dimension():
    assert mono_dimension(mi(3, (1, 1, 0), (1, 0, 1))) == 2
    assert mono_dimension(mi(2, (0, 0))) == NEG_INF


def test_numerator_known_values():
    assert hilbert_numerator(mi(2, (1, 1))) == (1, 0, -1)
    assert hilbert_numerator(mi(2, (2, 0), (0, 2))) == (1, 0, -2, 0, 1)
    assert hilbert_numerator(MonomialIdeal(3, frozenset())) == (1,)
    assert hilbert_numerator(mi(2, (0, 0))) == ()


def test_pole_split():
    assert pole_split((1, 0, -1)) == (1, (1, 1))
    r, rest = pole_split((1, 0, -2, 0, 1))
    assert r == 2 and upoly_eval(rest, 1) == 4


@given(mono_ideals)
def test_decomposition_recombines(I):
    if I.is_unit:
        return
    comps = primary_decomposition(I)
    assert intersect_all([c.component for c in comps], I.nvars) == I
    for c in comps:
        rad = {i for g in c.component.gens for i, x in enumerate(g) if x}
        assert rad == set(c.prime)
    irr = irreducible_decomposition(I)
    assert intersect_all(irr, I.nvars) == I
    assert all(sum(1 for x in g if x) == 1 for q in irr for g in q.gens)


@given(mono_ideals)
def test_numerator_matches_counts_to_degree_10(I):
    series = series_coefficients(hilbert_numerator(I), I.nvars, 10)
    assert series == standard_monomial_counts(I, 10)


@given(mono_ideals)
def test_dimension_matches_pole_order(I):
    if I.is_unit:
        return
    r, _ = pole_split(hilbert_numerator(I))
    assert I.nvars - r == mono_dimension(I)


@given(mono_ideals)
def test_assh_share_top_dimension(I):
    if I.is_unit:
        return
    primes = associated_primes(I)
    top = max(a.dim for a in primes)
    assert all(a.assh == (a.dim == top) for a in primes)
