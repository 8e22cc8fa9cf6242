import pytest

from seqcm.arith import Ring
from seqcm.errors import FiltrationError, UnsupportedConstructionError
from seqcm.filtration import (
    FiltrationSpec,
    build_dimension_filtration,
    embed_in_dimension_filtration,
    trivial_filtration,
    user_filtration,
    verify_filtration,
)
from seqcm.groebner import Ideal, ideals_equal
from seqcm.monomial import NEG_INF
from seqcm.subquotient import CyclicModule


def ideal(ring, *gens):
    return Ideal(ring, tuple(ring.parse(g) for g in gens))


def test_dimension_filtration_of_mixed_example(mixed):
    D = build_dimension_filtration(mixed.module)
    assert D.dims == (NEG_INF, 2, 3)
    assert ideals_equal(D.chain[0], mixed.ideal)
    assert ideals_equal(D.chain[1], ideal(mixed.ring, "X1", "X2") + mixed.ideal)
    assert verify_filtration(D).ok


def test_dimension_filtration_with_finite_part():
    R = Ring(("X1", "X2"))
    D = build_dimension_filtration(CyclicModule(R, ideal(R, "X1^2", "X1*X2")))
    assert D.dims == (0, 1)
    assert ideals_equal(D.chain[0], ideal(R, "X1"))


def test_cohen_macaulay_has_one_step():
    R = Ring(("X1", "X2"))
    D = build_dimension_filtration(CyclicModule(R, ideal(R, "X1*X2")))
    assert D.dims == (NEG_INF, 1)


def test_non_monomial_is_unsupported():
    R = Ring(("X1", "X2", "X3"))
    with pytest.raises(UnsupportedConstructionError):
        build_dimension_filtration(CyclicModule(R, ideal(R, "X1^2 - X2*X3")))


def test_user_filtration_matches_mixed_example(mixed):
    F = mixed.filtration
    assert F.dims == (NEG_INF, 2, 3)
    assert F.kind == "user-supplied"
    assert verify_filtration(F).ok


def test_dimension_condition_violation_reported(mixed):
    # (X3) + I has the same dimension as M
    with pytest.raises(FiltrationError) as info:
        user_filtration(mixed.module, [ideal(mixed.ring, "X3")])
    assert any("dimension" in msg for _, msg in info.value.failures)


def test_non_chain_reported():
    R = Ring(("X1", "X2", "X3"))
    M = CyclicModule(R, ideal(R, "X1*X2", "X1*X3"))
    F = FiltrationSpec(M.whole, (ideal(R, "X1"), ideal(R, "X2") + M.ideal, Ideal.unit(R)))
    check = verify_filtration(F)
    assert not check.ok
    assert any(i == 0 and "containment" in msg for i, msg in check.failures)


def test_trivial_filtration():
    R = Ring(("X1", "X2"))
    F = trivial_filtration(CyclicModule(R, ideal(R, "X1*X2")))
    assert F.t == 1 and F.dims == (NEG_INF, 1)


def test_embedding_into_dimension_filtration(mixed):
    D = build_dimension_filtration(mixed.module)
    assert embed_in_dimension_filtration(mixed.filtration, D) == [-1, 1, 2]
