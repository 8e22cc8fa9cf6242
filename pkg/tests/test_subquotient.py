import pytest

from seqcm.arith import Ring
from seqcm.errors import InfiniteLengthError, InputError, NotHomogeneousError
from seqcm.groebner import Ideal, ideals_equal
from seqcm.monomial import NEG_INF
from seqcm.subquotient import (
    CyclicModule,
    Subquotient,
    annihilator,
    ann_of_quotient,
    graded_piece_dim,
    rank_mod_p,
    sq_dimension,
    sq_length,
    zero_intersection_check,
)


def ideal(ring, *gens):
    return Ideal(ring, tuple(ring.parse(g) for g in gens))


def test_dimensions_of_mixed_example(mixed):
    R = mixed.ring
    assert sq_dimension(mixed.module) == 3
    assert sq_dimension(Subquotient(ideal(R, "X1", "X2") + mixed.ideal, mixed.ideal)) == 2
    U = ideal(R, "X1")
    assert sq_dimension(Subquotient(U, U)) == NEG_INF


def test_length_of_artinian_quotient():
    R = Ring(("X1", "X2"))
    N = CyclicModule(R, ideal(R, "X1^2", "X2^3")).whole
    assert sq_length(N, "both") == 6


def test_infinite_length_is_an_error():
    R = Ring(("X1", "X2"))
    with pytest.raises(InfiniteLengthError):
        sq_length(CyclicModule(R, ideal(R, "X1")).whole)


def test_non_homogeneous_rejected():
    R = Ring(("X1", "X2"))
    with pytest.raises(NotHomogeneousError):
        CyclicModule(R, ideal(R, "X1^2 - X2"))


def test_lower_must_sit_inside_upper():
    R = Ring(("X1", "X2"))
    with pytest.raises(InputError):
        Subquotient(ideal(R, "X1"), ideal(R, "X2"))


def test_mixed_example_quotient_lengths(mixed):
    # l(M/(M_1 + x(n)M)) = n1 n2 n3 + n1 + 1
    quotient = mixed.module.whole.quotient(mixed.submodule)
    for n in [(2, 3, 2), (3, 3, 3)]:
        xs = [x**k for x, k in zip(mixed.sop, n)]
        assert sq_length(quotient.mod_params(xs), "both") == n[0] * n[1] * n[2] + n[0] + 1


def test_rank_mod_p():
    import numpy as np

    A = np.array([[1, 2], [2, 4]])
    assert rank_mod_p(A, 7) == 1
    assert rank_mod_p(np.array([[1, 1], [0, 5]]), 5) == 1


def test_graded_piece_dim():
    R = Ring(("X1", "X2"))
    assert graded_piece_dim([R.parse("X1*X2")], R, 3) == 2
    assert graded_piece_dim([R.one()], R, 3) == 4


def test_annihilators(mixed):
    R = mixed.ring
    M1 = Subquotient(mixed.submodule, mixed.ideal)
    # X1X2, X2^2 are killed by (X3, X4, X5) modulo I
    assert ideals_equal(annihilator(M1), ideal(R, "X3", "X4", "X5"))
    assert ideals_equal(ann_of_quotient(mixed.module, mixed.submodule), mixed.submodule)


def test_zero_intersection_for_good_sop(mixed):
    x1, x2, x3 = mixed.sop
    assert zero_intersection_check(mixed.module, mixed.submodule, [x3])
    assert not zero_intersection_check(mixed.module, mixed.submodule, [x1])
