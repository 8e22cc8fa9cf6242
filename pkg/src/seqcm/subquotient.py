"""Cyclic modules R/I and subquotients U/V of R: dimension, length, annihilators.

Everything is graded: ideals must be homogeneous, and the local ring at the
irrelevant ideal is modeled by the polynomial ring itself.  Lengths come from
Hilbert numerators of grevlex initial ideals, with a degree-by-degree linear
algebra oracle (``method="bruteforce"``) that never touches a Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .arith import GREVLEX, Ring, monomials_of_degree
from .errors import InfiniteLengthError, InputError, NotHomogeneousError
from .groebner import Ideal, intersect, is_contained, reduced_gb
from .monomial import (
    NEG_INF,
    hilbert_numerator,
    minimalize,
    pole_split,
    upoly_eval,
    upoly_sub,
)


def _require_homogeneous(ideal: Ideal, what: str):
    for g in ideal.gens:
        if not g.is_homogeneous:
            raise NotHomogeneousError(f"{what} has a non-homogeneous generator {g}")


@dataclass(frozen=True)
class Subquotient:
    """The module U/V for homogeneous ideals V ⊆ U of one ring."""

    upper: Ideal
    lower: Ideal

    def __post_init__(self):
        self.upper._check(self.lower)
        _require_homogeneous(self.upper, "upper ideal")
        _require_homogeneous(self.lower, "lower ideal")
        if not is_contained(self.lower, self.upper):
            raise InputError("lower ideal is not contained in the upper ideal")

    @property
    def ring(self) -> Ring:
        return self.upper.ring

    def is_zero(self) -> bool:
        return is_contained(self.upper, self.lower)

    def sub(self, J: Ideal) -> Subquotient:
        """The submodule (J + V)/V."""
        return Subquotient(J + self.lower, self.lower)

    def quotient(self, J: Ideal) -> Subquotient:
        """U/(J + V) for J ⊆ U."""
        return Subquotient(self.upper, J + self.lower)

    def times(self, xs) -> Ideal:
        """Generators of (xs)U + V, i.e. the lower ideal of N/(xs)N."""
        xs_ideal = Ideal(self.ring, tuple(xs))
        return _prune(xs_ideal * self.upper, self.lower) + self.lower

    def mod_params(self, xs) -> Subquotient:
        return Subquotient(self.upper, self.times(xs))


@dataclass(frozen=True)
class CyclicModule:
    """M = R/I for a homogeneous ideal I."""

    ring: Ring
    ideal: Ideal

    def __post_init__(self):
        _require_homogeneous(self.ideal, "defining ideal")

    @property
    def whole(self) -> Subquotient:
        return Subquotient(Ideal.unit(self.ring), self.ideal)

    def submodule(self, J: Ideal) -> Subquotient:
        return Subquotient(J + self.ideal, self.ideal)

    def quotient(self, J: Ideal) -> CyclicModule:
        return CyclicModule(self.ring, J + self.ideal)


def as_subquotient(N) -> Subquotient:
    if isinstance(N, CyclicModule):
        return N.whole
    if isinstance(N, Subquotient):
        return N
    raise TypeError(f"expected a module, got {type(N).__name__}")


def _prune(J: Ideal, V: Ideal) -> Ideal:
    """Drop generators of J that already lie in V."""
    gb = reduced_gb(V)
    return Ideal(J.ring, tuple(g for g in J.gens if not gb.contains(g)))


# -- Hilbert-series route ----------------------------------------------------

def initial_ideal(ideal: Ideal):
    gb = reduced_gb(ideal, GREVLEX)
    n = ideal.ring.nvars
    return minimalize(gb.lead_monomials(), n)


def ideal_numerator(ideal: Ideal) -> tuple:
    """Hilbert numerator of R/ideal (homogeneous ideal)."""
    _require_homogeneous(ideal, "ideal")
    return hilbert_numerator(initial_ideal(ideal))


def sq_numerator(N: Subquotient) -> tuple:
    return upoly_sub(ideal_numerator(N.lower), ideal_numerator(N.upper))


def sq_dimension(N) -> int | float:
    """Krull dimension of U/V as the pole order at t = 1; -inf for the zero module."""
    N = as_subquotient(N)
    num = sq_numerator(N)
    if not num:
        return NEG_INF
    r, _ = pole_split(num)
    return N.ring.nvars - r


def _length_hilbert(N: Subquotient) -> int:
    num = sq_numerator(N)
    if not num:
        return 0
    m = N.ring.nvars
    r, rest = pole_split(num)
    if r < m:
        raise InfiniteLengthError(
            f"subquotient has dimension {m - r}; it is not m-primary (infinite length)"
        )
    return upoly_eval(rest, 1) if r == m else 0


# -- brute-force oracle ------------------------------------------------------

def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        below = A[r + 1:, c]
        mask = np.nonzero(below)[0] + r + 1
        if mask.size:
            A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        r += 1
    return r


def graded_piece_dim(gens, ring: Ring, d: int) -> int:
    """dim_k of the degree-d part of the ideal spanned by ``gens``."""
    n = ring.nvars
    total = comb(d + n - 1, n - 1) if n else int(d == 0)
    gens = [g for g in gens if g.degree <= d]
    if not gens:
        return 0
    if any(g.degree == 0 for g in gens):
        return total
    cols = {m: k for k, m in enumerate(monomials_of_degree(n, d))}
    rows = []
    for g in gens:
        for m in monomials_of_degree(n, d - g.degree):
            row = np.zeros(len(cols), dtype=np.int64)
            for e, c in g.terms.items():
                row[cols[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return rank_mod_p(np.array(rows), ring.modulus)


def _length_bruteforce(N: Subquotient, max_degree: int = 60) -> int:
    U, V = N.upper.gens, N.lower.gens
    top = max((g.degree for g in U), default=0)
    total = 0
    for d in range(max_degree + 1):
        piece = graded_piece_dim(U, N.ring, d) - graded_piece_dim(V, N.ring, d)
        total += piece
        # once U is generated below d, (U/V)_d = 0 forces all higher pieces to vanish
        if d >= top and piece == 0:
            return total
    raise InfiniteLengthError(f"no vanishing graded piece up to degree {max_degree}")


def sq_length(N, method: str = "hilbert") -> int:
    """Length of a finite-length subquotient, ``method`` in {hilbert, bruteforce, both}."""
    N = as_subquotient(N)
    if method == "hilbert":
        return _length_hilbert(N)
    if method == "bruteforce":
        return _length_bruteforce(N)
    if method == "both":
        a, b = _length_hilbert(N), _length_bruteforce(N)
        if a != b:
            from .errors import InternalInconsistencyError

            raise InternalInconsistencyError(f"hilbert length {a} != brute-force length {b}")
        return a
    raise ValueError(f"unknown length method {method!r}")


# -- annihilators and intersections ------------------------------------------

def ann_of_quotient(M: CyclicModule, K: Ideal) -> Ideal:
    """Ann(M / (K/I)) = K for K ⊇ I, normalized to its reduced basis."""
    if not is_contained(M.ideal, K):
        raise InputError("K does not contain the defining ideal")
    gb = reduced_gb(K)
    return Ideal(M.ring, gb.elements)


def annihilator(N) -> Ideal:
    """Ann(U/V) = V : U."""
    from .groebner import colon

    N = as_subquotient(N)
    return colon(N.lower, N.upper)


def zero_intersection_check(M, J: Ideal, xs) -> bool:
    """True iff (J/V) ∩ (xs)M = 0 inside M = U/V, i.e. ((xs)U + V) ∩ J ⊆ V."""
    N = as_subquotient(M)
    if not xs:
        return True
    if not is_contained(N.lower, J):
        raise InputError("J does not contain the lower ideal")
    meet = intersect(N.times(xs), J)
    return is_contained(meet, N.lower)
