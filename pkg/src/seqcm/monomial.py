"""Monomial ideals: minimal generators, decomposition, associated primes, Hilbert numerators.

Univariate integer polynomials (Hilbert numerators) are plain tuples of
coefficients indexed by degree, with no trailing zeros; ``()`` is zero.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .arith import Monomial, divides, mono_lcm

NEG_INF = float("-inf")


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``nvars`` variables, stored by its minimal generators."""

    nvars: int
    gens: frozenset

    @property
    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return minimalize(self.gens | other.gens, self.nvars)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        return minimalize({mono_lcm(a, b) for a in self.gens for b in other.gens}, self.nvars)

    def colon(self, m: Monomial) -> MonomialIdeal:
        return minimalize(
            {tuple(max(a - b, 0) for a, b in zip(g, m)) for g in self.gens}, self.nvars
        )

    def sorted_gens(self) -> list:
        return sorted(self.gens, key=lambda e: (sum(e), tuple(-x for x in e)))


def minimalize(gens, nvars: int | None = None) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    gens = set(map(tuple, gens))
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for the zero ideal")
        nvars = len(next(iter(gens)))
    ordered = sorted(gens, key=sum)
    keep: list = []
    for m in ordered:
        if not any(divides(g, m) for g in keep):
            keep.append(m)
    return MonomialIdeal(nvars, frozenset(keep))


def _support(m: Monomial) -> list[int]:
    return [i for i, x in enumerate(m) if x]


def _is_pure_power(m: Monomial) -> bool:
    return len(_support(m)) <= 1


def _pivot_variable(gens, candidates) -> int:
    """Most frequent variable among the generators, ties to the lowest index."""
    counts = Counter(i for g in gens for i in _support(g))
    return max(sorted(candidates), key=lambda i: (counts[i], -i))


# -- decomposition -----------------------------------------------------------

@lru_cache(maxsize=4096)
def _irreducibles(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    if I.is_unit:
        return ()
    mixed = [g for g in I.gens if not _is_pure_power(g)]
    if not mixed:
        return (I,)
    i = _pivot_variable(I.gens, {j for g in mixed for j in _support(g)})
    m = min((g for g in mixed if g[i]), key=lambda g: (g[i], sorted(g)))
    power = tuple(m[i] if j == i else 0 for j in range(I.nvars))
    rest = tuple(0 if j == i else x for j, x in enumerate(m))
    left = I + MonomialIdeal(I.nvars, frozenset([power]))
    right = I + MonomialIdeal(I.nvars, frozenset([rest]))
    return _irreducibles(left) + _irreducibles(right)


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers."""
    comps = list(dict.fromkeys(_irreducibles(I)))
    out = []
    for q in comps:
        # redundant iff it contains another component
        if any(r != q and q.contains_ideal(r) for r in comps):
            continue
        out.append(q)
    return sorted(out, key=lambda q: sorted(q.gens))


@dataclass(frozen=True)
class PrimaryComponent:
    component: MonomialIdeal
    prime: frozenset  # indices of the variables generating the radical
    dim: int  # dim R/p

    def prime_ideal(self) -> MonomialIdeal:
        n = self.component.nvars
        return MonomialIdeal(
            n, frozenset(tuple(1 if j == i else 0 for j in range(n)) for i in self.prime)
        )


def primary_decomposition(I: MonomialIdeal) -> list[PrimaryComponent]:
    """Irredundant primary decomposition, grouping irreducible components by radical.

    Components come sorted by decreasing dimension, then by prime.
    """
    if I.is_unit:
        raise ValueError("the unit ideal has no primary decomposition")
    groups: dict = {}
    for q in irreducible_decomposition(I):
        rad = frozenset(i for g in q.gens for i in _support(g))
        groups[rad] = q if rad not in groups else groups[rad].intersect(q)
    comps = [PrimaryComponent(q, rad, I.nvars - len(rad)) for rad, q in groups.items()]
    comps.sort(key=lambda c: (-c.dim, sorted(c.prime)))
    return comps


@dataclass(frozen=True)
class AssociatedPrime:
    prime: frozenset
    dim: int
    assh: bool


def associated_primes(I: MonomialIdeal) -> list[AssociatedPrime]:
    comps = primary_decomposition(I)
    top = max(c.dim for c in comps)
    return [AssociatedPrime(c.prime, c.dim, c.dim == top) for c in comps]


def mono_dimension(I: MonomialIdeal):
    """Krull dimension of R/I; -inf for the unit ideal."""
    if I.is_unit:
        return NEG_INF
    return max(c.dim for c in primary_decomposition(I))


def intersect_all(ideals, nvars: int) -> MonomialIdeal:
    out = MonomialIdeal(nvars, frozenset([(0,) * nvars]))
    for q in ideals:
        out = out.intersect(q)
    return out


# -- univariate integer polynomials ------------------------------------------

def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def upoly_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def upoly_sub(a: tuple, b: tuple) -> tuple:
    return upoly_add(a, tuple(-x for x in b))


def upoly_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def upoly_shift(a: tuple, k: int) -> tuple:
    return tuple([0] * k + list(a)) if a else ()


def upoly_eval(a: tuple, t: int) -> int:
    return sum(c * t**k for k, c in enumerate(a))


def divide_one_minus_t(a: tuple) -> tuple | None:
    """a / (1 - t) when (1 - t) divides a, else None."""
    if sum(a) != 0:
        return None
    acc = 0
    out = []
    for c in a[:-1]:
        acc += c
        out.append(acc)
    return _trim(out)


def pole_split(a: tuple) -> tuple[int, tuple]:
    """Return (r, b) with a = (1 - t)^r * b and b(1) != 0; a must be nonzero."""
    if not a:
        raise ValueError("zero polynomial")
    r = 0
    while True:
        q = divide_one_minus_t(a)
        if q is None:
            return r, a
        a, r = q, r + 1


def series_coefficients(num: tuple, nvars: int, upto: int) -> list[int]:
    """Coefficients of num(t) / (1 - t)^nvars in degrees 0..upto."""
    out = []
    for d in range(upto + 1):
        if nvars == 0:
            out.append(num[d] if d < len(num) else 0)
            continue
        out.append(sum(c * comb(d - k + nvars - 1, nvars - 1) for k, c in enumerate(num) if k <= d))
    return out


# -- Hilbert numerator -------------------------------------------------------

@lru_cache(maxsize=65536)
def hilbert_numerator(I: MonomialIdeal) -> tuple:
    """Numerator Q(t) with HS(R/I) = Q(t) / (1 - t)^n.

    Pivot splitting on a pure power p = x_i^e of the most frequent variable:
    Q(I) = Q(I + (p)) + t^e Q(I : p).
    """
    if I.is_unit:
        return ()
    mixed = [g for g in I.gens if not _is_pure_power(g)]
    if not mixed:
        out = (1,)
        for g in I.gens:
            out = upoly_mul(out, upoly_sub((1,), upoly_shift((1,), sum(g))))
        return out
    if len(mixed) == 1:
        # I = J + (m) with J pure powers: Q = Q(J) - t^deg(m) Q(J : m)
        m = mixed[0]
        pure = MonomialIdeal(I.nvars, I.gens - {m})
        return upoly_sub(
            hilbert_numerator(pure), upoly_shift(hilbert_numerator(pure.colon(m)), sum(m))
        )
    i = _pivot_variable(I.gens, {j for g in mixed for j in _support(g)})
    e = min(g[i] for g in mixed if g[i])
    p = tuple(e if j == i else 0 for j in range(I.nvars))
    left = I + MonomialIdeal(I.nvars, frozenset([p]))
    right = I.colon(p)
    return upoly_add(hilbert_numerator(left), upoly_shift(hilbert_numerator(right), e))


def standard_monomial_counts(I: MonomialIdeal, upto: int) -> list[int]:
    """Brute-force count of monomials outside I in each degree 0..upto."""
    from .arith import monomials_of_degree

    return [
        sum(1 for m in monomials_of_degree(I.nvars, d) if not I.contains(m))
        for d in range(upto + 1)
    ]
