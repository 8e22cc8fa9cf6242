"""Buchberger's algorithm and the ideal toolbox built on it.

The inner loops work on plain ``{exponent: coeff}`` dicts; :class:`Poly` and
:class:`Ideal` are the public wrappers.  Reduced bases are cached per
(generators, order, field) for the lifetime of the process.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .arith import (
    MonomialOrder,
    Poly,
    Ring,
    RingMismatchError,
    coprime,
    divides,
    mono_div,
    mono_lcm,
)


# -- dict-level kernels ------------------------------------------------------

def _lead(f: dict, order: MonomialOrder):
    return max(f, key=order.key)


def _monic(f: dict, lm, p: int) -> dict:
    inv = pow(f[lm], -1, p)
    if inv == 1:
        return f
    return {e: c * inv % p for e, c in f.items()}


def _reduce(f: dict, basis: list, order: MonomialOrder, p: int) -> dict:
    """Full reduction of f by ``basis``, a list of (lm, monic dict) pairs."""
    h = dict(f)
    neg = order.neg_key
    heap = [(neg(e), e) for e in h]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = h.pop(e, 0)
        if not c:
            continue
        for lm, g in basis:
            if divides(lm, e):
                break
        else:
            rem[e] = c
            continue
        q = tuple(a - b for a, b in zip(e, lm))
        for ge, gc in g.items():
            if ge == lm:
                continue
            ne = tuple(a + b for a, b in zip(ge, q))
            old = h.get(ne)
            v = ((old or 0) - c * gc) % p
            if v:
                if old is None:
                    heapq.heappush(heap, (neg(ne), ne))
                h[ne] = v
            elif old is not None:
                del h[ne]
    return rem


def _spoly(f: dict, flm, g: dict, glm, p: int) -> dict:
    lcm = mono_lcm(flm, glm)
    qf = mono_div(lcm, flm)
    qg = mono_div(lcm, glm)
    out = {}
    for e, c in f.items():
        ne = tuple(a + b for a, b in zip(e, qf))
        out[ne] = c
    for e, c in g.items():
        ne = tuple(a + b for a, b in zip(e, qg))
        v = (out.get(ne, 0) - c) % p
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


def _buchberger(polys: list[dict], order: MonomialOrder, p: int) -> list[tuple]:
    """Reduced Groebner basis as a list of (lm, monic dict), sorted decreasingly.

    Normal selection strategy; pairs pruned with the Gebauer-Moeller update,
    which subsumes both Buchberger criteria.
    """
    items: list[tuple] = []  # every polynomial ever added: (lm, dict)
    active: list[int] = []
    pairs: list[tuple] = []  # (key(lcm), lcm, i, j)
    key = order.key

    def update(h: int):
        nonlocal active, pairs
        hlm = items[h][0]
        groups: dict = {}
        for g in active:
            groups.setdefault(mono_lcm(hlm, items[g][0]), []).append(g)
        # criterion M: keep minimal lcms only; criterion F: one pair per lcm;
        # a coprime member then discards its whole group (product criterion)
        minimal: list = []
        for lcm in sorted(groups, key=sum):
            if not any(divides(m, lcm) for m in minimal):
                minimal.append(lcm)
        kept = [
            (lcm, groups[lcm][0])
            for lcm in minimal
            if not any(coprime(hlm, items[g][0]) for g in groups[lcm])
        ]
        new_pairs = [(key(lcm), lcm, g, h) for lcm, g in kept]
        old = []
        for pk, lcm, i, j in pairs:
            if (
                divides(hlm, lcm)
                and mono_lcm(items[i][0], hlm) != lcm
                and mono_lcm(hlm, items[j][0]) != lcm
            ):
                continue
            old.append((pk, lcm, i, j))
        pairs = old + new_pairs
        active = [g for g in active if not divides(hlm, items[g][0])] + [h]

    def add(f: dict):
        lm = _lead(f, order)
        items.append((lm, _monic(f, lm, p)))
        update(len(items) - 1)

    basis_view = lambda: [items[g] for g in active]  # noqa: E731

    for f in polys:
        if not f:
            continue
        r = _reduce(f, basis_view(), order, p)
        if r:
            add(r)
            if all(v == 0 for v in items[-1][0]):
                return [items[-1]]

    while pairs:
        best = min(range(len(pairs)), key=pairs.__getitem__)
        _, _, i, j = pairs.pop(best)
        s = _spoly(items[i][1], items[i][0], items[j][1], items[j][0], p)
        if not s:
            continue
        r = _reduce(s, basis_view(), order, p)
        if r:
            add(r)
            if all(v == 0 for v in items[-1][0]):
                return [items[-1]]

    return _interreduce([items[g] for g in active], order, p)


def _interreduce(basis: list[tuple], order: MonomialOrder, p: int) -> list[tuple]:
    key = order.key
    basis = sorted(basis, key=lambda t: key(t[0]))
    minimal: list[tuple] = []
    for lm, g in basis:
        if not any(divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {e: c for e, c in g.items() if e != lm}
        tail = _reduce(tail, others, order, p)
        tail[lm] = 1
        out.append((lm, tail))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return out


# -- public types ------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """An ideal given by generators; the zero ideal has no generators."""

    ring: Ring
    gens: tuple[Poly, ...] = ()

    def __post_init__(self):
        gens = []
        for g in self.gens:
            if not isinstance(g, Poly):
                raise TypeError(f"ideal generator {g!r} is not a polynomial")
            if not g.ring.same_field(self.ring):
                raise RingMismatchError("generator from a different ring")
            if g:
                gens.append(Poly._raw(self.ring, g.terms) if g.ring != self.ring else g)
        object.__setattr__(self, "gens", tuple(gens))

    @classmethod
    def unit(cls, ring: Ring) -> Ideal:
        return cls(ring, (ring.one(),))

    @classmethod
    def zero(cls, ring: Ring) -> Ideal:
        return cls(ring, ())

    def _check(self, other: Ideal):
        if not self.ring.same_field(other.ring):
            raise RingMismatchError(f"{self.ring.names} vs {other.ring.names}")

    def __add__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, tuple(f * g for f in self.gens for g in other.gens))

    def power(self, n: int) -> Ideal:
        if n == 0:
            return Ideal.unit(self.ring)
        gens = []
        for combo in combinations_with_replacement(self.gens, n):
            g = combo[0]
            for f in combo[1:]:
                g = g * f
            gens.append(g)
        return Ideal(self.ring, tuple(dict.fromkeys(gens)))

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        return reduced_gb(self, order)

    def __contains__(self, f: Poly) -> bool:
        return reduced_gb(self).contains(f)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring  # carries the order the basis is reduced for
    elements: tuple[Poly, ...]
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def _pairs(self) -> list[tuple]:
        cached = self.__dict__.get("_pair_cache")
        if cached is None:
            cached = [(g.lm(self.order), g.terms) for g in self.elements]
            object.__setattr__(self, "_pair_cache", cached)
        return cached

    def lead_monomials(self) -> list:
        return [lm for lm, _ in self._pairs()]

    def is_unit(self) -> bool:
        return any(all(x == 0 for x in lm) for lm in self.lead_monomials())

    def normal_form(self, f: Poly) -> Poly:
        if not f.ring.same_field(self.ring):
            raise RingMismatchError("polynomial and basis live in different rings")
        r = _reduce(f.terms, self._pairs(), self.order, self.ring.modulus)
        return Poly._raw(f.ring, r)

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)


_GB_CACHE: dict = {}
_GB_LOCK = threading.Lock()


def _cache_key(ideal: Ideal, order: MonomialOrder):
    return (
        ideal.ring.names,
        ideal.ring.modulus,
        order,
        frozenset(frozenset(g.terms.items()) for g in ideal.gens),
    )


def clear_gb_cache():
    with _GB_LOCK:
        _GB_CACHE.clear()


def reduced_gb(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """The unique reduced Groebner basis of ``ideal`` under ``order``."""
    order = order or ideal.ring.order
    ring = ideal.ring.with_order(order)
    key = _cache_key(ideal, order)
    hit = _GB_CACHE.get(key)
    if hit is not None:
        return hit
    p = ring.modulus
    if ideal.is_monomial():
        # monomial generators are a Groebner basis; reduce = minimalize + monic
        basis = _interreduce([(e, {e: 1}) for g in ideal.gens for e in g.terms], order, p)
    else:
        basis = _buchberger([g.terms for g in ideal.gens], order, p)
    elements = tuple(Poly._raw(ring, g) for _, g in basis)
    result = GroebnerBasis(ring, elements)
    with _GB_LOCK:
        _GB_CACHE[key] = result
    return result


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    return gb.normal_form(f)


# -- ideal operations --------------------------------------------------------

def eliminate(ideal: Ideal, k: int) -> Ideal:
    """Generators of ideal ∩ k[x_{k+1}, ..., x_n] (first k variables eliminated)."""
    n = ideal.ring.nvars
    if not 0 < k < n:
        raise ValueError(f"cannot eliminate {k} of {n} variables")
    gb = reduced_gb(ideal, MonomialOrder("block", k))
    keep = [g for g in gb.elements if all(all(x == 0 for x in e[:k]) for e in g.terms)]
    return Ideal(ideal.ring, tuple(Poly._raw(ideal.ring, g.terms) for g in keep))


def _with_tag_variable(ring: Ring) -> tuple[Ring, list[int]]:
    name = "_t"
    while name in ring.names:
        name = "_" + name
    big = Ring((name,) + ring.names, ring.modulus, ring.order)
    return big, list(range(1, ring.nvars + 1))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via eliminating t from t*I + (1 - t)*J."""
    I._check(J)
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal.zero(ring)
    big, pos = _with_tag_variable(ring)
    t = big.var(0)
    gens = [t * f.embed(big, pos) for f in I.gens]
    gens += [(1 - t) * g.embed(big, pos) for g in J.gens]
    elim = eliminate(Ideal(big, tuple(gens)), 1)
    back = []
    for g in elim.gens:
        back.append(Poly(ring, {e[1:]: c for e, c in g.terms.items()}))
    return Ideal(ring, tuple(back))


def divide_exact(f: Poly, g: Poly) -> Poly:
    """f / g, raising ValueError when g does not divide f."""
    order = f.ring.order
    p = f.ring.modulus
    glm, glc = g.leading_term(order)
    ginv = pow(glc, -1, p)
    h = dict(f.terms)
    q: dict = {}
    while h:
        e = max(h, key=order.key)
        if not divides(glm, e):
            raise ValueError(f"{g} does not divide {f}")
        c = h[e] * ginv % p
        m = mono_div(e, glm)
        q[m] = c
        for ge, gc in g.terms.items():
            ne = tuple(a + b for a, b in zip(ge, m))
            v = (h.get(ne, 0) - c * gc) % p
            if v:
                h[ne] = v
            else:
                h.pop(ne, None)
    return Poly._raw(f.ring, q)


def quotient_by_element(I: Ideal, f: Poly) -> Ideal:
    """I : f."""
    if f.is_zero():
        return Ideal.unit(I.ring)
    meet = intersect(I, Ideal(I.ring, (f,)))
    return Ideal(I.ring, tuple(divide_exact(g, f) for g in meet.gens))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J = ∩_g (I : g) over the generators g of J."""
    I._check(J)
    result = None
    for g in J.gens:
        part = quotient_by_element(I, g)
        result = part if result is None else intersect(result, part)
        if is_contained(result, I):
            break
    return result if result is not None else Ideal.unit(I.ring)


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞, by iterating the colon until it stabilizes."""
    current = I
    while True:
        nxt = colon(current, J)
        if is_contained(nxt, current):
            return current
        current = nxt


def colon_saturate(I: Ideal, J: Ideal, mode: str = "colon") -> Ideal:
    if not J.gens:
        raise ValueError("colon by the zero ideal")
    if mode == "colon":
        return colon(I, J)
    if mode == "saturation":
        return saturate(I, J)
    raise ValueError(f"unknown mode {mode!r}")


def is_member(f: Poly, I: Ideal) -> bool:
    return reduced_gb(I).contains(f)


def is_contained(J: Ideal, I: Ideal) -> bool:
    gb = reduced_gb(I)
    return all(gb.contains(g) for g in J.gens)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return reduced_gb(I).elements == reduced_gb(J).elements


def membership_equal(x, I: Ideal, mode: str = "member") -> bool:
    if mode == "member":
        return is_member(x, I)
    if mode == "contained":
        return is_contained(x, I)
    if mode == "equal":
        return is_contained(x, I) and is_contained(I, x)
    raise ValueError(f"unknown mode {mode!r}")


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, tuple(ring.gens()))
