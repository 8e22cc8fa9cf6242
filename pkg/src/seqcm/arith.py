"""Prime-field scalars, exponent-vector monomials, monomial orders and sparse polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from operator import le, mul

DEFAULT_MODULUS = 32003

Monomial = tuple[int, ...]


class RingMismatchError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    """Raised when asking for the leading term of the zero polynomial."""


def is_prime(p: int) -> bool:
    from sympy import isprime

    return isprime(p)


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(int.__add__, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; the caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(map(le, a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(map(mul, a, b))


def monomials_of_degree(nvars: int, degree: int):
    """Yield all exponent vectors of the given total degree (lex-descending)."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


# -- orders ------------------------------------------------------------------

def _grevlex_key(e: Monomial) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


def _grevlex_neg(e: Monomial) -> tuple:
    return (-sum(e),) + tuple(reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``grevlex``, ``lex`` or ``block`` (grevlex on each block).

    ``key(a) > key(b)`` iff ``a > b``.  ``neg_key`` reverses the comparison and is
    what the reduction heaps use.
    """

    kind: str = "grevlex"
    elim: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.elim < 1:
            raise ValueError("block order needs elim >= 1")

    def key(self, e: Monomial) -> tuple:
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        k = self.elim
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])

    def neg_key(self, e: Monomial) -> tuple:
        if self.kind == "grevlex":
            return _grevlex_neg(e)
        if self.kind == "lex":
            return tuple(-x for x in e)
        k = self.elim
        return _grevlex_neg(e[:k]) + _grevlex_neg(e[k:])

    def __str__(self):
        return f"block({self.elim})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# -- ring --------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Polynomial ring k[names] over GF(modulus) with an active monomial order."""

    names: tuple[str, ...]
    modulus: int = DEFAULT_MODULUS
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order: MonomialOrder) -> Ring:
        return Ring(self.names, self.modulus, order)

    def same_field(self, other: Ring) -> bool:
        return self.names == other.names and self.modulus == other.modulus

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.modulus)

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c: int) -> Poly:
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, i: int | str) -> Poly:
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self) -> list[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e: Monomial, c: int = 1) -> Poly:
        return Poly(self, {tuple(e): c})

    def parse(self, s: str) -> Poly:
        from .parse import parse_polynomial

        return parse_polynomial(s, self)

    def symmetric(self, c: int) -> int:
        """Representative of c in (-p/2, p/2]."""
        c %= self.modulus
        return c - self.modulus if c > self.modulus // 2 else c


# -- polynomials -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Poly:
    """Sparse polynomial; ``terms`` maps exponent tuples to nonzero residues.

    Treat instances as immutable: ``terms`` is normalized at construction and
    never touched afterwards.
    """

    ring: Ring
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        p = self.ring.modulus
        n = self.ring.nvars
        clean = {}
        for e, c in self.terms.items():
            if len(e) != n:
                raise RingMismatchError(f"exponent {e} has wrong length for {n} variables")
            c %= p
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> Poly:
        # terms already reduced and zero-free
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "terms", terms)
        return obj

    def _check(self, other: Poly):
        if not self.ring.same_field(other.ring):
            raise RingMismatchError(f"{self.ring.names} vs {other.ring.names}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.same_field(other.ring) and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, self.ring.modulus, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.modulus
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.modulus
        return Poly._raw(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Poly:
        c %= self.ring.modulus
        if c == 0:
            return self.ring.zero()
        p = self.ring.modulus
        return Poly._raw(self.ring, {e: v * c % p for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.modulus
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Poly._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, m: Monomial, c: int = 1) -> Poly:
        p = self.ring.modulus
        c %= p
        if c == 0:
            return self.ring.zero()
        return Poly._raw(self.ring, {mono_mul(e, m): v * c % p for e, v in self.terms.items()})

    # -- order-dependent views --

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Monomial, int]]:
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[Monomial, int]:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        order = order or self.ring.order
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder | None = None) -> Poly:
        return self.scale(self.ring.inv(self.leading_term(order)[1]))

    @cached_property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    @cached_property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def uses_only(self, indices) -> bool:
        allowed = set(indices)
        return all(x == 0 or i in allowed for e in self.terms for i, x in enumerate(e))

    def embed(self, ring: Ring, positions: list[int]) -> Poly:
        """Map variable i of self.ring to variable positions[i] of ``ring``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, x in enumerate(e):
                ne[positions[i]] = x
            out[tuple(ne)] = c
        return Poly(ring, out)

    def __str__(self):
        from .parse import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Poly({self})"


def poly_arith(f: Poly, g: Poly | int, op: str) -> Poly:
    """Dispatch form of the ring operations: op in {add, sub, mul, scale}."""
    if op == "scale":
        return f.scale(g)
    if isinstance(g, Poly) and not f.ring.same_field(g.ring):
        raise RingMismatchError("polynomials live in different rings")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")
