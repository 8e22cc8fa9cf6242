"""Small named instances and random generators for tests and scans."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .arith import DEFAULT_MODULUS, Poly, Ring
from .filtration import FiltrationSpec, build_dimension_filtration, trivial_filtration
from .groebner import Ideal
from .monomial import NEG_INF, minimalize, mono_dimension
from .subquotient import CyclicModule, Subquotient, sq_dimension


@dataclass(frozen=True)
class Instance:
    name: str
    module: Subquotient
    filtration: FiltrationSpec
    hint: tuple | None = None


def _cyclic(names, gens, modulus=DEFAULT_MODULUS) -> CyclicModule:
    ring = Ring(tuple(names), modulus)
    return CyclicModule(ring, Ideal(ring, tuple(ring.parse(g) for g in gens)))


def _dim_filtered(name, names, gens) -> Instance:
    M = _cyclic(names, gens)
    return Instance(name, M.whole, build_dimension_filtration(M))


def _trivial(name, names, gens, hint=None) -> Instance:
    M = _cyclic(names, gens)
    xs = tuple(M.ring.parse(h) for h in hint) if hint else None
    return Instance(name, M.whole, trivial_filtration(M), xs)


def _mixed() -> Instance:
    from .examples import mixed_dimension_example

    ex = mixed_dimension_example()
    return Instance("mixed-dimension", ex.module.whole, ex.filtration, ex.sop)


def _mixed_top() -> Instance:
    from .examples import mixed_dimension_example

    ex = mixed_dimension_example()
    Q = ex.top_quotient
    return Instance("mixed-dimension-top", Q.whole, trivial_filtration(Q), ex.sop)


X2 = ("X1", "X2")
X3 = ("X1", "X2", "X3")
X4 = ("X1", "X2", "X3", "X4")

NAMED: dict[str, Callable[[], Instance]] = {
    "mixed-dimension": _mixed,
    "mixed-dimension-top": _mixed_top,
    "polynomial-ring": lambda: _trivial("polynomial-ring", X2, [], ["X1", "X2"]),
    "hypersurface": lambda: _trivial("hypersurface", X2, ["X1*X2"]),
    "embedded-point": lambda: _dim_filtered("embedded-point", X2, ["X1^2", "X1*X2"]),
    "plane-and-line": lambda: _dim_filtered("plane-and-line", X3, ["X1*X2", "X1*X3"]),
    "two-planes": lambda: _dim_filtered(
        "two-planes", X4, ["X1*X3", "X1*X4", "X2*X3", "X2*X4"]
    ),
    "two-planes-trivial": lambda: _trivial(
        "two-planes-trivial", X4, ["X1*X3", "X1*X4", "X2*X3", "X2*X4"]
    ),
    "cross-embedded": lambda: _dim_filtered("cross-embedded", X3, ["X1^2*X2", "X1*X2^2"]),
    "fat-point-line": lambda: _dim_filtered("fat-point-line", X3, ["X1^2", "X1*X2", "X1*X3"]),
    "triple-hypersurface": lambda: _trivial("triple-hypersurface", X3, ["X1*X2*X3"]),
    "plane-and-line-trivial": lambda: _trivial(
        "plane-and-line-trivial", X3, ["X1*X2", "X1*X3"]
    ),
}


def named_instances(names=None) -> list[Instance]:
    return [NAMED[n]() for n in (names or NAMED)]


# -- random corpora ----------------------------------------------------------

def random_monomial_ideal(rng: random.Random, nvars: int, ngens: int, max_deg: int,
                          min_deg: int = 1):
    """``ngens`` random draws (duplicates merge, so possibly fewer generators)."""
    gens = set()
    for _ in range(ngens):
        deg = rng.randint(min_deg, max_deg)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        gens.add(tuple(e))
    return minimalize(gens, nvars)


def random_linear_form(rng: random.Random, ring: Ring, support: int | None = None) -> Poly:
    """Random linear form on ``support`` randomly chosen variables (all by default)."""
    p = ring.modulus
    n = ring.nvars
    chosen = range(n) if support is None else rng.sample(range(n), min(support, n))
    terms = {}
    for i in chosen:
        c = rng.choice((1, p - 1)) if rng.random() < 0.5 else rng.randrange(1, p)
        terms[tuple(int(j == i) for j in range(n))] = c
    return Poly(ring, terms)


def finite_length_corpus(count: int = 120, seed: int = 2024, max_vars: int = 4) -> list:
    """Subquotients R/(I + (l_1..l_r)) of finite length.

    I is a random monomial ideal in at most ``max_vars`` variables and the
    l_j are 1-3 sparse random linear forms, at least dim R/I of them.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_vars)
        ring = Ring(tuple(f"X{i + 1}" for i in range(n)))
        mono = random_monomial_ideal(rng, n, rng.randint(1, 5), rng.randint(2, 4), min_deg=2)
        d = mono_dimension(mono)
        if d == NEG_INF or d > 3:
            continue
        # usually exactly d forms, so the length is a multiplicity rather than 1
        r = d if d and rng.random() < 0.75 else min(d + 1, 3)
        forms = [random_linear_form(rng, ring, rng.randint(1, n)) for _ in range(max(r, 1))]
        forms = [f for f in forms if f]
        I = Ideal(ring, tuple(ring.monomial(e) for e in mono.sorted_gens()) + tuple(forms))
        N = CyclicModule(ring, I).whole
        dim = sq_dimension(N)
        if dim == NEG_INF or dim > 0:
            continue
        out.append(N)
    return out


def random_dimension_filtered(count: int, seed: int = 7, nvars: int = 3,
                              trivial: bool = False) -> list[Instance]:
    """Random monomial quotients with their dimension (or trivial) filtrations."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        mono = random_monomial_ideal(rng, nvars, rng.randint(2, 5), 3)
        if mono_dimension(mono) in (NEG_INF, 0):
            continue
        ring = Ring(tuple(f"X{i + 1}" for i in range(nvars)))
        M = CyclicModule(ring, Ideal(ring, tuple(ring.monomial(e) for e in mono.sorted_gens())))
        name = "random:" + ",".join(str(ring.monomial(e)) for e in mono.sorted_gens())
        F = trivial_filtration(M) if trivial else build_dimension_filtration(M)
        out.append(Instance(name, M.whole, F))
    return out
