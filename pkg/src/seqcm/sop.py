"""Good systems of parameters: randomized search and certification.

x_1, ..., x_d is good for F when M_i ∩ (x_{d_i+1}, ..., x_d)M = 0 for every
i < t.  The search fills the slots from x_d down to x_1, drawing each x_j from
an ideal that kills M/N_i for every member M_i with d_i < j, where N_i is a
submodule meeting M_i in zero.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .arith import Poly, monomials_of_degree
from .errors import NotHomogeneousError, SearchFailureError
from .filtration import FiltrationSpec, _monomial_of
from .groebner import Ideal, colon, intersect, is_contained
from .monomial import NEG_INF, primary_decomposition
from .subquotient import Subquotient, as_subquotient, sq_dimension, zero_intersection_check

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SopCertificate:
    n_params: int
    dim: int | float
    finite_length: bool
    prefix_checks: tuple = ()  # (i, x_1..x_{d_i} is a sop of M_i)
    goodness: tuple = ()  # (i, M_i ∩ (x_{d_i+1}..x_d)M = 0)

    @property
    def ok(self) -> bool:
        return (
            self.n_params == self.dim
            and self.finite_length
            and all(v for _, v in self.prefix_checks)
            and all(v for _, v in self.goodness)
        )

    def failures(self) -> list[str]:
        out = []
        if self.n_params != self.dim:
            out.append(f"(a) {self.n_params} elements for a module of dimension {self.dim}")
        if not self.finite_length:
            out.append("(a) M/(x)M is not of finite length")
        out += [f"(b) x_1..x_d_{i} is not a sop of M_{i}" for i, v in self.prefix_checks if not v]
        out += [f"(c) M_{i} meets (x_d_{i}+1..x_d)M" for i, v in self.goodness if not v]
        return out


@dataclass(frozen=True)
class ParameterSystem:
    elements: tuple[Poly, ...]
    certificate: SopCertificate
    seed: int | None = None
    source: str = "search"  # or "hint", "lifted"

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(x.degree for x in self.elements)

    def powers(self, n) -> list[Poly]:
        return [x**k for x, k in zip(self.elements, n)]


def verify_good_sop(M, F: FiltrationSpec, xs) -> SopCertificate:
    """Check (a) finite length of M/(x)M, (b) prefixes are sops of the M_i, (c) goodness."""
    N = as_subquotient(M)
    xs = list(xs)
    for x in xs:
        if not x.is_homogeneous:
            raise NotHomogeneousError(f"parameter {x} is not homogeneous")
    d = sq_dimension(N)
    finite = sq_dimension(N.mod_params(xs)) <= 0 if xs else d <= 0
    prefix = []
    good = []
    for i, di in enumerate(F.dims):
        if di == NEG_INF:
            continue
        Mi = F.member(i)
        if di > 0:
            q = xs[:di]
            prefix.append((i, len(q) == di and sq_dimension(Mi.mod_params(q)) <= 0))
        if i < F.t:
            good.append((i, zero_intersection_check(N, F.chain[i], xs[di:])))
    return SopCertificate(len(xs), d, finite, tuple(prefix), tuple(good))


def _killing_ideals(N: Subquotient, F: FiltrationSpec) -> dict:
    """For each nonzero proper M_i, an ideal C_i with C_i·M ⊆ N_i and N_i ∩ M_i = 0.

    Monomial lower ideal: N_i is the intersection of the primary components that
    do not contain M_i, so C_i = ∩ (component : U).  Otherwise C_i = Ann(M_i), a
    necessary condition only; the final certificate settles goodness.
    """
    ring = N.ring
    out = {}
    if N.lower.is_monomial() and N.lower.gens:
        comps = primary_decomposition(_monomial_of(N.lower))
        comp_ideals = [Ideal(ring, tuple(ring.monomial(e) for e in c.component.sorted_gens()))
                       for c in comps]
        live = [Q for Q in comp_ideals if not is_contained(N.upper, Q)]
        for i in range(F.t):
            if F.dims[i] == NEG_INF:
                continue
            J = F.chain[i]
            C = None
            for Q in live:
                if is_contained(J, Q):
                    continue
                part = colon(Q, N.upper)
                C = part if C is None else intersect(C, part)
            out[i] = C if C is not None else Ideal.unit(ring)
    else:
        for i in range(F.t):
            if F.dims[i] == NEG_INF:
                continue
            out[i] = colon(N.lower, F.chain[i])
    return out


def _slot_ideal(j: int, F: FiltrationSpec, killers: dict, cache: dict) -> Ideal:
    idx = tuple(i for i in killers if F.dims[i] < j)
    if idx not in cache:
        C = Ideal.unit(F.module.ring)
        for i in idx:
            C = killers[i] if C.gens == (F.module.ring.one(),) else intersect(C, killers[i])
        cache[idx] = C
    return cache[idx]


def _draw_coefficient(rng: random.Random, p: int) -> int:
    if rng.random() < 0.5:
        return rng.choice((0, 1, p - 1))
    return rng.randrange(p)


def _candidate(C: Ideal, degree: int, rng: random.Random) -> Poly | None:
    ring = C.ring
    spanning = []
    for g in C.gens:
        if g.degree <= degree:
            for m in monomials_of_degree(ring.nvars, degree - g.degree):
                spanning.append(g.mul_monomial(m))
    if not spanning:
        return None
    for _ in range(8):
        x = ring.zero()
        for s in spanning:
            c = _draw_coefficient(rng, ring.modulus)
            if c:
                x = x + s.scale(c)
        if x:
            return x
    return None


def find_good_sop(
    M,
    F: FiltrationSpec,
    seed: int = 0,
    max_degree: int = 3,
    max_tries: int = 64,
    hint=None,
) -> ParameterSystem:
    """Certified good system of parameters for F (a valid hint is accepted as is)."""
    N = as_subquotient(M)
    if hint is not None:
        hint = tuple(hint)
        cert = verify_good_sop(N, F, hint)
        if cert.ok:
            return ParameterSystem(hint, cert, None, "hint")
        log.warning("sop hint rejected: %s", "; ".join(cert.failures()))

    d = sq_dimension(N)
    if d == NEG_INF or d == 0:
        cert = verify_good_sop(N, F, ())
        return ParameterSystem((), cert, seed)
    rng = random.Random(seed)
    killers = _killing_ideals(N, F)
    cache: dict = {}
    per_degree = max(1, max_tries // max_degree)
    last = None
    for _restart in range(4):
        chosen: list[Poly] = []  # x_d first
        for j in range(d, 0, -1):
            C = _slot_ideal(j, F, killers, cache)
            accepted = None
            tries = 0
            for degree in range(1, max_degree + 1):
                for _ in range(per_degree):
                    if tries >= max_tries:
                        break
                    tries += 1
                    x = _candidate(C, degree, rng)
                    if x is None:
                        break
                    got = sq_dimension(N.mod_params([x] + chosen[::-1]))
                    last = (j, degree, got)
                    if got == j - 1:
                        accepted = x
                        break
                if accepted is not None:
                    break
            if accepted is None:
                raise SearchFailureError(
                    f"no parameter found for slot {j} after {tries} tries",
                    prefix=tuple(chosen[::-1]),
                    last_check=last,
                )
            chosen.append(accepted)
        xs = tuple(chosen[::-1])
        cert = verify_good_sop(N, F, xs)
        if cert.ok:
            return ParameterSystem(xs, cert, seed)
        log.info("candidate system failed certification: %s", cert.failures())
    raise SearchFailureError("no certified good system of parameters", prefix=xs, last_check=last)
