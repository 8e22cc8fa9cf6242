"""Filtrations M_0 ⊂ ... ⊂ M_t = M with strictly increasing dimensions.

A filtration of U/V is stored as the chain of ideals V ⊆ J_0 ⊆ ... ⊆ J_t = U,
so that M_i = J_i/V.  The dimension filtration is built only for monomial V
with U = R; any other chain can be supplied by the user and verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import FiltrationError, InternalInconsistencyError, UnsupportedConstructionError
from .groebner import Ideal, ideals_equal, irrelevant_ideal, is_contained, saturate
from .monomial import NEG_INF, MonomialIdeal, intersect_all, minimalize, primary_decomposition
from .subquotient import CyclicModule, Subquotient, as_subquotient, sq_dimension

KINDS = ("dimension-filtration", "user-supplied", "trivial")


@dataclass(frozen=True)
class FiltrationSpec:
    module: Subquotient
    chain: tuple[Ideal, ...]  # J_0 ⊆ ... ⊆ J_t, with J_t = U
    dims: tuple = field(default=())
    kind: str = "user-supplied"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown filtration kind {self.kind!r}")
        if not self.dims:
            object.__setattr__(self, "dims", tuple(_dim_of(self.module, J) for J in self.chain))

    @property
    def t(self) -> int:
        return len(self.chain) - 1

    def member(self, i: int) -> Subquotient:
        return Subquotient(self.chain[i], self.module.lower)

    def quotient(self, i: int) -> Subquotient:
        """M_i / M_{i-1} for i >= 1."""
        return Subquotient(self.chain[i], self.chain[i - 1])


def _dim_of(module: Subquotient, J: Ideal):
    return sq_dimension(Subquotient(J, module.lower))


def _as_ideal(ring, mono: MonomialIdeal) -> Ideal:
    return Ideal(ring, tuple(ring.monomial(e) for e in mono.sorted_gens()))


def _monomial_of(ideal: Ideal) -> MonomialIdeal:
    return minimalize([e for g in ideal.gens for e in g.terms], ideal.ring.nvars)


def trivial_filtration(M) -> FiltrationSpec:
    """0 ⊂ M; every system of parameters is good for it."""
    N = as_subquotient(M)
    return FiltrationSpec(N, (N.lower, N.upper), kind="trivial")


def user_filtration(M, submodules, verify: bool = True) -> FiltrationSpec:
    """Chain 0 = M_0 ⊂ M_1 ⊂ ... ⊂ M from ideals J_i (the lower ideal is added).

    A zero M_0 is prepended unless the first supplied member is already zero.
    """
    N = as_subquotient(M)
    chain = tuple(J + N.lower for J in submodules) + (N.upper,)
    if not is_contained(chain[0], N.lower):
        chain = (N.lower,) + chain
    F = FiltrationSpec(N, chain, kind="user-supplied")
    if verify:
        check = verify_filtration(F)
        if not check.ok:
            raise FiltrationError(check.failures)
    return F


def _require_monomial_cyclic(M) -> tuple[CyclicModule, MonomialIdeal]:
    N = as_subquotient(M)
    ring = N.ring
    if not is_contained(Ideal.unit(ring), N.upper):
        raise UnsupportedConstructionError(
            "automatic dimension filtration needs a cyclic module R/I; supply a filtration"
        )
    if not N.lower.is_monomial():
        raise UnsupportedConstructionError(
            "automatic dimension filtration needs a monomial ideal; supply a filtration "
            "and run verify instead"
        )
    return CyclicModule(ring, N.lower), _monomial_of(N.lower)


def build_dimension_filtration(M) -> FiltrationSpec:
    """D_0 ⊂ D_1 ⊂ ... ⊂ D_t = M from the primary decomposition of a monomial I.

    D_i is cut out by the components N(p) with dim R/p >= dim D_{i+1}.  A zero
    D_0 (dimension -inf) is prepended when M has no finite-length part.
    """
    cyc, mono = _require_monomial_cyclic(M)
    ring = cyc.ring
    n = ring.nvars
    N = cyc.whole
    if mono.is_unit:
        return FiltrationSpec(N, (N.lower, N.upper), kind="dimension-filtration")
    comps = primary_decomposition(mono)
    levels = sorted({c.dim for c in comps})
    chain: list[Ideal] = []
    dims: list = []
    if levels[0] > 0:
        chain.append(N.lower)
        dims.append(NEG_INF)
    for j, a in enumerate(levels[:-1]):
        above = [c.component for c in comps if c.dim >= levels[j + 1]]
        chain.append(_as_ideal(ring, intersect_all(above, n)))
        dims.append(a)
    chain.append(N.upper)
    dims.append(levels[-1])
    F = FiltrationSpec(N, tuple(chain), tuple(dims), kind="dimension-filtration")

    # D_0 must be the m-torsion H^0_m(M) = (I : m^inf)/I
    sat = saturate(N.lower, irrelevant_ideal(ring))
    if not ideals_equal(sat, chain[0]):
        raise InternalInconsistencyError("D_0 differs from the saturation (I : m^inf)")
    failures = _maximality_failures(F, comps)
    if failures:
        raise InternalInconsistencyError(f"dimension filtration not maximal: {failures}")
    return F


def _maximality_failures(F: FiltrationSpec, comps, limit: int = 10) -> list:
    """Any component intersection strictly between D_i and D_{i+1} must reach dim D_{i+1}."""
    if len(comps) > limit:
        return []
    n = F.module.ring.nvars
    lower = _monomial_of(F.module.lower)
    members = [_monomial_of(J) for J in F.chain[:-1]]
    candidates = set()
    for r in range(1, len(comps) + 1):
        for subset in combinations(comps, r):
            candidates.add(intersect_all([c.component for c in subset], n))
    failures = []
    for i, Di in enumerate(members):
        upper = members[i + 1] if i + 1 < len(members) else None
        for J in candidates:
            if J == Di or not J.contains_ideal(Di):
                continue
            if upper is not None and not upper.contains_ideal(J):
                continue
            d = sq_dimension(Subquotient(_as_ideal(F.module.ring, J + lower), F.module.lower))
            if d < F.dims[i + 1]:
                failures.append((i, sorted(J.gens)))
    return failures


@dataclass
class FiltrationCheck:
    ok: bool
    dims: tuple
    failures: list  # (index, message)

    def raise_if_failed(self):
        if not self.ok:
            raise FiltrationError(self.failures)


def verify_filtration(F: FiltrationSpec) -> FiltrationCheck:
    N = F.module
    failures = []
    if not is_contained(N.lower, F.chain[0]):
        failures.append((0, "M_0 does not contain the lower ideal"))
    for i in range(F.t):
        if not is_contained(F.chain[i], F.chain[i + 1]):
            failures.append((i, f"containment M_{i} ⊆ M_{i + 1} fails"))
    if not (is_contained(F.chain[-1], N.upper) and is_contained(N.upper, F.chain[-1])):
        failures.append((F.t, "last member is not the whole module"))
    dims = tuple(_dim_of(N, J) for J in F.chain)
    for i in range(F.t):
        if not dims[i] < dims[i + 1]:
            failures.append((i, f"dimension condition fails: dim M_{i} = {dims[i]} "
                                f">= dim M_{i + 1} = {dims[i + 1]}"))
    if dims[-1] != sq_dimension(N):
        failures.append((F.t, "dim M_t differs from dim M"))
    if tuple(F.dims) != dims:
        failures.append((0, f"cached dims {F.dims} differ from recomputed {dims}"))
    if F.kind == "dimension-filtration" and N.lower.is_monomial() and not failures:
        D = build_dimension_filtration(N)
        if len(D.chain) != len(F.chain) or not all(
            ideals_equal(a, b) for a, b in zip(D.chain, F.chain)
        ):
            failures.append((0, "chain differs from the dimension filtration"))
    return FiltrationCheck(not failures, dims, failures)


def embed_in_dimension_filtration(F: FiltrationSpec, D: FiltrationSpec) -> list[int]:
    """Indices i_j with M_j ⊆ D_{i_j} and dim M_j = dim D_{i_j}; -1 marks a zero M_j."""
    out = []
    for j, J in enumerate(F.chain):
        if F.dims[j] == NEG_INF:
            out.append(-1)
            continue
        hits = [i for i, d in enumerate(D.dims) if d == F.dims[j]]
        if not hits or not is_contained(J, D.chain[hits[0]]):
            raise InternalInconsistencyError(f"M_{j} does not sit in a dimension-filtration step")
        out.append(hits[0])
    return out


def lift_filtration(F: FiltrationSpec, ring, positions) -> FiltrationSpec:
    """Image of F under the flat extension R -> R[new variables]."""
    def lift(I: Ideal) -> Ideal:
        return Ideal(ring, tuple(g.embed(ring, positions) for g in I.gens))

    N = Subquotient(lift(F.module.upper), lift(F.module.lower))
    kind = "trivial" if F.kind == "trivial" else "user-supplied"
    return FiltrationSpec(N, tuple(lift(J) for J in F.chain), kind=kind)
