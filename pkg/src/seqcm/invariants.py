"""Serre multiplicities, the function I_{F,M}(x(n)) and the p_F(M) estimator.

I_{F,M}(x(n)) = l(M/x(n)M) - sum_i n_1...n_{d_i} e(x_1..x_{d_i}; M_i), with
e(.; M_0) = l(M_0) when M_0 has finite length.  p_F(M) is the least degree of
a polynomial bounding it; here it is estimated from the diagonal n = (k,..,k).
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from itertools import product
from math import prod

from .arith import Ring
from .errors import (
    InternalInconsistencyError,
    NotParameterSystemError,
    UnstableMultiplicityError,
)
from .filtration import (
    FiltrationSpec,
    build_dimension_filtration,
    lift_filtration,
    trivial_filtration,
)
from .groebner import Ideal
from .monomial import NEG_INF
from .sop import ParameterSystem, find_good_sop, verify_good_sop
from .subquotient import Subquotient, as_subquotient, sq_dimension, sq_length

log = logging.getLogger(__name__)

FLAGS = ("certified-constant", "stabilized-differences", "lower-bound-only")
CLASSES = ("sCM-evidence", "sgCM-evidence", "neither")


class LechWarning(UserWarning):
    """l(N/x^[n]N) fell outside [n^s e, n^s l(N/xN)]."""


# -- multiplicities ----------------------------------------------------------

def _differences(seq: list, k: int) -> list:
    for _ in range(k):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


def hilbert_samuel(N: Subquotient, xs, upto: int, method: str = "hilbert") -> list[int]:
    """h(n) = l(N / q^{n+1} N) for n = 0..upto, q = (xs)."""
    q = Ideal(N.ring, tuple(xs))
    return [sq_length(N.mod_params(q.power(n + 1).gens), method) for n in range(upto + 1)]


def _require_sop(N: Subquotient, xs, s):
    if len(xs) != s:
        raise NotParameterSystemError(f"{len(xs)} elements for a module of dimension {s}")
    if sq_dimension(N.mod_params(xs)) > 0:
        raise NotParameterSystemError("the elements do not form a system of parameters")


def serre_multiplicity(
    N, xs, cap: int | None = None, method: str = "hilbert", lech: bool = True
) -> int:
    """e(xs; N) from the Hilbert-Samuel function; l(N) when N has finite length."""
    N = as_subquotient(N)
    xs = list(xs)
    s = sq_dimension(N)
    if s == NEG_INF:
        return 0
    _require_sop(N, xs, s)
    if s == 0:
        return sq_length(N, method)
    cap = s + 8 if cap is None else cap
    q = Ideal(N.ring, tuple(xs))
    h: list[int] = []
    e = None
    for n in range(cap + 1):
        h.append(sq_length(N.mod_params(q.power(n + 1).gens), method))
        diffs = _differences(h, s)
        if len(diffs) >= 3 and diffs[-1] == diffs[-2] == diffs[-3]:
            e = diffs[-1]
            break
    if e is None:
        raise UnstableMultiplicityError(
            f"s-th differences of the Hilbert-Samuel function did not settle by n = {cap}: {h}"
        )
    if lech:
        _lech_check(N, xs, e, s, method)
    return e


def _lech_check(N: Subquotient, xs, e: int, s: int, method: str, n: int = 4):
    base = sq_length(N.mod_params(xs), method)
    here = sq_length(N.mod_params([x**n for x in xs]), method)
    if not n**s * e <= here <= n**s * base:
        warnings.warn(
            f"length {here} of N/x^[{n}]N outside [{n**s * e}, {n**s * base}]", LechWarning
        )


def graded_multiplicity(N, xs) -> int:
    """e(xs; N) = deg(x_1)...deg(x_s) * e(N) for a homogeneous sop (independent route)."""
    from .monomial import pole_split, upoly_eval
    from .subquotient import sq_numerator

    N = as_subquotient(N)
    s = sq_dimension(N)
    if s == NEG_INF:
        return 0
    _require_sop(N, list(xs), s)
    _, rest = pole_split(sq_numerator(N))
    return prod(x.degree for x in xs) * upoly_eval(rest, 1)


@dataclass(frozen=True)
class MultiplicityTable:
    """e(x_1..x_{d_i}; M_i) for every nonzero member of the filtration."""

    dims: tuple
    values: tuple  # None for zero members

    def scaled_sum(self, n) -> int:
        total = 0
        for d, e in zip(self.dims, self.values):
            if e is None:
                continue
            total += prod(n[:d]) * e
        return total


def multiplicity_table(M, F: FiltrationSpec, xs, method: str = "hilbert") -> MultiplicityTable:
    xs = list(xs)
    values = []
    for i, d in enumerate(F.dims):
        if d == NEG_INF:
            values.append(None)
            continue
        values.append(serre_multiplicity(F.member(i), xs[:d], method=method))
    return MultiplicityTable(tuple(F.dims), tuple(values))


# -- the function I ----------------------------------------------------------

def i_function(M, F: FiltrationSpec, xs, n, table: MultiplicityTable | None = None,
               method: str = "hilbert") -> int:
    N = as_subquotient(M)
    xs = list(xs)
    n = tuple(n)
    if len(n) != len(xs) or any(k < 1 for k in n):
        raise ValueError(f"n must be {len(xs)} positive integers, got {n}")
    if table is None:
        table = multiplicity_table(N, F, xs, method)
    length = sq_length(N.mod_params([x**k for x, k in zip(xs, n)]), method)
    value = length - table.scaled_sum(n)
    if value < 0:
        raise InternalInconsistencyError(
            f"I(x({n})) = {length} - {table.scaled_sum(n)} < 0"
        )
    return value


def i_grid(M, F, xs, bound: int, table=None, method: str = "hilbert") -> dict:
    """I on the full grid {1..bound}^d."""
    if table is None:
        table = multiplicity_table(M, F, xs, method)
    return {
        n: i_function(M, F, xs, n, table, method)
        for n in product(range(1, bound + 1), repeat=len(xs))
    }


def diagonal(M, F, xs, nmax: int, table=None, method: str = "hilbert") -> list[int]:
    if table is None:
        table = multiplicity_table(M, F, xs, method)
    d = len(xs)
    return [i_function(M, F, xs, (k,) * d, table, method) for k in range(1, nmax + 1)]


def estimate_degree(samples) -> tuple:
    """(estimate, flag) for the degree of a polynomial matching the samples' growth.

    window 3: the least k whose k-th differences vanish on the last three
    entries gives degree k - 1.
    """
    samples = list(samples)
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    if all(v == samples[0] for v in samples):
        return (NEG_INF if samples[0] == 0 else 0), "certified-constant"
    top = len(samples) - 3
    for k in range(1, top + 1):
        if all(v == 0 for v in _differences(samples, k)[-3:]):
            return k - 1, "stabilized-differences"
    return top, "lower-bound-only"


def classify(estimate) -> str:
    if estimate == NEG_INF:
        return "sCM-evidence"
    if estimate <= 0:
        return "sgCM-evidence"
    return "neither"


_FLAG_RANK = {f: r for r, f in enumerate(FLAGS)}


@dataclass
class SopRun:
    sop: ParameterSystem
    table: MultiplicityTable
    diagonal: list
    estimate: int | float
    flag: str
    grid: dict = field(default_factory=dict)


@dataclass
class InvariantReport:
    filtration_kind: str
    filtration_dims: tuple
    runs: list
    estimate: int | float
    flag: str
    agreement: bool
    classification: str
    notes: list = field(default_factory=list)


def estimate_p(
    M,
    F: FiltrationSpec,
    seeds=(0,),
    nmax: int = 6,
    hint=None,
    sops=None,
    grid: int | None = None,
    method: str = "hilbert",
) -> InvariantReport:
    """Estimate p_F(M) from the diagonal of I, once per sop.

    The hint (if certified) is used as the first system; one more system is
    searched per seed.  ``sops`` replaces both with ready-made systems.
    """
    N = as_subquotient(M)
    systems = list(sops) if sops is not None else []
    if sops is None:
        if hint is not None:
            systems.append(find_good_sop(N, F, hint=hint))
        systems += [find_good_sop(N, F, seed=s) for s in seeds]
    if not systems:
        raise ValueError("no system of parameters to evaluate")
    runs = []
    for ps in systems:
        if not ps.certificate.ok:
            raise NotParameterSystemError(f"uncertified system: {ps.certificate.failures()}")
        xs = list(ps.elements)
        table = multiplicity_table(N, F, xs, method)
        if xs:
            diag = diagonal(N, F, xs, nmax, table, method)
        else:
            diag = [sq_length(N, method) - table.scaled_sum(())] * nmax
        est, flag = estimate_degree(diag)
        g = i_grid(N, F, xs, grid, table, method) if grid and xs else {}
        runs.append(SopRun(ps, table, diag, est, flag, g))
    overall = max(r.estimate for r in runs)
    flag = max((r.flag for r in runs), key=_FLAG_RANK.__getitem__)
    exact = [r.estimate for r in runs if r.flag != "lower-bound-only"]
    agreement = len(set(exact)) <= 1
    notes = []
    if not agreement:
        notes.append("per-sop estimates disagree; more samples are needed (nmax)")
    if flag == "lower-bound-only":
        notes.append("differences did not stabilize; the estimate is only a lower bound")
    if flag == "certified-constant" and len(set(map(tuple, (r.diagonal for r in runs)))) > 1:
        notes.append("constant diagonals differ between systems")
    return InvariantReport(
        F.kind, tuple(F.dims), runs, overall, flag, agreement, classify(overall), notes
    )


# -- cross-checks ------------------------------------------------------------

@dataclass
class TheoremBReport:
    p_D: InvariantReport
    pieces: list  # (i, InvariantReport) for D_i / D_{i-1}, i >= 1
    max_pieces: int | float
    match: bool
    finite_part_length: int
    notes: list = field(default_factory=list)


def theorem_b_report(M, seeds=(0,), nmax: int = 6, hint=None,
                     method: str = "hilbert") -> TheoremBReport:
    """Compare p_D(M) with max_i p(D_i/D_{i-1}) over the dimension filtration."""
    N = as_subquotient(M)
    D = build_dimension_filtration(N)
    whole = estimate_p(N, D, seeds, nmax, hint=hint, method=method)
    pieces = []
    for i in range(1, D.t + 1):
        Q = D.quotient(i)
        pieces.append((i, estimate_p(Q, trivial_filtration(Q), seeds, nmax, method=method)))
    top = max((r.estimate for _, r in pieces), default=NEG_INF)
    d0 = D.member(0)
    notes = ["dim V_M equals both sides by the characterization; it is not computed"]
    return TheoremBReport(whole, pieces, top, whole.estimate == top,
                          sq_length(d0, method) if D.dims[0] == 0 else 0, notes)


@dataclass
class FlatExtensionReport:
    k: int
    base: InvariantReport
    extended: InvariantReport
    predicted: int | float
    consistent: bool
    names: tuple


def extend_ring(ring: Ring, k: int) -> tuple[Ring, list[int]]:
    taken = set(ring.names)
    new = []
    j = 1
    while len(new) < k:
        name = f"Y{j}"
        if name not in taken:
            new.append(name)
        j += 1
    ext = Ring(tuple(new) + ring.names, ring.modulus, ring.order)
    return ext, [k + i for i in range(ring.nvars)]


def flat_extension_report(M, F: FiltrationSpec, k: int, seeds=(0,), nmax: int = 6,
                          hint=None, method: str = "hilbert") -> FlatExtensionReport:
    """p_{F⊗S}(M⊗S) for S = R[Y1..Yk] against the predicted k + p_F(M)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    N = as_subquotient(M)
    base = estimate_p(N, F, seeds, nmax, hint=hint, method=method)
    ext, positions = extend_ring(N.ring, k)
    G = lift_filtration(F, ext, positions)
    ys = [ext.var(i) for i in range(k)]
    systems = []
    for run in base.runs:
        xs = ys + [x.embed(ext, positions) for x in run.sop.elements]
        cert = verify_good_sop(G.module, G, xs)
        systems.append(ParameterSystem(tuple(xs), cert, run.sop.seed, "lifted"))
    extended = estimate_p(G.module, G, sops=systems, nmax=nmax, method=method)
    predicted = base.estimate if base.estimate == NEG_INF else k + base.estimate
    if extended.flag == "lower-bound-only":
        consistent = extended.estimate <= predicted
    else:
        consistent = extended.estimate == predicted
    return FlatExtensionReport(k, base, extended, predicted, consistent, ext.names)


def lech_bounds(N, xs, e: int, n: int) -> tuple[int, int]:
    """[n^s e, n^s l(N/xN)], the range l(N/x^[n]N) must lie in."""
    N = as_subquotient(N)
    s = len(xs)
    return n**s * e, n**s * sq_length(N.mod_params(xs))


__all__ = [
    "CLASSES", "FLAGS", "FlatExtensionReport", "InvariantReport", "LechWarning",
    "MultiplicityTable", "SopRun", "TheoremBReport", "classify", "diagonal",
    "estimate_degree", "estimate_p", "extend_ring", "flat_extension_report",
    "graded_multiplicity", "hilbert_samuel", "i_function", "i_grid", "lech_bounds",
    "multiplicity_table", "serre_multiplicity", "theorem_b_report",
]
