"""Built-in modules, chiefly the mixed-dimension quotient used for acceptance.

R = k[X1..X5], I = (X1, X2)(X3, X4, X5), M = R/I, M_1 = (X1X2, X2^2) + I / I,
F: 0 ⊂ M_1 ⊂ M and x = (X1 + X4, X2 + X5, X3).  Then I_{F,M}(x(n)) = 1,
l(M/(M_1 + x(n)M)) = n1 n2 n3 + n1 + 1, p_F(M) = 0 and p(M/M_1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import DEFAULT_MODULUS, Poly, Ring
from .errors import InternalInconsistencyError
from .filtration import FiltrationSpec, build_dimension_filtration, trivial_filtration, user_filtration
from .groebner import Ideal
from .invariants import estimate_p, flat_extension_report, i_grid, multiplicity_table, theorem_b_report
from .monomial import NEG_INF
from .sop import find_good_sop
from .subquotient import CyclicModule, sq_length

VARIABLES = ("X1", "X2", "X3", "X4", "X5")
IDEAL = ("X1*X3", "X1*X4", "X1*X5", "X2*X3", "X2*X4", "X2*X5")
SUBMODULE = ("X1*X2", "X2^2")
SOP = ("X1+X4", "X2+X5", "X3")
SOURCE_NOTE = (
    "the source states R = k[[X1, X2, X3]] but the ideal involves X4 and X5 and dim M = 3; "
    "five variables are used"
)


@dataclass(frozen=True)
class MixedDimensionExample:
    ring: Ring
    ideal: Ideal
    module: CyclicModule
    submodule: Ideal  # M_1 as an ideal containing I
    filtration: FiltrationSpec
    sop: tuple[Poly, ...]

    @property
    def top_quotient(self) -> CyclicModule:
        """M/M_1 = R/(I + M_1)."""
        return CyclicModule(self.ring, self.submodule)


def mixed_dimension_example(modulus: int = DEFAULT_MODULUS) -> MixedDimensionExample:
    ring = Ring(VARIABLES, modulus)
    I = Ideal(ring, tuple(ring.parse(s) for s in IDEAL))
    M = CyclicModule(ring, I)
    J = Ideal(ring, tuple(ring.parse(s) for s in SUBMODULE)) + I
    F = user_filtration(M, [J])
    xs = tuple(ring.parse(s) for s in SOP)
    return MixedDimensionExample(ring, I, M, J, F, xs)


def length_formula(n) -> int:
    n1, n2, n3 = n
    return n1 * n2 * n3 + n1 + 1


def _expect(what: str, got, want):
    if got != want:
        raise InternalInconsistencyError(f"{what}: expected {want}, got {got}")


def run_mixed_dimension_example(modulus: int = DEFAULT_MODULUS, grid: int = 3, nmax: int = 6,
                                seeds=(0, 1), method: str = "hilbert") -> dict:
    """Run every check on the built-in example; raise on the first mismatch."""
    ex = mixed_dimension_example(modulus)
    M, F, xs = ex.module, ex.filtration, ex.sop
    ps = find_good_sop(M, F, hint=xs)
    _expect("hint certified", ps.source, "hint")
    table = multiplicity_table(M, F, xs, method)
    values = i_grid(M, F, xs, grid, table, method)
    _expect("I on the grid", set(values.values()), {1})

    lengths = {}
    for n in product(range(1, grid + 1), repeat=3):
        quotient = M.whole.quotient(ex.submodule).mod_params([x**k for x, k in zip(xs, n)])
        lengths[n] = sq_length(quotient, method)
        _expect(f"length at {n}", lengths[n], length_formula(n))

    p_F = estimate_p(M, F, seeds, nmax, hint=xs, method=method)
    _expect("p_F(M)", (p_F.estimate, p_F.flag), (0, "certified-constant"))
    Q = ex.top_quotient
    p_Q = estimate_p(Q, trivial_filtration(Q), seeds, nmax, hint=xs, method=method)
    _expect("p(M/M_1)", p_Q.estimate, 1)

    D = build_dimension_filtration(M)
    _expect("dimension filtration dims", D.dims, (NEG_INF, 2, 3))
    tb = theorem_b_report(M, seeds, nmax, hint=xs, method=method)
    _expect("dimension-filtration max formula", (tb.p_D.estimate, tb.max_pieces, tb.match), (0, 0, True))

    fe = flat_extension_report(M, F, 1, seeds[:1], nmax, hint=xs, method=method)
    _expect("flat extension", (fe.predicted, fe.extended.estimate), (1, 1))
    return {
        "sop": ps,
        "table": table,
        "grid": values,
        "lengths": lengths,
        "p_F": p_F,
        "p_top": p_Q,
        "dimension_filtration": D,
        "theorem_b": tb,
        "flat_extension": fe,
        "notes": [SOURCE_NOTE],
    }
