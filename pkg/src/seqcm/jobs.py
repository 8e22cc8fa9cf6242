"""Job files and reports.

A job is one JSON document::

    {"command": "p-estimate", "modulus": 32003,
     "variables": ["X1", "X2"], "ideal": ["X1*X2"],
     "upper": null,
     "filtration": {"kind": "user-supplied", "chain": [["X1"]]},
     "sop": ["X1+X2"],
     "seeds": [0, 1], "grid": 3, "nmax": 6, "k": 1, "method": "hilbert"}

``upper`` (optional) turns the module R/I into U/I with U = (upper) + I.
Without a filtration, ``filtration`` and ``theorem-b`` use the dimension
filtration and every other command the trivial one.

Reports carry ``"schema": 1``; -inf is written as ``"neg-infinity"`` and no
timing goes into the document, so equal jobs give byte-identical output.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .arith import DEFAULT_MODULUS, Poly, Ring
from .config import RunConfig
from .errors import InputError, NotParameterSystemError
from .filtration import (
    FiltrationSpec,
    build_dimension_filtration,
    trivial_filtration,
    user_filtration,
    verify_filtration,
)
from .groebner import Ideal, reduced_gb
from .invariants import (
    InvariantReport,
    estimate_p,
    flat_extension_report,
    i_grid,
    multiplicity_table,
    theorem_b_report,
)
from .monomial import NEG_INF, associated_primes, minimalize, primary_decomposition
from .sop import ParameterSystem, find_good_sop, verify_good_sop
from .subquotient import Subquotient, annihilator, sq_dimension, sq_length, sq_numerator

SCHEMA = 1
COMMANDS = (
    "analyze", "filtration", "sop", "invariant", "p-estimate",
    "theorem-b", "flat-ext", "verify", "example",
)
NEG_INF_TOKEN = "neg-infinity"


@dataclass
class JobSpec:
    command: str
    variables: list = field(default_factory=list)
    ideal: list = field(default_factory=list)
    modulus: int = DEFAULT_MODULUS
    upper: list | None = None
    filtration: dict | None = None
    sop: list | None = None
    seeds: list = field(default_factory=lambda: [0, 1])
    grid: int = 3
    nmax: int = 6
    k: int = 1
    method: str = "hilbert"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.command != "example" and not self.variables:
            raise InputError("a job needs a non-empty 'variables' list")
        if len(set(self.variables)) != len(self.variables):
            raise InputError(f"duplicate variable names in {self.variables}")
        if self.filtration is not None:
            kind = self.filtration.get("kind", "user-supplied")
            if kind not in ("user-supplied", "dimension-filtration", "trivial"):
                raise InputError(f"unknown filtration kind {kind!r}")

    @classmethod
    def from_dict(cls, data: dict) -> JobSpec:
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known - {"schema"}
        if extra:
            raise InputError(f"unknown job fields: {sorted(extra)}")
        return cls(**{k: v for k, v in data.items() if k in known})

    def config(self) -> RunConfig:
        try:
            return RunConfig(self.modulus, tuple(self.seeds), self.nmax, self.grid, self.k,
                             self.method)
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    def to_dict(self) -> dict:
        return asdict(self)


def load_job(path) -> JobSpec:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"job file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("a job file must hold a JSON object")
    return JobSpec.from_dict(data)


# -- building objects from a job ---------------------------------------------

@dataclass
class Context:
    ring: Ring
    module: Subquotient
    hint: tuple | None
    config: RunConfig


def _parse_all(ring: Ring, strings) -> tuple[Poly, ...]:
    try:
        return tuple(ring.parse(s) for s in strings)
    except ValueError as exc:  # ParseError included
        raise InputError(str(exc)) from exc


def build_context(job: JobSpec) -> Context:
    cfg = job.config()
    try:
        ring = Ring(tuple(job.variables), cfg.modulus)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    I = Ideal(ring, _parse_all(ring, job.ideal))
    U = Ideal.unit(ring) if job.upper is None else Ideal(ring, _parse_all(ring, job.upper)) + I
    module = Subquotient(U, I)
    hint = _parse_all(ring, job.sop) if job.sop else None
    return Context(ring, module, hint, cfg)


def build_filtration(ctx: Context, job: JobSpec, default: str = "trivial") -> FiltrationSpec:
    spec = job.filtration or {"kind": default}
    kind = spec.get("kind", "user-supplied")
    if kind == "trivial":
        return trivial_filtration(ctx.module)
    if kind == "dimension-filtration" and not spec.get("chain"):
        return build_dimension_filtration(ctx.module)
    chain = [Ideal(ctx.ring, _parse_all(ctx.ring, gens)) for gens in spec.get("chain", [])]
    F = user_filtration(ctx.module, chain)
    if kind == "dimension-filtration":
        F = FiltrationSpec(F.module, F.chain, F.dims, kind="dimension-filtration")
        verify_filtration(F).raise_if_failed()
    return F


# -- encoding ----------------------------------------------------------------

def enc(x):
    """JSON-ready, deterministic form of a payload value."""
    if isinstance(x, float) and x == NEG_INF:
        return NEG_INF_TOKEN
    if isinstance(x, Poly):
        return str(x)
    if isinstance(x, Ideal):
        return [str(g) for g in x.gens]
    if isinstance(x, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): enc(v)
                for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [enc(v) for v in x]
    return x


def enc_ideal(I: Ideal) -> list[str]:
    return [str(g) for g in reduced_gb(I).elements]


def enc_filtration(F: FiltrationSpec) -> dict:
    return {"kind": F.kind, "dims": enc(F.dims), "chain": [enc_ideal(J) for J in F.chain]}


def enc_sop(ps: ParameterSystem) -> dict:
    c = ps.certificate
    return {
        "elements": enc(ps.elements),
        "degrees": list(ps.degrees),
        "seed": ps.seed,
        "source": ps.source,
        "certificate": {
            "ok": c.ok,
            "finite_length": c.finite_length,
            "prefix_checks": {str(i): v for i, v in c.prefix_checks},
            "goodness": {str(i): v for i, v in c.goodness},
            "failures": c.failures(),
        },
    }


def enc_invariant_report(r: InvariantReport) -> dict:
    return {
        "filtration": {"kind": r.filtration_kind, "dims": enc(r.filtration_dims)},
        "estimate": enc(r.estimate),
        "flag": r.flag,
        "agreement": r.agreement,
        "classification": r.classification,
        "runs": [
            {
                "sop": enc_sop(run.sop),
                "multiplicities": enc(run.table.values),
                "diagonal": run.diagonal,
                "estimate": enc(run.estimate),
                "flag": run.flag,
                **({"grid": enc(run.grid)} if run.grid else {}),
            }
            for run in r.runs
        ],
        "notes": list(r.notes),
    }


# -- commands ----------------------------------------------------------------

def _get_sop(ctx: Context, F: FiltrationSpec) -> ParameterSystem:
    s = ctx.config.search
    return find_good_sop(ctx.module, F, seed=ctx.config.seeds[0] if ctx.config.seeds else 0,
                         max_degree=s.max_degree, max_tries=s.max_tries, hint=ctx.hint)


def _cmd_analyze(ctx: Context, job: JobSpec) -> dict:
    N = ctx.module
    d = sq_dimension(N)
    out = {
        "dimension": enc(d),
        "hilbert_numerator": list(sq_numerator(N)),
        "annihilator": enc_ideal(annihilator(N)),
        "zero_module": N.is_zero(),
    }
    if d != NEG_INF and d <= 0:
        out["length"] = sq_length(N, ctx.config.method)
    if N.lower.is_monomial() and N.lower.gens:
        mono = minimalize([e for g in N.lower.gens for e in g.terms], ctx.ring.nvars)
        if not mono.is_unit:
            names = ctx.ring.names
            out["primary_decomposition"] = [
                {
                    "component": [str(ctx.ring.monomial(e)) for e in c.component.sorted_gens()],
                    "prime": [names[i] for i in sorted(c.prime)],
                    "dim": c.dim,
                }
                for c in primary_decomposition(mono)
            ]
            out["associated_primes"] = [
                {"prime": [names[i] for i in sorted(a.prime)], "dim": a.dim, "assh": a.assh}
                for a in associated_primes(mono)
            ]
    return out


def _cmd_filtration(ctx: Context, job: JobSpec) -> dict:
    F = build_filtration(ctx, job, default="dimension-filtration")
    check = verify_filtration(F)
    return {"filtration": enc_filtration(F), "ok": check.ok,
            "failures": [[i, m] for i, m in check.failures]}


def _cmd_sop(ctx: Context, job: JobSpec) -> dict:
    F = build_filtration(ctx, job)
    return {"filtration": enc_filtration(F), "sop": enc_sop(_get_sop(ctx, F))}


def _cmd_invariant(ctx: Context, job: JobSpec) -> dict:
    F = build_filtration(ctx, job)
    ps = _get_sop(ctx, F)
    xs = list(ps.elements)
    table = multiplicity_table(ctx.module, F, xs, ctx.config.method)
    values = i_grid(ctx.module, F, xs, ctx.config.grid, table, ctx.config.method) if xs else {}
    return {
        "filtration": enc_filtration(F),
        "sop": enc_sop(ps),
        "multiplicities": enc(table.values),
        "grid_bound": ctx.config.grid,
        "values": enc(values),
        "min": min(values.values(), default=None),
        "max": max(values.values(), default=None),
    }


def _estimate(ctx: Context, F: FiltrationSpec) -> InvariantReport:
    c = ctx.config
    return estimate_p(ctx.module, F, c.seeds, c.nmax, hint=ctx.hint, method=c.method)


def _cmd_p_estimate(ctx: Context, job: JobSpec) -> dict:
    F = build_filtration(ctx, job)
    return {"filtration": enc_filtration(F), "report": enc_invariant_report(_estimate(ctx, F))}


def _cmd_theorem_b(ctx: Context, job: JobSpec) -> dict:
    c = ctx.config
    tb = theorem_b_report(ctx.module, c.seeds, c.nmax, hint=ctx.hint, method=c.method)
    return {
        "p_D": enc(tb.p_D.estimate),
        "p_D_report": enc_invariant_report(tb.p_D),
        "pieces": [{"index": i, "estimate": enc(r.estimate), "flag": r.flag} for i, r in tb.pieces],
        "max_pieces": enc(tb.max_pieces),
        "match": tb.match,
        "finite_part_length": tb.finite_part_length,
        "dim_V_M": "equal to both sides by theorem; not computed",
        "notes": tb.notes,
    }


def _cmd_flat_ext(ctx: Context, job: JobSpec) -> dict:
    c = ctx.config
    F = build_filtration(ctx, job)
    fe = flat_extension_report(ctx.module, F, c.k, c.seeds, c.nmax, hint=ctx.hint,
                               method=c.method)
    return {
        "k": fe.k,
        "variables": list(fe.names),
        "p_F": enc(fe.base.estimate),
        "predicted": enc(fe.predicted),
        "estimated": enc(fe.extended.estimate),
        "flag": fe.extended.flag,
        "consistent": fe.consistent,
        "extended_report": enc_invariant_report(fe.extended),
    }


def _cmd_verify(ctx: Context, job: JobSpec) -> dict:
    F = build_filtration(ctx, job)
    check = verify_filtration(F)
    out = {"filtration": enc_filtration(F), "filtration_ok": check.ok,
           "filtration_failures": [[i, m] for i, m in check.failures]}
    if ctx.hint is None:
        raise NotParameterSystemError("verify needs a 'sop' list in the job")
    cert = verify_good_sop(ctx.module, F, ctx.hint)
    out["sop"] = enc_sop(ParameterSystem(ctx.hint, cert, None, "hint"))
    return out


def _cmd_example(job: JobSpec) -> dict:
    from .examples import IDEAL, SUBMODULE, VARIABLES, run_mixed_dimension_example

    cfg = job.config()
    r = run_mixed_dimension_example(cfg.modulus, cfg.grid, cfg.nmax, cfg.seeds, cfg.method)
    return {
        "variables": list(VARIABLES),
        "ideal": list(IDEAL),
        "submodule": list(SUBMODULE),
        "sop": enc_sop(r["sop"]),
        "multiplicities": enc(r["table"].values),
        "I_values": enc(r["grid"]),
        "I_identically_one": set(r["grid"].values()) == {1},
        "lengths_M_mod_M1": enc(r["lengths"]),
        "length_formula": "n1*n2*n3 + n1 + 1",
        "p_F": enc(r["p_F"].estimate),
        "p_F_flag": r["p_F"].flag,
        "p_F_report": enc_invariant_report(r["p_F"]),
        "p_M_mod_M1": enc(r["p_top"].estimate),
        "strict_inequality": r["p_F"].estimate < r["p_top"].estimate,
        "dimension_filtration": enc_filtration(r["dimension_filtration"]),
        "theorem_b": {
            "p_D": enc(r["theorem_b"].p_D.estimate),
            "pieces": [enc(x.estimate) for _, x in r["theorem_b"].pieces],
            "match": r["theorem_b"].match,
        },
        "flat_extension_k1": {
            "predicted": enc(r["flat_extension"].predicted),
            "estimated": enc(r["flat_extension"].extended.estimate),
        },
        "notes": r["notes"],
    }


_DISPATCH = {
    "analyze": _cmd_analyze,
    "filtration": _cmd_filtration,
    "sop": _cmd_sop,
    "invariant": _cmd_invariant,
    "p-estimate": _cmd_p_estimate,
    "theorem-b": _cmd_theorem_b,
    "flat-ext": _cmd_flat_ext,
    "verify": _cmd_verify,
}


def run_job(job: JobSpec) -> dict:
    """Run one job and return the report document (errors propagate)."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if job.command == "example":
            result = _cmd_example(job)
        else:
            result = _DISPATCH[job.command](build_context(job), job)
    return {
        "schema": SCHEMA,
        "command": job.command,
        "job": job.to_dict(),
        "result": result,
        "warnings": sorted({str(w.message) for w in caught}),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def render_table(report: dict) -> str:
    """Indented ``key: value`` view of a report."""
    lines = [f"schema {report['schema']}  command {report['command']}"]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _flat(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_short(v)}")
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                if isinstance(v, (dict, list)) and not _flat(v):
                    lines.append(f"{pad}[{i}]")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {_short(v)}")

    walk(report["result"], 0)
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _short(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)
