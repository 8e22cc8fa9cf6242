"""Estimate p_F(M) with several seeded good sops per instance and report disagreements.

Only runs whose estimator flag is certified-constant or stabilized-differences
are compared; lower-bound-only runs are listed but not counted.
"""

import argparse

from seqcm.corpus import named_instances, random_dimension_filtered
from seqcm.invariants import estimate_p
from seqcm.monomial import NEG_INF

STABLE = ("certified-constant", "stabilized-differences")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[101, 202, 303])
    ap.add_argument("--random", type=int, default=12, help="random instances per filtration kind")
    ap.add_argument("--nmax", type=int, default=6)
    args = ap.parse_args()

    instances = (named_instances()
                 + random_dimension_filtered(args.random, seed=7)
                 + random_dimension_filtered(args.random, seed=8, trivial=True))
    disagreements = 0
    for inst in instances:
        r = estimate_p(inst.module, inst.filtration, seeds=tuple(args.seeds), nmax=args.nmax)
        ests = ["-inf" if run.estimate == NEG_INF else str(run.estimate) for run in r.runs]
        settled = {run.estimate for run in r.runs if run.flag in STABLE}
        status = "ok" if len(settled) <= 1 else "DISAGREE"
        disagreements += status != "ok"
        print(f"{inst.name:40s} {inst.filtration.kind:22s} {' '.join(ests):16s} "
              f"{r.flag:24s} {status}")
    print(f"{len(instances)} instances, {disagreements} disagreements")
    raise SystemExit(1 if disagreements else 0)


if __name__ == "__main__":
    main()
