"""Compare Hilbert-series lengths with brute-force linear algebra on a random corpus."""

import argparse
from collections import Counter

from seqcm.corpus import finite_length_corpus
from seqcm.subquotient import sq_length


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--max-vars", type=int, default=4)
    args = ap.parse_args()

    corpus = finite_length_corpus(args.count, args.seed, args.max_vars)
    bad = []
    lengths = Counter()
    for N in corpus:
        a, b = sq_length(N, "hilbert"), sq_length(N, "bruteforce")
        lengths[b] += 1
        if a != b:
            bad.append((N, a, b))
    print(f"{len(corpus)} instances, {len(bad)} mismatches")
    print("length histogram:", dict(sorted(lengths.items())))
    for N, a, b in bad:
        print(f"  mismatch: lower={[str(g) for g in N.lower.gens]} hilbert={a} bruteforce={b}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
