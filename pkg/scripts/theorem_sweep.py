"""Run every registered theorem check over the catalog and a random corpus, and print pass rates.

    python3 scripts/theorem_sweep.py --count 220 --seed 0 --primes 2 3
"""

import argparse
import time

from nlie.catalog import STANDARD_NAMES, build
from nlie.generators import RandomAlgebraConfig, random_algebras
from nlie.linalg import Field
from nlie.theorems import sweep


def main():
    ap = argparse.ArgumentParser(description="theorem checks over catalog and random algebras")
    ap.add_argument("--count", type=int, default=220, help="number of random algebras")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-dim", type=int, default=4)
    ap.add_argument("--no-catalog", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true", help="print each instance as it finishes")
    args = ap.parse_args()

    instances = []
    if not args.no_catalog:
        instances += [(f"{n} over GF({p})", build(n, Field.gf(p))) for p in args.primes for n in STANDARD_NAMES]
    config = RandomAlgebraConfig(max_dim=args.max_dim, primes=tuple(args.primes))
    instances += [(f"random #{i} {a!r}", a) for i, a in enumerate(random_algebras(args.count, args.seed, config))]

    start = time.perf_counter()
    tally = sweep(instances, progress=print if args.verbose else None)
    elapsed = time.perf_counter() - start

    width = max(len(n) for n in tally.total)
    for name in tally.total:
        tag = " [char 0]" if tally.char0[name] else ""
        print(f"{name:<{width}}  {tally.passed[name]:>4}/{tally.total[name]:<4} {100 * tally.rate(name):6.1f}%{tag}")
    print(f"\n{len(instances)} algebras in {elapsed:.1f}s; {len(tally.failures)} failing check instances")
    for label, r in tally.failures:
        kind = "deviation" if r.char0 else "FAILURE"
        print(f"  {kind}: {r.name} on {label}: {r.detail}")


if __name__ == "__main__":
    main()
