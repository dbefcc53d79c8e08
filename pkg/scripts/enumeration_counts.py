"""Print subalgebra, ideal and maximal-subalgebra counts for catalog entries over small fields.

    python3 scripts/enumeration_counts.py --primes 2 3 --max-dim 4
"""

import argparse

from nlie import frattini as fr
from nlie.catalog import STANDARD_NAMES, build
from nlie.linalg import Field, galois_number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=list(STANDARD_NAMES))
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-dim", type=int, default=5)
    args = ap.parse_args()

    print(f"{'algebra':<26}{'p':>3}{'dim':>5}{'subspaces':>11}{'subalg':>8}{'ideals':>8}{'maximal':>9}{'dim F':>7}{'dim phi':>9}")
    for name in args.names:
        for p in args.primes:
            a = build(name, Field.gf(p))
            if a.dim > args.max_dim:
                continue
            lat = fr.enumerate_substructures(a, cap=args.max_dim)
            assert lat.subspace_count == galois_number(a.dim, p)
            f_sub, phi = fr.frattini(a, cap=args.max_dim)
            print(
                f"{name:<26}{p:>3}{a.dim:>5}{lat.subspace_count:>11}{len(lat.subalgebras):>8}"
                f"{len(lat.ideals):>8}{len(lat.maximal):>9}{f_sub.dim:>7}{phi.dim:>9}"
            )


if __name__ == "__main__":
    main()
