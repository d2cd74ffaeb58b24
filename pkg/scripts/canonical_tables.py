"""Print P (canonical in PBW) and Q (PBW in canonical) for every dimension vector up to a total."""
import argparse

from quiverhall.canonical import canonical_basis
from quiverhall.reps import dims_up_to, enumerate_modules, type_data


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="B2")
    ap.add_argument("--total", type=int, default=3)
    ap.add_argument("--latex", action="store_true")
    args = ap.parse_args()
    data = type_data(args.type)
    for d in dims_up_to(data, args.total):
        if not any(d) or len(enumerate_modules(data, d)) < 2:
            continue
        P, Q = canonical_basis(args.type, d)
        print(f"# {args.type} {list(d)}")
        for M in (P, Q):
            print(M.latex() if args.latex else M.table())
        print()


if __name__ == "__main__":
    main()
