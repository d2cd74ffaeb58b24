"""Which twist the monomial oracle accepts per type, and which filtration direction agrees with it."""
import argparse
import json

from quiverhall.canonical import select_direction_for_type, select_twist
from quiverhall.reps import enumerate_modules, type_data
from quiverhall.verify import bar_scope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A2,A3,B2,G2")
    ap.add_argument("--out", default=None, help="write the JSON report here")
    args = ap.parse_args()
    scope = bar_scope()
    report = {}
    for lab in args.types.split(","):
        twist, rejected = select_twist(lab)
        dims = [d for l, d in scope if l == lab and len(enumerate_modules(type_data(l), d)) > 1]
        selected, summary = select_direction_for_type(lab, dims)
        report[lab] = {"twist": twist, "rejected_twists": rejected, "direction": selected,
                       "direction_failures": summary["failures"], "dims_checked": summary["dims"]}
        print(f"{lab}: twist={twist} direction={selected} ({len(dims)} dims)")
        for tw, why in rejected.items():
            print(f"  twist {tw} rejected {why}")
        for d, fails in summary["failures"].items():
            if fails:
                print(f"  direction {d} fails at {len(fails)} dims, first {fails[0]}")
    if args.out:
        with open(args.out, "w") as f:
            json.dump(report, f, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
