"""Compare the subspace count and the extension count of Hall numbers on a scope; report timings."""
import argparse
import time

from quiverhall.hall import hall_number
from quiverhall.verify import hall_triples


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="B2")
    ap.add_argument("--total", type=int, default=3)
    ap.add_argument("--q", default="2,3")
    args = ap.parse_args()
    qs = [int(x) for x in args.q.split(",")]
    n = nonzero = 0
    t = {"grassmannian": 0.0, "extensions": 0.0}
    for L, M, N in hall_triples(args.type, args.total):
        for q in qs:
            vals = {}
            for meth in t:
                t0 = time.perf_counter()
                vals[meth] = hall_number(L, M, N, q, method=meth)
                t[meth] += time.perf_counter() - t0
            if vals["grassmannian"] != vals["extensions"]:
                raise SystemExit(f"disagreement at {L} | {M} | {N} q={q}: {vals}")
            n += 1
            nonzero += bool(vals["grassmannian"])
    print(f"{n} comparisons agree ({nonzero} nonzero); "
          + ", ".join(f"{k} {v:.2f}s" for k, v in t.items()))


if __name__ == "__main__":
    main()
