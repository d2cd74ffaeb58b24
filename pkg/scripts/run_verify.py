"""Run the verification suites with per-suite timings."""
import argparse
import time

from quiverhall.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    failed = 0
    for name in args.suites:
        t0 = time.perf_counter()
        checks = run_suite(name)
        dt = time.perf_counter() - t0
        bad = [c for c in checks if not c.ok]
        failed += len(bad)
        print(f"[{name}] {len(checks) - len(bad)}/{len(checks)} passed in {dt:.1f}s")
        for c in checks if args.verbose else bad:
            print("  " + c.line(), c.detail if not c.ok else "")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
