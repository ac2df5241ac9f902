"""Run the structural check suite over every semigroup up to a given order."""
import argparse
import collections
import time

from semiconj.enumeration import EnumConstraints, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=4)
    ap.add_argument("--dedupe", default="equivalence", choices=["labeled", "iso", "equivalence"])
    ap.add_argument("--check", action="append", help="restrict to these check names")
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = sweep([EnumConstraints(n, dedupe=args.dedupe) for n in range(1, args.max + 1)], args.check)
    print(f"checked {rep.checked} semigroups in {time.perf_counter() - t0:.1f}s")
    by_name = collections.defaultdict(list)
    for name, flat, witness in rep.failures:
        by_name[name].append((flat, witness))
    for name, hits in sorted(by_name.items()):
        print(f"FAIL {name}: {len(hits)} tables; first {hits[0][0]} witness {hits[0][1]}")
    for name, k in sorted(rep.skipped.items()):
        print(f"skip {name}: {k}")
    if not by_name:
        print("no failures")


if __name__ == "__main__":
    main()
