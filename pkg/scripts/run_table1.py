"""Census of c-conjugacy over monoids with zero and zero divisors, under both dedupe conventions."""
import argparse
import json
import time

from semiconj.conjugacy import relation_character
from semiconj.enumeration import EnumConstraints, enumerate_semigroups, table1


def write_listing(path, n_max):
    with open(path, "w") as fh:
        for dedupe in ("equivalence", "iso"):
            for n in range(3, n_max + 1):
                cons = EnumConstraints(n, require_monoid=True, require_zero=True,
                                       require_zero_divisors=True, dedupe=dedupe)
                for S in enumerate_semigroups(cons, allow_long=n >= 6).semigroups():
                    ch = relation_character(S, "c")
                    flat = " ".join(map(str, S.table.ravel()))
                    fh.write(f"{dedupe} {n} identity={int(ch.is_identity)} "
                             f"universal={int(ch.universal_on_nonzero)} {flat}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=5, help="largest order (6 takes a few minutes)")
    ap.add_argument("--out", help="write rows as JSON here")
    ap.add_argument("--listing", help="write every canonical table with its c character here")
    args = ap.parse_args()
    rows = []
    for dedupe in ("equivalence", "iso"):
        t0 = time.perf_counter()
        for r in table1(args.max, dedupe=dedupe, allow_long=args.max >= 6):
            rows.append(r.__dict__)
            print(f"{dedupe:12s} n={r.n} count={r.count} c_identity={r.c_identity} "
                  f"c_universal={r.c_universal_nonzero}")
        print(f"{dedupe}: {time.perf_counter() - t0:.1f}s")
    if args.listing:
        write_listing(args.listing, args.max)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
