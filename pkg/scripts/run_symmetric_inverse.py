"""Compare c-conjugacy classes of I_n with cycle-chain types and report timings."""
import argparse
import time

from semiconj.conjugacy import c_conjugacy, p_star
from semiconj.pinj import cc_type, symmetric_inverse_monoid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max + 1):
        t0 = time.perf_counter()
        S, codec = symmetric_inverse_monoid(n)
        c = c_conjugacy(S)
        types = [cc_type(f) for f in codec.elements]
        agree = all(c.same(i, j) == (types[i] == types[j]) for i in range(S.n) for j in range(S.n))
        print(f"I{n}: |S|={S.n} c classes={len(c.classes)} p* classes={len(p_star(S).classes)} "
              f"c = cc-type: {agree} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
