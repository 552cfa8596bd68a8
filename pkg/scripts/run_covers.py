"""Find Hamming covers for every 1/16-word of both structure-code pairs.

    python scripts/run_covers.py [--show 5]
"""

import argparse
import time

from framedvoa.codes import build_s_natural, d_natural, derived_codes
from framedvoa.cover import CodePair, check_condition1


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--show", type=int, default=3, help="covers printed per pair")
    args = p.parse_args()

    d0, _, s_flat = derived_codes()
    for name, pair in (("moonshine", CodePair(d_natural(), build_s_natural())), ("baby", CodePair(d0, s_flat))):
        t0 = time.perf_counter()
        rep = check_condition1(pair)
        elapsed = time.perf_counter() - t0
        print(f"{name}: dim D {pair.d.dim}, |S| {pair.s.size}, passed {rep.passed}, {elapsed:.2f} s")
        shown = 0
        for alpha, cover in sorted(rep.covers.items()):
            if cover is None or not cover.blocks or shown >= args.show:
                continue
            print(f"  weight {alpha.weight}: blocks {[[i + 1 for i in b] for b in cover.blocks]}")
            shown += 1


if __name__ == "__main__":
    main()
