"""Free-fermion graded dimensions, Virasoro commutators and the Ramond split.

    python scripts/run_fock.py --max-weight 8 --commutator-weight 6
"""

import argparse
import time

from framedvoa.fock import Sector, graded_dimensions, ramond_split, states_up_to, check_virasoro


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--commutator-weight", type=int, default=6)
    p.add_argument("--mode-bound", type=int, default=4)
    args = p.parse_args()

    for sector in Sector:
        dims = graded_dimensions(sector, args.max_weight)
        print(f"{sector}: " + " ".join(f"{w}:{d}" for w, d in dims))
    t0 = time.perf_counter()
    failures = 0
    b = args.mode_bound
    for sector in Sector:
        samples = states_up_to(sector, args.commutator_weight)
        for m in range(-b, b + 1):
            for n in range(-b, b + 1):
                failures += not check_virasoro(m, n, samples).exact_zero
    print(f"commutators |m|,|n| <= {b} on weight <= {args.commutator_weight}: {failures} failures, "
          f"{time.perf_counter() - t0:.1f} s")
    split = ramond_split(args.max_weight)
    print(f"Ramond split  v+: {list(split.plus)}")
    print(f"              v-: {list(split.minus)}")
    print(f"           total: {list(split.total)}")


if __name__ == "__main__":
    main()
