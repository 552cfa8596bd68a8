"""Solve the VB^0 character triple and print leading coefficients.

    python scripts/run_characters.py --order 200 --terms 6
"""

import argparse
import time

from framedvoa.characters import VB_SHIFT, j_series, solve_baby_characters, t2a_series
from framedvoa.structure import vb_top_weights


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--terms", type=int, default=6)
    args = p.parse_args()

    t0 = time.perf_counter()
    triple = solve_baby_characters(args.order)
    elapsed = time.perf_counter() - t0
    print(f"order {args.order}, solved in {elapsed:.2f} s")
    print(f"j   q^1 coefficient: {j_series(args.order).coeff(1)}")
    print(f"T2A q^1 coefficient: {t2a_series(args.order).coeff(1)}")
    for name, s in zip(("b0", "b1", "bT"), triple):
        terms = ", ".join(f"{c} q^({e - VB_SHIFT})" for e, c in s.leading_terms(args.terms))
        print(f"{name} = q^({VB_SHIFT}) [{terms}, ...]")
    for label, w in vb_top_weights(triple).items():
        print(f"top weight {label}: {w}")


if __name__ == "__main__":
    main()
