"""S-transform residuals of the Ising and VB^0 triples across truncation orders.

    python scripts/run_modular.py --orders 20 50 100 200 --tau 0.8i --tau i
"""

import argparse

from framedvoa.characters import ising_triple, solve_baby_characters
from framedvoa.config import DEFAULT_TAUS
from framedvoa.modular import parse_tau, verify_s_transform


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=[20, 50, 100, 200])
    p.add_argument("--tau", action="append", default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    args = p.parse_args()
    taus = [parse_tau(t) for t in args.tau] if args.tau else list(DEFAULT_TAUS)

    print(f"{'order':>6} {'triple':>7} {'status':>13} {'max residual':>13} {'tail bound':>11}")
    for k in args.orders:
        triple = solve_baby_characters(k)
        for name, chars in (("ising", ising_triple(k)), ("baby", list(triple))):
            rep = verify_s_transform(chars, taus, args.tol, name=name)
            print(f"{k:>6} {name:>7} {rep.status:>13} {rep.max_residual:>13.2e} {rep.max_tail:>11.2e}")


if __name__ == "__main__":
    main()
