"""Run the whole pipeline and write the JSON report.

    python scripts/verify_all.py --order 200 --out report.json
"""

import argparse
import json
import sys

from framedvoa.config import RunConfig
from framedvoa.structure import verify_all


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", default=None)
    args = p.parse_args()

    report = verify_all(RunConfig(order=args.order, tol=args.tol))
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    for name, sec in report["sections"].items():
        ok = sec.get("status", "pass" if sec.get("passed", True) else "fail")
        print(f"{name:>12}: {ok}")
    print(f"status: {report['status']}")
    sys.exit(0 if report["status"] == "pass" else 1)


if __name__ == "__main__":
    main()
