"""Command-line front end.

Exit codes: 0 pass, 1 failure, 2 inconclusive numeric check, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from enum import Enum
from pathlib import Path
from typing import Sequence

from . import codes as C
from .characters import DerivationInconsistency, ising_triple, j_series, solve_baby_characters, t2a_series
from .config import DEFAULT_TAUS, RunConfig
from .cover import CodePair, check_condition1
from .fusion import FusionTable, hamming_ring, hypothesis_I3_check, ising_ring, is_simple_current
from .modular import parse_tau, verify_s_transform

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return _text(obj)


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(v)}" if _flat(v) else f"{pad}-\n{_text(v, indent + 1)}" for v in obj)
    return f"{pad}{obj}"


class _Lines(list):
    """A list rendered one item per line in text output."""


def _flat(v) -> bool:
    if isinstance(v, (dict, _Lines)):
        return False
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return True


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return str(v)


# -- pairs ------------------------------------------------------------------


def resolve_pair(spec: str) -> tuple[str, CodePair]:
    """``moonshine``, ``baby`` or ``file:D.txt,file:S.txt``."""
    if spec == "moonshine":
        return spec, CodePair(C.d_natural(), C.build_s_natural())
    if spec == "baby":
        d0, _, s = C.derived_codes()
        return spec, CodePair(d0, s)
    parts = spec.split(",")
    if len(parts) != 2 or not all(p.startswith("file:") for p in parts):
        raise UsageError(f"--pair must be moonshine, baby or file:D,file:S (got {spec!r})")
    try:
        d, s = (_load(p[5:]) for p in parts)
    except (OSError, ValueError) as e:
        raise UsageError(str(e)) from None
    if d.length != s.length:
        raise UsageError("the two codes have different lengths")
    return spec, CodePair(d, s)


def _load(path: str) -> C.LinearCode:
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix == ".json":
        return C.code_from_json(json.loads(text))
    return C.parse_code_text(text)


def _code_stats(code: C.LinearCode) -> dict:
    return {
        "length": code.length,
        "dim": code.dim,
        "even": code.is_even(),
        "doubly_even": code.is_doubly_even(),
        "self_dual": code.is_self_dual(),
        "basis": [str(w) for w in code.basis_words()],
    }


def builtin_codes() -> dict[str, C.LinearCode]:
    d0, _, s_flat = C.derived_codes()
    return {
        "h8": C.hamming_h8(),
        "rm41": C.rm41(),
        "s_natural": C.build_s_natural(),
        "d_natural": C.d_natural(),
        "d_flat0": d0,
        "s_flat": s_flat,
    }


# -- subcommands ------------------------------------------------------------


def cmd_codes(args, cfg: RunConfig) -> tuple[dict, int]:
    table = builtin_codes()
    if args.pair:
        name, pair = resolve_pair(args.pair)
        table = {f"{name}:D": pair.d, f"{name}:S": pair.s}
    if args.export:
        if args.export not in table:
            raise UsageError(f"unknown code {args.export!r}; choose from {', '.join(sorted(table))}")
        code = table[args.export]
        return {"code": args.export, **code.to_json()}, EXIT_PASS
    out = {}
    for name, code in table.items():
        st = _code_stats(code)
        if code.dim <= 16:
            st["weight_enumerator"] = {str(k): v for k, v in sorted(code.weight_enumerator().items())}
        if not args.basis:
            st.pop("basis")
        out[name] = st
    _, d1, _ = C.derived_codes()
    if not args.pair:
        out["d_flat1_representative"] = str(d1)
    return out, EXIT_PASS


def cmd_hypothesis(args, cfg: RunConfig) -> tuple[dict, int]:
    from .structure import LabelAssignmentError, family_labels

    name, pair = resolve_pair(args.pair or "moonshine")
    c1 = check_condition1(pair)
    out = {"pair": name, "condition1": c1.to_json()}
    if not args.covers:
        out["condition1"].pop("covers")
    ok = c1.passed
    try:
        labels = family_labels(pair.d, pair.s)
    except LabelAssignmentError as e:
        out["hypothesis3"] = {"passed": False, "error": str(e)}
        return out, EXIT_FAIL
    h3 = hypothesis_I3_check(pair.s, labels)
    out["hypothesis3"] = h3.to_json()
    if not args.verbose:
        for key in ("word_mismatches", "nonintegral", "missing"):
            out["hypothesis3"][key] = len(out["hypothesis3"][key])
    ok = ok and h3.passed
    return out, EXIT_PASS if ok else EXIT_FAIL


def _declared_order(label):
    if isinstance(label, Enum):
        return (list(type(label)).index(label), "")
    return (0, str(label))


def _ring(name: str) -> FusionTable:
    from .structure import vb_fusion_ring

    rings = {"ising": ising_ring, "hamming": hamming_ring, "vb": vb_fusion_ring}
    if name not in rings:
        raise UsageError(f"unknown ring {name!r}; choose from {', '.join(rings)}")
    return rings[name]()


def cmd_fusion(args, cfg: RunConfig) -> tuple[dict, int]:
    from .structure import ring_isomorphism_to_ising, verlinde_certificate

    ring = _ring(args.ring)
    out = ring.to_json()
    out["ring"] = args.ring
    out["commutative"] = ring.is_commutative()
    out["associative"] = ring.is_associative()
    witnesses = {}
    for x in ring.labels:
        sc = is_simple_current(x, ring)
        witnesses[str(x)] = str(sc.witness) if sc else None
    out["simple_currents"] = witnesses
    ok = out["commutative"] and out["associative"]
    if args.ring in ("ising", "vb"):
        ver = verlinde_certificate()
        out["verlinde"] = ver.to_json()
        ok = ok and ver.passed
    if args.ring == "vb":
        iso = ring_isomorphism_to_ising()
        out["isomorphism_to_ising"] = iso.to_json()
        ok = ok and iso.passed
    if cfg.format == "text":
        # one line per unordered pair of non-unit labels, in declaration order
        labels = sorted(ring.labels, key=_declared_order)
        rules = _Lines()
        for i, x in enumerate(labels):
            for y in labels[i:]:
                if ring.unit not in (x, y):
                    rules.append(f"{x} x {y} = {ring.fuse(x, y)}")
        out.pop("products")
        out["rules"] = rules
    return out, EXIT_PASS if ok else EXIT_FAIL


def cmd_chars(args, cfg: RunConfig) -> tuple[dict, int]:
    from .structure import character_summary

    k = cfg.order
    n = args.terms
    out = {"order": k}
    chosen = set(args.series or ["all"])
    if chosen & {"ising", "all"}:
        out["ising"] = {name: _series(s, n) for name, s in zip(("h0", "h12", "h116"), ising_triple(k))}
    if chosen & {"j", "all"}:
        out["j"] = _series(j_series(k), n)
    if chosen & {"t2a", "all"}:
        out["t2a"] = _series(t2a_series(k), n)
    code = EXIT_PASS
    try:
        triple = solve_baby_characters(k)
    except DerivationInconsistency as e:
        out["baby"] = {"error": str(e)}
        return out, EXIT_FAIL
    if chosen & {"baby", "all"}:
        out["baby"] = {name: _series(s, n) for name, s in zip(("b0", "b1", "bT"), triple)}
        summary = character_summary(k, triple)
        out["checks"] = summary["checks"]
        if not summary["passed"]:
            code = EXIT_FAIL
    if not args.no_modular:
        reports = [
            verify_s_transform(ising_triple(k), cfg.tau_samples, cfg.tol, name="ising"),
            verify_s_transform(list(triple), cfg.tau_samples, cfg.tol, name="baby"),
        ]
        out["s_transform"] = [r.to_json() for r in reports]
        states = {r.status for r in reports}
        if "fail" in states:
            code = EXIT_FAIL
        elif "inconclusive" in states and code == EXIT_PASS:
            code = EXIT_INCONCLUSIVE
    return out, code


def _series(s, n: int) -> dict:
    js = s.to_json()
    js["terms"] = js["terms"][:n]
    return js


def cmd_fock(args, cfg: RunConfig) -> tuple[dict, int]:
    from .fock import fock_report, ramond_split

    out = fock_report(cfg.fock_weight, cfg.commutator_weight, cfg.mode_bound)
    split = ramond_split(cfg.fock_weight)
    out["ramond_split"] = split.to_json()
    ok = all(c["status"] == "pass" for sec in ("NS", "R") for c in out[sec]["checks"])
    ok = ok and split.balanced and split.exhaustive
    if not args.verbose:
        for sec in ("NS", "R"):
            checks = out[sec]["checks"]
            out[sec]["checks"] = {
                "count": len(checks),
                "failed": [c["name"] for c in checks if c["status"] != "pass"],
                "max_residual": max(c["residual"] for c in checks),
            }
    return out, EXIT_PASS if ok else EXIT_FAIL


def cmd_verify_all(args, cfg: RunConfig) -> tuple[dict, int]:
    from .structure import verify_all

    report = verify_all(cfg)
    report["sections"]["random_codes"] = _random_duality(cfg.seed)
    if not report["sections"]["random_codes"]["passed"]:
        report["status"] = "fail"
    code = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[report["status"]]
    if not args.verbose:
        for name in ("moonshine", "baby"):
            sec = report["sections"][name]
            sec["condition1"].pop("covers", None)
    return report, code


def _random_duality(seed: int, trials: int = 20) -> dict:
    """``dual(dual(C)) == C`` and rank-nullity on seeded random codes."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        n = rng.randint(1, 24)
        gens = [C.BitWord(rng.getrandbits(n), n) for _ in range(rng.randint(0, n))]
        code = C.LinearCode.span(gens, n)
        dd = code.dual()
        if dd.dual() != code or code.dim + dd.dim != n:
            bad += 1
    return {"seed": seed, "trials": trials, "failures": bad, "passed": bad == 0}


COMMANDS = {
    "codes": cmd_codes,
    "hypothesis": cmd_hypothesis,
    "fusion": cmd_fusion,
    "chars": cmd_chars,
    "fock": cmd_fock,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None, help="truncation order K (default 200; 50 for chars)")
    common.add_argument("--tol", type=float, default=1e-6)
    common.add_argument("--tau", action="append", default=None, help="sample point a+bi; repeatable")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--pair", default=None, help="moonshine, baby or file:D,file:S")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--verbose", action="store_true")

    p = _Parser(prog="framedvoa", description="Framed VOA bookkeeping: codes, fusion, characters.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = sub.add_parser("codes", parents=[common], help="built-in codes and their statistics")
    c.add_argument("--export", default=None, help="print one code as JSON")
    c.add_argument("--basis", action="store_true", help="include bases")
    h = sub.add_parser("hypothesis", parents=[common], help="condition (1) and the label checks")
    h.add_argument("--covers", action="store_true", help="list every Hamming cover")
    f = sub.add_parser("fusion", parents=[common], help="fusion tables and simple currents")
    f.add_argument("--ring", default="ising", help="ising, hamming or vb")
    ch = sub.add_parser("chars", parents=[common], help="series, baby characters and S-transform checks")
    ch.add_argument("--series", action="append", choices=("ising", "j", "t2a", "baby", "all"))
    ch.add_argument("--terms", type=int, default=8, help="terms printed per series")
    ch.add_argument("--no-modular", action="store_true")
    fk = sub.add_parser("fock", parents=[common], help="Fock-space dimensions and Virasoro checks")
    fk.add_argument("--max-weight", type=int, default=8)
    sub.add_parser("verify-all", parents=[common], help="run everything")
    return p


def make_config(args) -> RunConfig:
    order = args.order if args.order is not None else (50 if args.command == "chars" else 200)
    try:
        taus = tuple(parse_tau(t) for t in args.tau) if args.tau else DEFAULT_TAUS
        kw = {}
        if args.command == "fock":
            kw["fock_weight"] = args.max_weight
        return RunConfig(order=order, tol=args.tol, tau_samples=taus, format=args.format, seed=args.seed, **kw)
    except ValueError as e:
        raise UsageError(str(e)) from None


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        result, code = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        print(f"framedvoa: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(_dump(result, cfg.format) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
