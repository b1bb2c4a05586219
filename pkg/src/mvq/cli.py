"""``mvq`` command line interface.

Exit codes: 0 success, 1 usage or parse error, 2 disagreement between a
closed-form criterion and its brute-force oracle, 3 budget exceeded.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from .algebra import LexElement, ProductAlgebra, lex_closure_growth
from .config import Budgets, BudgetExceeded
from .criticality import (
    check_critical_signature,
    critical_oracle,
    divisible_indices,
    signature,
)
from .quasiequations import satisfies
from .quasivariety import enumerate_subquasivarieties, inclusion_report
from .schemas import is_prime, verify_prime_power, verify_two_primes
from .terms import ParseError, format_quasiequation, parse_quasiequation

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    output: str = None
    budgets: Budgets = field(default_factory=Budgets)

    def __post_init__(self):
        if self.fmt not in ("text", "json", "dot"):
            raise UsageError(f"unknown format {self.fmt!r}")


def _moduli(text):
    text = text.strip()
    if not text:
        return ()
    try:
        out = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad signature {text!r}: expected comma-separated integers") from None
    if any(n < 1 for n in out):
        raise UsageError(f"bad signature {text!r}: moduli must be positive")
    return out


def parse_family(text):
    """``"2,3;1,2"`` -> ``[(2, 3), (1, 2)]``; the empty string is the empty family."""
    if not text.strip():
        return []
    return [signature(_moduli(part)) for part in text.split(";")]


def _fmt_sig(s):
    return ",".join(map(str, s))


def _bool(b):
    return "true" if b else "false"


# -- commands ----------------------------------------------------------------


def cmd_critical(args, cfg):
    if not args.moduli:
        raise UsageError("critical needs at least one chain modulus")
    sig = signature(args.moduli)
    distinct = len(set(sig)) == len(sig)
    div = [sig[j] for j in divisible_indices(sig)]
    verdict = check_critical_signature(sig)
    data = {
        "signature": list(sig),
        "critical": verdict,
        "condition1_distinct": distinct,
        "condition2_divisible_entries": div,
        "condition2": len(div) <= 1,
    }
    code = EXIT_OK
    if args.oracle:
        oracle = critical_oracle(ProductAlgebra(sig), budget=cfg.budgets.carrier)
        data["oracle"] = oracle
        data["agree"] = oracle == verdict
        if not data["agree"]:
            code = EXIT_DISAGREE
    if cfg.fmt == "json":
        return data, code
    head = f"critical: {_bool(verdict)}"
    if args.oracle:
        head += f"; oracle: {_bool(data['oracle'])}; " + ("agree" if data["agree"] else "DISAGREE")
    lines = [
        head,
        f"signature: {_fmt_sig(sig)}",
        f"condition 1 (pairwise distinct entries): {_bool(distinct)}",
        "condition 2 (at most one entry divisible by another): "
        f"{_bool(len(div) <= 1)} (divisible entries: {_fmt_sig(div) or 'none'})",
    ]
    return "\n".join(lines), code


def cmd_inclusion(args, cfg):
    left = parse_family(args.left)
    right = parse_family(args.right)
    for g in left + right:
        if not check_critical_signature(g):
            raise UsageError(f"{_fmt_sig(g)} is not a critical signature")
    if not right:
        verdict = not left
        rows = [{"generator": list(g), "holds": False, "reason": "right family is empty"} for g in left]
    else:
        rows = []
        for rep in inclusion_report(left, right):
            row = {"generator": list(rep.generator), "holds": rep.holds, "H": [list(j) for j in rep.admissible]}
            if not rep.admissible:
                j, m = next(iter(rep.rejected.items()))
                row["reason"] = f"condition (2) fails at factor {m} of {_fmt_sig(j)}"
            elif rep.uncovered:
                row["reason"] = f"condition (1) fails at factor {rep.uncovered[0]}"
            rows.append(row)
        verdict = all(r["holds"] for r in rows)
    if cfg.fmt == "json":
        return {"left": [list(g) for g in left], "right": [list(g) for g in right], "inclusion": verdict, "generators": rows}, EXIT_OK
    lines = [f"inclusion: {_bool(verdict)}"]
    for r in rows:
        g = _fmt_sig(r["generator"])
        if r["holds"]:
            lines.append(f"  {g}: H = {{{'; '.join(_fmt_sig(j) for j in r['H'])}}}")
        else:
            lines.append(f"  {g}: {r['reason']}")
    return "\n".join(lines), EXIT_OK


def cmd_lattice(args, cfg):
    if not args.moduli:
        raise UsageError("lattice needs at least one chain modulus")
    lat = enumerate_subquasivarieties(args.moduli, budget=cfg.budgets.criticals)
    if cfg.fmt == "json":
        return lat.to_json(), EXIT_OK
    if cfg.fmt == "dot":
        return lat.to_dot().rstrip("\n"), EXIT_OK
    lines = [f"subquasivarieties of V({', '.join(f'L_{m}' for m in lat.ambient)}): {len(lat.nodes)}"]
    for i, node in enumerate(lat.nodes):
        ups = [b for a, b in lat.cover_edges if a == i]
        lines.append(f"  {i:>3}  {node.label():<24} covered by {ups}")
    return "\n".join(lines), EXIT_OK


def cmd_eval(args, cfg):
    A = ProductAlgebra(_moduli(args.algebra))
    try:
        q = parse_quasiequation(args.qe)
    except ParseError as e:
        raise UsageError(f"cannot parse quasiequation: {e}") from None
    v = satisfies(A, q, budget=cfg.budgets.assignments)
    witness = None if v.witness is None else {f"x{k}": A.format(a) for k, a in sorted(v.witness.items())}
    if cfg.fmt == "json":
        return {"algebra": list(A.moduli), "quasiequation": format_quasiequation(q), "holds": v.holds, "witness": witness}, EXIT_OK
    if v.holds:
        return "true", EXIT_OK
    w = ", ".join(f"{k}={val}" for k, val in witness.items())
    return f"false; witness {w}" if w else "false", EXIT_OK


def cmd_verify(args, cfg):
    p = args.p
    if not is_prime(p) or p > 7:
        raise UsageError(f"--p must be a prime at most 7, got {p}")
    rows = []
    if args.which == "3.1":
        q = args.q
        if q is None or not is_prime(q) or q > 7 or q == p:
            raise UsageError(f"--q must be a prime at most 7 distinct from p, got {q}")
        for item, rep in verify_two_primes(p, q, budget=cfg.budgets.assignments):
            rows.append(_verify_row(f"item {item.name}", rep.spec.label(), rep))
    else:
        r = args.r
        if r is None or not 0 <= r <= 4:
            raise UsageError(f"--r must be between 0 and 4, got {r}")
        for node in verify_prime_power(p, r, budget=cfg.budgets.assignments):
            kinds = [k for k, _ in node.templates]
            name = f"type {kinds[0]}" if len(kinds) == 1 else f"types {kinds or 'none'}"
            row = _verify_row(name, node.label, node.report)
            if len(kinds) != 1:
                row["passed"] = False
                row["detail"] = "node does not match exactly one template"
            rows.append(row)
    ok = all(r["passed"] for r in rows)
    code = EXIT_OK if ok else EXIT_DISAGREE
    npass = sum(r["passed"] for r in rows)
    if cfg.fmt == "json":
        return {"example": args.which, "passed": ok, "rows": rows}, code
    lines = [f"{r['name']:<10} {r['quasivariety']:<22} {'pass' if r['passed'] else 'FAIL'}"
             + (f"  ({r['detail']})" if r.get("detail") else "") for r in rows]
    lines.append(f"{npass}/{len(rows)} pass (checked on {_SCOPE})")
    return "\n".join(lines), code


_SCOPE = "critical algebras of the ambient variety"


def _verify_row(name, label, rep):
    row = {"name": name, "quasivariety": label, "passed": bool(rep and rep.passed)}
    if rep is not None and not rep.passed:
        c, q, w = rep.counterexample
        detail = f"counterexample {_fmt_sig(c) or 'trivial'}"
        if q is not None:
            detail += f" fails {format_quasiequation(q)}"
        else:
            detail += " satisfies all axioms but lies outside"
        row["detail"] = detail
    return row


def cmd_demo_nonlf(args, cfg):
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    size = lex_closure_growth(1, [LexElement(0, 1)], args.bound)
    exceeded = size > args.bound
    if cfg.fmt == "json":
        return {"bound": args.bound, "closure_size": size, "exceeded": exceeded}, EXIT_OK
    if exceeded:
        return f"closure size > {args.bound}: non-locally-finite witness", EXIT_OK
    return f"closure size = {size}", EXIT_OK


# -- entry point -------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = _Parser(prog="mvq", description="Decision procedures for finite MV-algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("critical", parents=[common], help="decide criticality of a product of chains")
    p.add_argument("moduli", nargs="*", type=int)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")

    p = sub.add_parser("inclusion", parents=[common], help="decide Q(left) <= Q(right)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("lattice", parents=[common], help="all subquasivarieties of V(L_m1, ...)")
    p.add_argument("moduli", nargs="*", type=int)

    p = sub.add_parser("eval", parents=[common], help="check a quasiequation in a product of chains")
    p.add_argument("--algebra", required=True)
    p.add_argument("--qe", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the two worked axiomatizations")
    p.add_argument("which", choices=["3.1", "3.2"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)

    p = sub.add_parser("demo-nonlf", parents=[common], help="finitely generated infinite MV-algebra")
    p.add_argument("--bound", type=int, default=100)
    return parser


COMMANDS = {
    "critical": cmd_critical,
    "inclusion": cmd_inclusion,
    "lattice": cmd_lattice,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "demo-nonlf": cmd_demo_nonlf,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        cfg = RunConfig(args.command, args.fmt, args.output, Budgets.from_env())
        if cfg.fmt == "dot" and args.command != "lattice":
            raise UsageError("--format dot is only available for lattice")
        result, code = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        print(f"mvq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"mvq: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"mvq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(result, indent=2, ensure_ascii=False) if cfg.fmt == "json" else result
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        if hasattr(sys.stdout, "reconfigure"):
            sys.stdout.reconfigure(encoding="utf-8")
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
