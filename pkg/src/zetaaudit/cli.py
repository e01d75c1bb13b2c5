"""Command-line front end: ``zetaaudit <subcommand> ...`` or ``python -m zetaaudit``.

Exit codes: 0 success, 1 failed audit checks, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

_RATIONAL = re.compile(r"^([+-]?\d+)/(\d+)$")


def parse_rational(token: str) -> Fraction:
    """Strict ``p/q`` with q > 0, reduced."""
    m = _RATIONAL.match(token.strip())
    if not m or int(m.group(2)) == 0:
        raise argparse.ArgumentTypeError(f"expected a rational p/q with q > 0, got {token!r}")
    return Fraction(int(m.group(1)), int(m.group(2)))


def parse_real(token: str) -> float:
    try:
        x = float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {token!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"expected a finite real number, got {token!r}")
    return x


def parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {token!r}") from None


def parse_residues(token: str) -> list[int]:
    if token == "":
        return []
    try:
        return [int(t) for t in token.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {token!r}") from None


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, allow_nan=False) + "\n" if args.format == "json" else text
    sys.stdout.write(out)


def _cmd_gamma(args) -> int:
    from .stieltjes import stieltjes_gamma

    v, e = stieltjes_gamma(args.k, float(args.a))
    _emit(args, {"k": args.k, "a": str(args.a), "value": v, "err": e},
          f"gamma_{args.k}({args.a}) = {_fmt(v)} +- {e:.2e}\n")
    return 0


def _cmd_hurwitz(args) -> int:
    from .zeta import hurwitz_zeta

    v = hurwitz_zeta(args.s, float(args.a))
    _emit(args, {"s": args.s, "a": str(args.a), "value": v}, f"zeta({args.s:g}, {args.a}) = {_fmt(v)}\n")
    return 0


def _cmd_lfun(args) -> int:
    from .lfunctions import l_value, l_value_euler, l_value_via_fe

    if args.route == "hurwitz":
        r = l_value(args.disc, args.s)
    elif args.route == "euler":
        r = l_value_euler(args.disc, args.s)
    else:
        r = l_value_via_fe(args.disc, 1.0 - args.s)
    _emit(args, {"D": r.D, "s": r.s, "value": r.value, "route": r.route, "err": r.err_estimate},
          f"L_{r.D}({r.s:g}) = {_fmt(r.value)} +- {r.err_estimate:.2e} [{r.route}]\n")
    return 0


def _cmd_primeprod(args) -> int:
    from .primeprod import ResidueProductSpec, residue_product

    pattern = {r: "minus" for r in args.minus}
    for r in args.plus:
        if r in pattern:
            raise ValueError(f"residue {r} given as both minus and plus")
        pattern[r] = "plus"
    res = residue_product(ResidueProductSpec(args.mod, pattern, args.exp, args.limit))
    lo, hi = res.interval()
    _emit(args, {"modulus": args.mod, "pattern": {str(k): v for k, v in sorted(pattern.items())}, "s": args.exp,
                 "limit": args.limit, "value": res.value, "log_tail_bound": res.log_tail_bound,
                 "interval": [lo, hi]},
          f"product = {_fmt(res.value)}\nlog tail bound = {res.log_tail_bound:.3e}\n"
          f"interval = [{_fmt(lo)}, {_fmt(hi)}]\n")
    return 0


def _cmd_bounds(args) -> int:
    from .zeta import crit_strip_bounds

    if not 0.0 < args.s < 1.0:
        raise ValueError("--s must lie in (0, 1)")
    b = crit_strip_bounds(args.s)
    payload = {k: getattr(b, k) for k in ("s", "value", "crude_lower", "crude_upper", "lower_integral",
                                          "upper_integral", "lower_quad", "upper_quad", "lower", "upper")}
    payload["holds"] = b.holds
    text = "".join(f"{k:<15} {_fmt(v)}\n" for k, v in payload.items() if k != "holds")
    _emit(args, payload, text + f"{'holds':<15} {b.holds}\n")
    return 0


def _cmd_audit(args) -> int:
    from .audit import AuditConfig, run_all

    cfg = AuditConfig(mode=args.mode, sieve_limit=args.limit, n_max=args.n_max, prop_filter=args.prop,
                      theta7=args.theta7, p3_exponent=args.p3_exponent, timestamp=args.timestamp)
    report = run_all(cfg)
    out = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[args.format]()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    # literal-mode failures are findings, not errors, when both modes run
    judged = "audited" if args.mode == "both" else args.mode
    return 1 if report.failures(judged) else 0


def build_parser() -> argparse.ArgumentParser:
    from .audit import AuditConfig

    p = argparse.ArgumentParser(prog="zetaaudit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    g = sub.add_parser("gamma", help="generalized Stieltjes constant gamma_k(a)")
    g.add_argument("--k", type=parse_int, required=True)
    g.add_argument("--a", type=parse_rational, required=True)
    fmt(g)
    g.set_defaults(func=_cmd_gamma)

    h = sub.add_parser("hurwitz", help="Hurwitz zeta(s, a)")
    h.add_argument("--s", type=parse_real, required=True)
    h.add_argument("--a", type=parse_rational, required=True)
    fmt(h)
    h.set_defaults(func=_cmd_hurwitz)

    lf = sub.add_parser("lfun", help="quadratic Dirichlet L-function L_D(s)")
    lf.add_argument("--disc", type=parse_int, required=True)
    lf.add_argument("--s", type=parse_real, required=True)
    lf.add_argument("--route", choices=("hurwitz", "euler", "fe"), default="hurwitz")
    fmt(lf)
    lf.set_defaults(func=_cmd_lfun)

    pp = sub.add_parser("primeprod", help="prime product over residue classes")
    pp.add_argument("--mod", type=parse_int, required=True)
    pp.add_argument("--minus", type=parse_residues, default=[])
    pp.add_argument("--plus", type=parse_residues, default=[])
    pp.add_argument("--exp", type=parse_real, default=2.0)
    pp.add_argument("--limit", type=parse_int, default=10**7)
    fmt(pp)
    pp.set_defaults(func=_cmd_primeprod)

    a = sub.add_parser("audit", help="run identity checks")
    a.add_argument("--prop", default="*", help="glob over check ids, e.g. 'P7*'")
    a.add_argument("--mode", choices=("literal", "audited", "both"), default="audited")
    a.add_argument("--limit", type=parse_int, default=AuditConfig.sieve_limit, help="prime sieve limit")
    a.add_argument("--n-max", type=parse_int, default=AuditConfig.n_max, help="Stieltjes partial-sum cutoff")
    a.add_argument("--theta7", type=parse_real, default=AuditConfig.theta7)
    a.add_argument("--p3-exponent", choices=("sqrt23", "sqrt3"), default=AuditConfig.p3_exponent)
    a.add_argument("--timestamp", default=AuditConfig.timestamp, help="ISO-8601 UTC string recorded in the report")
    a.add_argument("--format", choices=("json", "csv", "text"), default="text")
    a.add_argument("--out", default=None)
    a.set_defaults(func=_cmd_audit)

    b = sub.add_parser("bounds", help="zeta(s) for 0 < s < 1 with its bracketing evaluations")
    b.add_argument("--s", type=parse_real, required=True)
    fmt(b)
    b.set_defaults(func=_cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError) as exc:
        print(f"zetaaudit {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
