"""Command-line frontend.

Arrays are described by a flavor and two umbra sources.  A source is
either a registry name with an optional dot-modifier ("catalan",
"2.catalan", "-1/2.bernoulli") or "@file.json" holding a serialized
moment list.  Everything prints in one of three formats: an aligned
table, CSV, or the JSON shapes defined by the library types.

Exit codes: 0 on success or a passing check, 1 when a verification
fails, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import identities
from .arrays import ORDINARY, RiordanArray, Triangle, normalize_flavor
from .genpowers import general_power
from .recursions import a_sequence, check_colrec, check_rowrec, check_rowrec2
from .sheffer import sheffer_sequence
from .umbra import Umbra, dot_int, dot_rational, named, named_umbrae

DEFAULT_ORDER = 16

_MODIFIER = re.compile(r"^(-?\d+(?:/\d+)?)\.(.+)$")


def parse_spec(text: str, order: int) -> Umbra:
    """Resolve an umbra source: [<rational>.]<name> or @file.json.

    >>> parse_spec("2.catalan", 4).moments
    (Fraction(1, 1), Fraction(2, 1), Fraction(10, 1), Fraction(84, 1), Fraction(1008, 1))
    """
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, list):
            return Umbra([Fraction(m) for m in data])
        return Umbra.from_json(json.dumps(data))
    m = _MODIFIER.match(text)
    if m:
        c = Fraction(m.group(1))
        base = named(m.group(2), order)
        if c.denominator == 1:
            return dot_int(int(c), base)
        return dot_rational(c, base)
    return named(text, order)


def _build_array(args, gamma_attr="gamma", alpha_attr="alpha") -> RiordanArray:
    gamma = parse_spec(getattr(args, gamma_attr), args.order)
    alpha = parse_spec(getattr(args, alpha_attr), args.order)
    return RiordanArray(args.flavor, gamma, alpha)


# -- rendering ---------------------------------------------------------------


def render(t: Triangle, format: str) -> str:
    """Render a triangle: right-aligned table, CSV lines, or library JSON."""
    if format == "json":
        return t.to_json()
    if format == "csv":
        return t.to_csv()
    if not len(t):
        return ""
    widths: dict[int, int] = {}
    for row in t.rows:
        for k, x in enumerate(row):
            widths[k] = max(widths.get(k, 0), len(str(x)))
    lines = [
        "  ".join(str(x).rjust(widths[k]) for k, x in enumerate(row)) for row in t.rows
    ]
    return "\n".join(lines)


def _render_sequence(values, format: str) -> str:
    strs = [str(v) for v in values]
    if format == "json":
        return json.dumps(strs, separators=(",", ":"))
    if format == "csv":
        return ",".join(strs)
    return " ".join(strs)


def _emit(text: str) -> None:
    if text:
        print(text)


# -- subcommand handlers -----------------------------------------------------


def _cmd_array(args) -> int:
    _emit(render(_build_array(args).triangle(args.rows), args.format))
    return 0


def _cmd_mul(args) -> int:
    left = _build_array(args)
    right = _build_array(args, "gamma2", "alpha2")
    _emit(render(left.multiply(right).triangle(args.rows), args.format))
    return 0


def _cmd_inv(args) -> int:
    _emit(render(_build_array(args).inverse().triangle(args.rows), args.format))
    return 0


def _cmd_pow(args) -> int:
    t = general_power(_build_array(args), Fraction(args.c))
    if args.rows is not None:
        t = t.truncated(args.rows)
    _emit(render(t, args.format))
    return 0


def _cmd_act(args) -> int:
    array = _build_array(args)
    if (args.eta is None) == (args.column is None):
        print("error: act needs exactly one of --eta or --column", file=sys.stderr)
        return 2
    if args.column is not None:
        pattern = [Fraction(v) for v in args.column.split(",")]
        values = [pattern[i % len(pattern)] for i in range(args.order + 1)]
        out = array.act_values(values)
    else:
        eta = parse_spec(args.eta, args.order)
        result = array.act(eta)
        if array.flavor == ORDINARY:
            out = [m / math.factorial(n) for n, m in enumerate(result.moments)]
        else:
            out = list(result.moments)
    _emit(_render_sequence(out, args.format))
    return 0


def _cmd_sheffer(args) -> int:
    polys = sheffer_sequence(_build_array(args), args.n_max)
    if args.format == "json":
        _emit(
            json.dumps(
                [[str(c) for c in p.coeffs] for p in polys], separators=(",", ":")
            )
        )
    elif args.format == "csv":
        _emit("\n".join(",".join(str(c) for c in p.coeffs) for p in polys))
    else:
        _emit("\n".join(str(p) for p in polys))
    return 0


def _cmd_aseq(args) -> int:
    _emit(_render_sequence(a_sequence(_build_array(args)).moments, args.format))
    return 0


_RULES = {"colrec": check_colrec, "rowrec": check_rowrec, "rowrec2": check_rowrec2}


def _cmd_check(args) -> int:
    report = _RULES[args.rule](_build_array(args), args.n, args.k)
    if args.format == "json":
        _emit(report.to_json())
    else:
        verdict = "ok" if report.ok else "MISMATCH"
        _emit(
            f"{report.rule} n={report.n} k={report.k}: "
            f"lhs={report.lhs} rhs={report.rhs} {verdict}"
        )
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    names = identities.catalog() if args.all else [args.name]
    if not args.all and args.name not in identities.catalog():
        print(f"error: unknown identity {args.name!r}", file=sys.stderr)
        return 2
    reports = [identities.run(name, args.n_max) for name in names]
    if args.json:
        payload = [json.loads(r.to_json()) for r in reports]
        _emit(json.dumps(payload[0] if not args.all else payload, separators=(",", ":")))
    else:
        for r in reports:
            _emit(f"{r.status} {r.name} (n <= {r.n_max}, {len(r.witnesses)} checks)")
            for w in r.failures():
                _emit(f"  {w.input}: {w.lhs} != {w.rhs}")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_list(args) -> int:
    lines = ["identities:"]
    lines += [f"  {name}" for name in identities.catalog()]
    lines.append("umbrae:")
    lines += [f"  {name}" for name in named_umbrae()]
    _emit("\n".join(lines))
    return 0


# -- parser ------------------------------------------------------------------


def _add_array_options(p: argparse.ArgumentParser, second_pair: bool = False) -> None:
    p.add_argument("--flavor", type=normalize_flavor, default="exp")
    p.add_argument("--gamma", default="augmentation", help="umbra source for gamma")
    p.add_argument("--alpha", default="augmentation", help="umbra source for alpha")
    if second_pair:
        p.add_argument("--gamma2", default="augmentation")
        p.add_argument("--alpha2", default="augmentation")


def _add_common(p: argparse.ArgumentParser) -> None:
    default_order = int(os.environ.get("RIORDAN_ORDER", DEFAULT_ORDER))
    p.add_argument("--order", type=int, default=default_order)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan", description="Exact Riordan array toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = command("array", _cmd_array, help="print an array's triangle")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--rows", type=int, default=None)

    p = command("mul", _cmd_mul, help="multiply two arrays")
    _add_array_options(p, second_pair=True)
    _add_common(p)
    p.add_argument("--rows", type=int, default=None)

    p = command("inv", _cmd_inv, help="invert an array")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--rows", type=int, default=None)

    p = command("pow", _cmd_pow, help="rational power of an exponential array")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--c", required=True, help="exponent, e.g. 3 or 1/2")
    p.add_argument("--rows", type=int, default=None)

    p = command("act", _cmd_act, help="apply the array to an umbra or column")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--eta", default=None, help="umbra source")
    p.add_argument("--column", default=None, help="comma pattern, cycled to length")

    p = command("sheffer", _cmd_sheffer, help="print the polynomial sequence")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--n-max", type=int, default=8, dest="n_max")

    p = command("aseq", _cmd_aseq, help="print the A-sequence moments")
    _add_array_options(p)
    _add_common(p)

    p = command("check", _cmd_check, help="check one recursion at (n, k)")
    _add_array_options(p)
    _add_common(p)
    p.add_argument("--rule", choices=sorted(_RULES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = command("verify", _cmd_verify, help="run a catalog identity")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int, default=10, dest="n_max")
    p.add_argument("--json", action="store_true")

    command("list", _cmd_list, help="list identities and named umbrae")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = _build_parser()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and not args.all and args.name is None:
        print("error: verify needs an identity name or --all", file=sys.stderr)
        return 2
    if getattr(args, "rows", None) is not None and args.rows < 0:
        print("error: --rows must be >= 0", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (ValueError, IndexError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
