"""Command-line interface: ``render``, ``verify``, ``seq`` and ``convolve``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .array import make_array
from .core import format_scalar, parse_scalar_list
from .errors import BinArrayError
from .transform import cauchy_product, dwyer_frankel_check
from .verify import COEFF_RANGE, MAX_DEGREE, SUITES, run_suite
from .zeros import REGISTRY, generate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values may start with "-" (argparse would read "-2..2" as a flag)
_SIGNED_VALUE_OPTIONS = ("--cols", "--init", "--a", "--b", "--shift")


def _col_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if not sep or a > b:
        raise argparse.ArgumentTypeError(f"expected a..b with a <= b, got {text!r}")
    return a, b


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _param(text: str) -> tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected k=v, got {text!r}")
    try:
        return key, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter {key} needs an integer value") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binarray", description="Exact binomial arrays, transforms and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="print a window of B(init)")
    r.add_argument("--init", required=True, help="column 0 as a comma-separated list, e.g. 1,-1")
    r.add_argument("--rows", required=True, type=_natural, help="number of rows, starting at k = 0")
    r.add_argument("--cols", required=True, type=_col_range, help="column range a..b, e.g. -2..2")
    r.add_argument("--format", choices=("csv", "ascii"), default="csv")

    lo, hi = COEFF_RANGE
    v = sub.add_parser(
        "verify", help="run an identity suite and print a JSON report",
        description=f"Random families draw integer coefficients in [{lo}, {hi}] and polynomial "
                    f"degrees <= {MAX_DEGREE} from a generator seeded by (seed, family name). "
                    "Exit status is 0 iff no normative family fails.")
    v.add_argument("--suite", required=True, choices=SUITES + ("all",))
    v.add_argument("--seed", type=_seed, default=0, help="64-bit seed (default 0)")
    v.add_argument("--cases", type=_natural, default=None,
                   help="cases per random family (default: each family's own count)")
    v.add_argument("--strict", action="store_true",
                   help="let reported-only families affect the exit status too")

    s = sub.add_parser("seq", help="print terms of a named sequence, one per line",
                       epilog="families: " + "; ".join(
                           f"{f.name}({', '.join(f.params)}): {f.help}"
                           for f in sorted(REGISTRY.values(), key=lambda f: f.name)))
    s.add_argument("--family", required=True)
    s.add_argument("--param", action="append", type=_param, default=[], metavar="K=V")
    s.add_argument("--count", type=_natural, default=None)

    c = sub.add_parser("convolve", help="compare (a*b)_m with (B^n a * B^-n b)_m")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--m", required=True, type=_natural)
    c.add_argument("--shift", required=True, type=int)
    return parser


def _glue_signed_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg in _SIGNED_VALUE_OPTIONS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def cmd_render(args: argparse.Namespace) -> str:
    if args.rows < 1:
        raise BinArrayError("rows must be at least 1")
    a, b = args.cols
    w = make_array(parse_scalar_list(args.init)).window(0, args.rows - 1, a, b)
    return w.to_csv() if args.format == "csv" else w.to_ascii()


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = run_suite(args.suite, args.seed, args.cases, args.strict)
    return json.dumps(report.to_dict(), indent=2) + "\n", EXIT_OK if report.ok else EXIT_FAIL


def cmd_seq(args: argparse.Namespace) -> str:
    terms = generate(args.family, dict(args.param), args.count)
    return "".join(format_scalar(t) + "\n" for t in terms)


def cmd_convolve(args: argparse.Namespace) -> str:
    a, b = parse_scalar_list(args.a), parse_scalar_list(args.b)
    plain = cauchy_product(a, b, args.m)
    shifted, _, equal = dwyer_frankel_check(a, b, args.shift, args.m)
    return f"{format_scalar(plain)}\n{format_scalar(shifted)}\n{'EQUAL' if equal else 'UNEQUAL'}\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_signed_values(sys.argv[1:] if argv is None else argv))
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            handler = {"render": cmd_render, "seq": cmd_seq, "convolve": cmd_convolve}[args.command]
            text, code = handler(args), EXIT_OK
    except (BinArrayError, ValueError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"binarray {args.command}: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
