"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or unwritable output),
2 unparsable input, 3 a request the tool does not answer (for instance
``--L`` on a non-covariant series).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .arith import Poly, RationalFunction, format_rf, laurent_at_one
from .cache import SeriesCache
from .engine import covariant_hilbert, onshell_hilbert
from .reps import ReprError, ReprSpec
from .schur import (
    gamma0_covariant,
    gamma0_onshell,
    gamma1_covariant,
    gamma2_covariant,
)
from .sweep import render_palindromic, rows_to_csv, run_sweep  # noqa: F401  (re-exported)
from .verify import run_verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INELIGIBLE = 0, 1, 2, 3
KINDS = ("invariant", "covariant", "onshell")

log = logging.getLogger("su2hilbert")


class Ineligible(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _latex_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{{{i}}}")
        body = str(mag) if (i == 0 or mag != 1) else ""
        term = body + mono
        if not out:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append((" - " if c < 0 else " + ") + term)
    return "".join(out)


def render(f: RationalFunction, fmt: str, spec: ReprSpec, kind: str, L: int | None) -> str:
    if fmt == "json":
        payload = {
            "rep": str(spec),
            "kind": kind,
            "L": L,
            "num": [str(c) for c in f.num.coeffs],
            "den": [str(c) for c in f.den.coeffs],
        }
        return json.dumps(payload)
    if fmt == "latex":
        if f.den == Poly([1]):
            return _latex_poly(f.num)
        return rf"\frac{{{_latex_poly(f.num)}}}{{{_latex_poly(f.den)}}}"
    return format_rf(f)


def _cache_from(args) -> SeriesCache | None:
    if getattr(args, "no_cache", False):
        return None
    return SeriesCache(args.cache_dir)


def _series_request(args) -> tuple[ReprSpec, str, int | None]:
    spec = ReprSpec.parse(args.rep)
    if args.kind == "covariant":
        if args.L is None:
            raise Ineligible("kind=covariant needs --L")
        if args.L < 0:
            raise Ineligible("--L must be nonnegative")
        return spec, args.kind, args.L
    if args.L is not None:
        raise Ineligible(f"--L applies only to kind=covariant, not {args.kind}")
    return spec, args.kind, None


def _compute(spec: ReprSpec, kind: str, L: int | None, cache) -> RationalFunction:
    if kind == "onshell":
        return onshell_hilbert(spec, cache=cache)
    return covariant_hilbert(spec, L or 0, cache=cache)


def cmd_hilbert(args) -> int:
    spec, kind, L = _series_request(args)
    f = _compute(spec, kind, L, _cache_from(args))
    print(render(f, args.format, spec, kind, L))
    return EXIT_OK


def _fmt_q(x) -> str:
    return str(Fraction(x))


def cmd_laurent(args) -> int:
    spec, kind, L = _series_request(args)
    if args.order < 0:
        raise Ineligible("--order must be nonnegative")
    f = _compute(spec, kind, L, _cache_from(args))
    if f.is_zero():
        print("series is identically zero")
        return EXIT_OK
    exp = laurent_at_one(f, args.order)
    print(f"pole order: {exp.pole_order}")
    for m, c in enumerate(exp.coefficients):
        print(f"(1-t)^{m - exp.pole_order}: {_fmt_q(c)}")
    if kind == "onshell":
        rep = gamma0_onshell(spec)
        agree = rep.value == Fraction(exp.coefficients[0])
        print(f"gamma0_on [{rep.source.value}]: {_fmt_q(rep.value)}" + ("" if not rep.applicable else f" (matches series: {agree})"))
    else:
        for m, fn in enumerate((gamma0_covariant, gamma1_covariant, gamma2_covariant)):
            rep = fn(spec, L or 0)
            print(f"gamma_{m},{L or 0} [{rep.source.value}]: {_fmt_q(rep.value)}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.max_dim < 2 or args.max_dim % 2:
        raise Ineligible("--max-dim must be even and at least 2")
    rows = run_sweep(args.max_dim, jobs=max(1, args.jobs), cache=_cache_from(args))
    text = rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    log.info("wrote %d rows to %s", len(rows), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    count = 0
    for result in run_verify(args.max_dim, args.depth, cache=_cache_from(args)):
        count += 1
        if not result.ok:
            print(result.line())
            print(f"verification failed after {count} checks", file=sys.stderr)
            return EXIT_FAIL
        if args.verbose:
            print(result.line())
    print(f"all {count} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="su2hilbert", description="Hilbert series of SL2 covariants and SU2 symplectic quotients.")
    parser.add_argument("--cache-dir", default=None, help="cache location (default: $HSER_CACHE_DIR or ~/.cache/su2hilbert)")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the series cache")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def series_args(p):
        p.add_argument("--rep", required=True, help="representation, e.g. 1+1+2")
        p.add_argument("--kind", choices=KINDS, default="onshell")
        p.add_argument("--L", type=int, default=None, help="covariant degree (kind=covariant only)")

    p = sub.add_parser("hilbert", help="print a Hilbert series")
    series_args(p)
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("laurent", help="Laurent coefficients at t=1 and closed-form comparison")
    series_args(p)
    p.add_argument("--order", type=int, default=4)
    p.set_defaults(func=cmd_laurent)

    p = sub.add_parser("sweep", help="tabulate all representations up to a quotient dimension")
    p.add_argument("--max-dim", type=int, default=14)
    p.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check series against the brute-force counts and identities")
    p.add_argument("--max-dim", type=int, default=10)
    p.add_argument("--depth", type=int, default=24)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ReprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Ineligible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE


if __name__ == "__main__":
    sys.exit(main())
