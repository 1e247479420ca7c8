"""Command line front end: ``hbsum eval | check | sweep | series``.

Exit codes follow one contract across commands: 0 success, 1 a residual
is nonzero, 2 usage or config error, 3 a hypothesis or precondition does
not hold, 4 the Omega constant is undetermined.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .identities import UnknownIdentity, check_identity, get_identity
from .polyfun import DegreeOutOfRange
from .rational import format_rational, parse_rational
from .series import RHS_MODES, OmegaParams, check_omega_reciprocity, hwz_G_series
from .sums import INTEGER_PARAMS, SUM_REGISTRY, evaluate_named
from .sweep import ConfigError, CampaignConfig, default_config_path, dump_report, report_text, run_campaign

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INDETERMINATE = 0, 1, 2, 3, 4

PARAM_FLAGS = ("p", "q", "a", "b", "c", "d", "m", "n", "r", "x", "y", "z", "X", "Y")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_param_flags(parser: argparse.ArgumentParser, names=PARAM_FLAGS) -> None:
    group = parser.add_argument_group("parameters", "integers or rationals written num/den")
    for name in names:
        group.add_argument(f"--{name}", type=_rational, default=None, metavar="Q")


def _given(args, names=PARAM_FLAGS) -> dict[str, Fraction]:
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_eval(args) -> int:
    entry = SUM_REGISTRY.get(args.sum)
    if entry is None:
        return _usage(f"unknown sum {args.sum!r}; choose from {', '.join(SUM_REGISTRY)}")
    params = _given(args)
    for name in entry.params:
        if name in INTEGER_PARAMS:
            if name not in params:
                return _usage(f"sum {args.sum} needs --{name}")
            if params[name].denominator != 1:
                return _usage(f"--{name} must be an integer")
    try:
        value = evaluate_named(args.sum, params)
    except (ValueError, ZeroDivisionError) as exc:
        # DegreeOutOfRange is a ValueError too
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(format_rational(value))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        ident = get_identity(args.identity)
    except UnknownIdentity:
        return _usage(f"unknown identity {args.identity!r}")
    try:
        result = check_identity(ident.id, _given(args))
    except DegreeOutOfRange as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        return _usage(str(exc))
    shown = " ".join(
        f"{k}={v if isinstance(v, int) else format_rational(v)}" for k, v in result.params.items()
    )
    if not result.applicable:
        print(f"{ident.id} {shown}: not-applicable (hypotheses fail)")
        return EXIT_PRECONDITION
    verdict = "pass" if result.passed else "fail"
    print(f"{ident.id} {shown}: applicable, {verdict}, residual {format_rational(result.residual)}")
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_sweep(args) -> int:
    try:
        cfg = CampaignConfig.load(args.config or default_config_path())
    except ConfigError as exc:
        return _usage(str(exc))
    progress = (lambda i: print(f"sweeping {i}", file=sys.stderr)) if args.verbose else None
    report = run_campaign(cfg, jobs=args.jobs, progress=progress)
    text = dump_report(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        if not args.output:
            sys.stdout.write(text)
    else:
        sys.stdout.write(report_text(report))
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_series(args) -> int:
    given = _given(args, ("a", "b", "c", "d", "x", "y", "z"))
    ints = {}
    for name in ("a", "b", "c", "d"):
        value = given.get(name, Fraction(1) if name != "d" else Fraction(2))
        if value.denominator != 1:
            return _usage(f"--{name} must be an integer")
        ints[name] = value.numerator
    shifts = [given.get(n, Fraction(0)) for n in ("x", "y", "z")]
    if args.degree < 0:
        return _usage("--degree must be non-negative")

    if args.theorem == "hwz-g":
        try:
            series = hwz_G_series(ints["a"], ints["b"], ints["c"], *shifts, N=args.degree)
        except ValueError as exc:
            print(f"precondition violated: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        sys.stdout.write(series.to_text())
        return EXIT_OK

    try:
        params = OmegaParams(ints["a"], ints["b"], ints["c"], ints["d"], *shifts)
        report = check_omega_reciprocity(params, args.degree, args.rhs)
    except ValueError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION

    v = report.verdict
    print(f"branch: {report.branch}")
    if v.member:
        for R, a0, b0, c0 in v.witnesses:
            print(f"witness: R={format_rational(R)} offsets=({a0},{b0},{c0}) parity={(a0 + b0 + c0) % 2}")
    rhs = "undetermined" if report.rhs is None else format_rational(report.rhs)
    print(f"rhs ({args.rhs}): {rhs}")
    for D, slice_ in report.by_degree.items():
        cells = " ".join(f"[{i},{j}]={format_rational(c)}" for (i, j), c in slice_.items())
        print(f"degree {D}: {cells}")
    print(f"status: {report.status}")
    return {"pass": EXIT_OK, "fail": EXIT_FAIL, "indeterminate": EXIT_INDETERMINATE}[report.status]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hbsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a named sum exactly")
    p_eval.add_argument("--sum", required=True, help="sum name, e.g. dedekind, s3, Spq")
    _add_param_flags(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_check = sub.add_parser("check", help="check one identity at one parameter point")
    p_check.add_argument("--identity", required=True)
    _add_param_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    p_sweep = sub.add_parser("sweep", help="run a campaign of identity sweeps")
    p_sweep.add_argument("config", nargs="?", default=None, help="campaign JSON (default: bundled)")
    p_sweep.add_argument("--format", choices=("json", "text"), default="json")
    p_sweep.add_argument("--output", "-o", default=None, help="also write the JSON report here")
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--verbose", "-v", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep)

    p_series = sub.add_parser("series", help="degree-by-degree generating function check")
    p_series.add_argument("--theorem", choices=("omega", "hwz-g"), default="omega")
    p_series.add_argument("--degree", type=int, default=6)
    p_series.add_argument("--rhs", choices=RHS_MODES, default="quarter")
    _add_param_flags(p_series, ("a", "b", "c", "d", "x", "y", "z"))
    p_series.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
