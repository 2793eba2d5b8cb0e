"""``tckit`` command line.

Exit codes: 0 success, 1 validation / classification failure or domain error,
2 parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import braid as br
from . import catalog
from .chart import black_count, euler_characteristic, genus_per_component, validate_movie
from .compiler import compile_chart, verify_theorem_steps
from .errors import ParseError, TckitError
from .formats import (
    format_braid,
    format_chart,
    format_compiled,
    format_invariants,
    format_validation,
    parse_braid,
    parse_chart,
    parse_letters,
    parse_movie,
)
from .invariants import braid_index_report, classify


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_braid_eq(args) -> int:
    u, v = parse_braid(_read(args.a)), parse_braid(_read(args.b))
    print("true" if br.is_equal(u, v) else "false")
    return 0


BUILDERS = {
    "delta": lambda m: br.build_delta(m),
    "delta-prime": lambda m: br.build_delta(m, primed=True),
    "theta": br.build_theta,
    "garside": br.garside_delta,
}


def cmd_braid_build(args) -> int:
    sys.stdout.write(format_braid(BUILDERS[args.name](args.m)))
    return 0


def cmd_compile(args) -> int:
    compiled = compile_chart(parse_chart(_read(args.chart)))
    _emit(format_compiled(compiled), args.output)
    return 0


def cmd_validate(args) -> int:
    report = validate_movie(parse_movie(_read(args.movie)))
    sys.stdout.write(format_validation(report))
    return 0 if report.ok else 1


def cmd_invariants(args) -> int:
    movie = parse_movie(_read(args.movie))
    genera = genus_per_component(movie)
    sys.stdout.write(
        format_invariants(movie.degree, black_count(movie), euler_characteristic(movie), genera)
    )
    return 0


def cmd_classify(args) -> int:
    result = classify(parse_chart(_read(args.chart)))
    print(f"kind={result.kind}")
    print(f"witness={result.witness}")
    return 1 if result.kind == "unknown" else 0


def cmd_braid_index(args) -> int:
    sys.stdout.write(braid_index_report(parse_chart(_read(args.chart))).render())
    return 0


def cmd_verify_steps(args) -> int:
    b = br.BraidWord(args.m, parse_letters(args.b))
    report = verify_theorem_steps(b, args.m)
    sys.stdout.write(format_validation(report))
    return 0 if report.ok else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        for item in catalog.entries():
            print(f"{item.name}\t{item.provenance}")
        return 0
    if not args.name:
        raise ParseError("catalog show needs an entry name")
    beta = None
    if args.beta is not None:
        beta = br.BraidWord(args.degree, parse_letters(args.beta))
    try:
        item = catalog.entry(args.name, p=args.p, beta=beta)
    except KeyError:
        print(f"error: no catalog entry named {args.name!r}", file=sys.stderr)
        return 1
    sys.stdout.write(format_chart(item.chart))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tckit", description="Torus-covering chart toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    braid = sub.add_parser("braid", help="braid-word utilities")
    braid_sub = braid.add_subparsers(dest="braid_command", required=True)
    eq = braid_sub.add_parser("eq", help="decide equality of two braid files")
    eq.add_argument("a")
    eq.add_argument("b")
    eq.set_defaults(func=cmd_braid_eq)
    build = braid_sub.add_parser("build", help="emit a named braid")
    build.add_argument("name", choices=sorted(BUILDERS))
    build.add_argument("--m", type=int, required=True)
    build.set_defaults(func=cmd_braid_build)

    comp = sub.add_parser("compile", help="compile a .tc chart into a .tcm movie")
    comp.add_argument("chart")
    comp.add_argument("-o", "--output")
    comp.set_defaults(func=cmd_compile)

    val = sub.add_parser("validate", help="validate a .tcm movie")
    val.add_argument("movie")
    val.set_defaults(func=cmd_validate)

    inv = sub.add_parser("invariants", help="degree, black vertices, chi, components, genus")
    inv.add_argument("movie")
    inv.set_defaults(func=cmd_invariants)

    cls = sub.add_parser("classify", help="match a .tc chart against the spun families")
    cls.add_argument("chart")
    cls.set_defaults(func=cmd_classify)

    bi = sub.add_parser("braid-index", help="braid-index bounds for a .tc chart")
    bi.add_argument("chart")
    bi.set_defaults(func=cmd_braid_index)

    vs = sub.add_parser("verify-steps", help="certify the 1-handle identities for b")
    vs.add_argument("--m", type=int, required=True)
    vs.add_argument("--b", default="", help="comma-separated signed indices")
    vs.set_defaults(func=cmd_verify_steps)

    cat = sub.add_parser("catalog", help="builtin example charts")
    cat.add_argument("action", choices=("list", "show"))
    cat.add_argument("name", nargs="?")
    cat.add_argument("--p", type=int, default=5, help="exponent for torus-2p")
    cat.add_argument("--beta", help="beta for symmetry-spun-beta, comma-separated")
    cat.add_argument("--degree", type=int, default=2, help="degree of --beta")
    cat.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (TckitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
