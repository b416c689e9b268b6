r"""Command-line front end for anc_sieve.

Subcommands:
  poly     print a q-polynomial (human form, then JSON), or its value at a
           primitive root of unity or at q = 1
  count    print a closed-form count; --check also enumerates and compares
  enum     list annular noncrossing permutations in canonical order
  verify   run verification suites, writing a JSON-lines report to stdout
  render   draw a permutation as an SVG annulus diagram

Exit status is 0 on success, 1 when a check fails and 2 on invalid input.

 Example usage:

 python -m anc_sieve poly --which cat --n 1 --m 1
 python -m anc_sieve poly --which kre --n 2 --m 2 --c 1 --r 0 --s 0 --R 0 --S 0 --lam "(2)" --mu "(2)" --at-root 2
 python -m anc_sieve count --n 2 --m 2 --c 2 --check
 python -m anc_sieve enum --n 2 --m 2 --c 2 --format json
 python -m anc_sieve --log-dir logs verify --suite csp --max-total 6 --timing
 python -m anc_sieve render --n 9 --m 6 --perm "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)" -o annulus.svg

"""

USAGE = __doc__
import argparse
import json
import pathlib
import sys
from typing import Callable, Optional, Sequence

from .annulus import (
    AnnularPermutation,
    apply_rotation,
    enumerate_anc,
    enumerate_anc_B,
    enumerate_matchings,
    is_connected_anc,
    parse_cycle_notation,
    permutations_to_json_lines,
    profile_of,
    rigid_rotation,
)
from .config import get_config, load_anc_config, set_config
from .errors import AncSieveError, ProfileError
from .formulas import (
    annular_catalan_q,
    annular_kreweras_q,
    annular_narayana1_q,
    annular_narayana2_q,
    annular_narayana3_q,
    bessis_reiner_X,
    catalan_q,
    count_anc,
    count_anc_B,
    kreweras_q,
    narayana_q,
    rotation_csp_q,
)
from .logger import AncLogger, setup_logging
from .models import ProfileFilter, make_profile
from .partitions import EMPTY_PARTITION, parse_partition
from .qcalc import QPolynomial, cyclotomic_as_integer, eval_at_primitive_root
from .render import RenderSpec, write_svg
from .report import summarize_reports
from .verify import SUITES, cap_bounds, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2

PROFILE_FLAGS = ("c", "r", "s", "R", "S", "alpha", "beta", "lam", "mu")


def _root_spec(text: str) -> tuple[int, int]:
    """Parses ``d`` or ``d,j`` for --at-root."""
    pieces = text.split(",")
    if len(pieces) > 2:
        raise argparse.ArgumentTypeError(f"expected d or d,j; got '{text}'")
    try:
        d = int(pieces[0])
        j = int(pieces[1]) if len(pieces) == 2 else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected d or d,j; got '{text}'")
    return d, j


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except AncSieveError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_profile_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="Exterior circle size (disc size for the disc choices)")
    parser.add_argument("--m", type=int, help="Interior circle size")
    parser.add_argument("--c", type=int, help="Number of connected cycles")
    parser.add_argument("--r", type=int, help="Number of exterior cycles")
    parser.add_argument("--s", type=int, help="Number of interior cycles")
    parser.add_argument("--R", type=int, help="Total size of the exterior cycles")
    parser.add_argument("--S", type=int, help="Total size of the interior cycles")
    parser.add_argument("--alpha", type=_partition_arg, help="Exterior cycle type, e.g. \"(2,1)\"")
    parser.add_argument("--beta", type=_partition_arg, help="Interior cycle type")
    parser.add_argument("--lam", type=_partition_arg, help="Connected exterior cycle type (or disc cycle type)")
    parser.add_argument("--mu", type=_partition_arg, help="Connected interior cycle type")


def _require(args: argparse.Namespace, which: str, names: Sequence[str]) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ProfileError(f"{which} needs {', '.join(missing)}")


def _profile(args: argparse.Namespace, which: str):
    """Full profile from flags; alpha and beta default to () when R or S is 0."""
    _require(args, which, ("n", "m", "c", "r", "s", "R", "S", "lam", "mu"))
    alpha = args.alpha if args.alpha is not None else EMPTY_PARTITION
    beta = args.beta if args.beta is not None else EMPTY_PARTITION
    return make_profile(
        args.n, args.m, args.c, args.r, args.s, args.R, args.S,
        alpha, beta, args.lam, args.mu,
    )


def _given(args: argparse.Namespace, names: Sequence[str]) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def _profile_kwargs(args: argparse.Namespace) -> dict:
    """Profile flags that were given; with --lam or --mu, R = 0 or S = 0 implies an empty alpha or beta."""
    kwargs = _given(args, PROFILE_FLAGS)
    if "lam" in kwargs or "mu" in kwargs:
        if kwargs.get("R") == 0:
            kwargs.setdefault("alpha", EMPTY_PARTITION)
        if kwargs.get("S") == 0:
            kwargs.setdefault("beta", EMPTY_PARTITION)
    return kwargs


# poly

def _poly_for(args: argparse.Namespace) -> QPolynomial:
    which = args.which
    if which == "kre":
        return annular_kreweras_q(_profile(args, which))
    if which == "csp":
        return rotation_csp_q(_profile(args, which))
    if which == "nara1":
        _require(args, which, ("n", "m", "c", "r", "s", "R", "S"))
        return annular_narayana1_q(args.n, args.m, args.c, args.r, args.s, args.R, args.S)
    if which == "nara2":
        _require(args, which, ("n", "m", "c", "r", "s"))
        return annular_narayana2_q(args.n, args.m, args.c, args.r, args.s)
    if which == "nara3":
        _require(args, which, ("n", "m", "c"))
        return annular_narayana3_q(args.n, args.m, args.c)
    if which == "cat":
        _require(args, which, ("n", "m"))
        return annular_catalan_q(args.n, args.m)
    if which == "kre-disc":
        _require(args, which, ("lam",))
        return kreweras_q(args.lam)
    if which == "nara-disc":
        _require(args, which, ("n", "k"))
        return narayana_q(args.n, args.k)
    if which == "cat-disc":
        _require(args, which, ("n",))
        return catalan_q(args.n)
    _require(args, which, ("lam",))
    return bessis_reiner_X(args.lam)


def command_poly(args: argparse.Namespace) -> int:
    poly = _poly_for(args)
    AncLogger.debug(f"{args.which}: {poly!r}")
    if args.at_root is None and not args.at_one:
        print(poly.format())
        print(json.dumps(poly.to_json(), separators=(",", ":")))
        return EXIT_OK
    if args.at_root is not None:
        d, j = args.at_root
        value = eval_at_primitive_root(poly, d, j)
        integer = cyclotomic_as_integer(value)
        print(integer if isinstance(integer, int) else value)
    if args.at_one:
        print(poly.at_one())
    return EXIT_OK


# count

def command_count(args: argparse.Namespace) -> int:
    _require(args, "count", ("n", "m"))
    kwargs = _profile_kwargs(args)
    if args.type_b:
        expected = count_anc_B(args.n, args.m, **kwargs)
    else:
        expected = count_anc(args.n, args.m, **kwargs)
    if not args.check:
        print(expected)
        return EXIT_OK

    filter = ProfileFilter(**kwargs)
    if args.type_b:
        found = len(enumerate_anc_B(args.n, args.m, filter))
    else:
        found = len(enumerate_anc(args.n, args.m, filter))
    verdict = "OK" if found == expected else "MISMATCH"
    print(f"{expected} (enumeration: {found}, {verdict})")
    if found != expected:
        AncLogger.error(f"count disagrees with enumeration: {expected=} {found=} {kwargs=}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


# enum

def _selected(args: argparse.Namespace) -> tuple[AnnularPermutation, ...]:
    _require(args, "enum", ("n", "m"))
    filter = ProfileFilter(**_profile_kwargs(args))
    if args.matchings:
        permutations = enumerate_matchings(args.n, args.m)
        if not filter.is_empty():
            permutations = tuple(p for p in permutations if filter.matches(profile_of(p)))
    else:
        permutations = enumerate_anc(args.n, args.m, filter)
    if args.fixed_by is not None:
        rot = rigid_rotation(args.n, args.m, args.fixed_by)
        permutations = tuple(p for p in permutations if apply_rotation(rot, p) == p)
    return permutations


def command_enum(args: argparse.Namespace) -> int:
    permutations = _selected(args)
    AncLogger.debug(f"enum selected {len(permutations):,} permutations")
    if args.format == "json":
        lines = permutations_to_json_lines(permutations)
    else:
        lines = (str(p) for p in permutations)
    for line in lines:
        print(line)
    return EXIT_OK


# verify

def command_verify(args: argparse.Namespace) -> int:
    config = get_config()
    bounds = config.verify
    if args.progress:
        bounds = bounds.model_copy(update={"progress": True})
        set_config(config.model_copy(update={"verify": bounds}))
    if args.max_total is not None:
        bounds = cap_bounds(bounds, args.max_total)

    reports = run_suite(args.suite, bounds)
    for report in reports:
        checks = report.checks_df()
        AncLogger.debug(f"Validated {len(checks):,} check rows for suite {report.suite}")
        for line in report.to_json_lines(timing=args.timing):
            print(line)

    _, table = summarize_reports(reports)
    AncLogger.info(f"Verification summary:\n{table}")
    if all(report.ok for report in reports):
        return EXIT_OK
    return EXIT_CHECK_FAILED


# render

def command_render(args: argparse.Namespace) -> int:
    # parse first so malformed text is an input error even with --force
    permutation = AnnularPermutation.from_cycles(args.n, args.m, parse_cycle_notation(args.perm))
    if not args.force and not is_connected_anc(permutation):
        AncLogger.warning(
            f"{permutation} is not a connected ({args.n},{args.m})-annular noncrossing "
            "permutation; nothing written (use --force to draw it anyway)"
        )
        return EXIT_OK
    spec = RenderSpec.from_text(args.n, args.m, args.perm, force=args.force)
    write_svg(spec, args.output)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "poly": command_poly,
    "count": command_count,
    "enum": command_enum,
    "verify": command_verify,
    "render": command_render,
}

POLY_CHOICES = (
    "kre", "csp", "nara1", "nara2", "nara3", "cat",
    "kre-disc", "nara-disc", "cat-disc", "bessis-reiner",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anc_sieve", description=USAGE, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", type=pathlib.Path, action="append", default=[], help="TOML or YAML configuration file; repeat to merge several in order")
    parser.add_argument("--log-dir", type=pathlib.Path, help="Directory for anc_sieve.info.log and anc_sieve.debug.log")
    parser.add_argument("--verbose", action="store_true", help="Log debug messages to the console")
    subparsers = parser.add_subparsers(dest="command", required=True)

    poly = subparsers.add_parser("poly", help="Print a q-polynomial")
    poly.add_argument("--which", required=True, choices=POLY_CHOICES, help="Which polynomial")
    _add_profile_flags(poly)
    poly.add_argument("--k", type=int, help="Number of cycles, for nara-disc")
    poly.add_argument("--at-root", type=_root_spec, metavar="d[,j]", help="Evaluate at zeta_d^j (j defaults to 1)")
    poly.add_argument("--at-one", action="store_true", help="Evaluate at q = 1")

    count = subparsers.add_parser("count", help="Print a closed-form count")
    _add_profile_flags(count)
    count.add_argument("--type-b", action="store_true", help="Count type-B objects of anc(2n, 2m) with halved parameters")
    count.add_argument("--check", action="store_true", help="Also enumerate and compare")

    enum = subparsers.add_parser("enum", help="List permutations")
    _add_profile_flags(enum)
    enum.add_argument("--matchings", action="store_true", help="Only connected noncrossing matchings")
    enum.add_argument("--fixed-by", type=int, metavar="d", help="Only permutations fixed by the rigid rotation of order d")
    enum.add_argument("--format", choices=["cycles", "json"], default="cycles", help="Output format")

    verify = subparsers.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", choices=list(SUITES) + ["all"], default="all", help="Suite to run")
    verify.add_argument("--max-total", type=int, help="Cap every sweep bound at this value")
    verify.add_argument("--timing", action="store_true", help="Include wall_time in the summary lines")
    verify.add_argument("--progress", action="store_true", help="Show progress bars on stderr")

    render = subparsers.add_parser("render", help="Draw an SVG annulus diagram")
    render.add_argument("--n", type=int, required=True, help="Exterior circle size")
    render.add_argument("--m", type=int, required=True, help="Interior circle size")
    render.add_argument("--perm", required=True, help="Cycle notation, e.g. \"(1,3)(2,4)\"")
    render.add_argument("-o", "--output", type=pathlib.Path, required=True, help="Output SVG file")
    render.add_argument("--force", action="store_true", help="Draw even if the permutation is not annular noncrossing")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID_INPUT

    info_log = debug_log = None
    if args.log_dir is not None:
        info_log = args.log_dir / "anc_sieve.info.log"
        debug_log = args.log_dir / "anc_sieve.debug.log"
    setup_logging(
        info_log_filename=info_log,
        debug_log_filename=debug_log,
        std_out_level="debug" if args.verbose else "info",
        file_mode="w",
    )
    AncLogger.debug(f"{args=}")

    try:
        set_config(load_anc_config(*args.config))
        return COMMANDS[args.command](args)
    except (AncSieveError, ValueError, OSError) as e:
        AncLogger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
