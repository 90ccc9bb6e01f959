"""Command-line front end, installed as ``wg``.

Exit codes: 0 success, 1 selftest failure, 2 bad input, 3 unsupported
scale, 4 Monte-Carlo numerical failure.
"""

import argparse
import json
import sys
from pathlib import Path

from . import characters
from .checks import run_suites
from .combinatorics import cycle_type, format_partition, parse_partition, parse_permutation
from .errors import (
    InvalidArgumentError,
    NumericalFailureError,
    SamplerError,
    UnsupportedScaleError,
)
from .haar_mc import estimate_moment
from .hyperoctahedral import coset_type
from .integrator import MomentSpec, integrate
from .records import estimate_record, rational_record
from .weingarten import (
    TABLE_MAX_N,
    GroupKind,
    wg_orthogonal,
    wg_symplectic,
    wg_symplectic_normalized,
    wg_table,
    wg_unitary,
)

EXIT_SELFTEST = 1
EXIT_INPUT = 2
EXIT_SCALE = 3
EXIT_NUMERIC = 4


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    return Path(args.cache_dir) if args.cache_dir else characters.cache_dir()


def _load_cache(args, strict: bool = False) -> None:
    directory = _cache_dir(args)
    if directory is None or not directory.is_dir():
        return
    for path in sorted(directory.glob("characters_*.txt")):
        try:
            characters.load_cache_file(path)
        except (InvalidArgumentError, OSError) as exc:
            if strict:
                raise
            print(f"warning: ignoring cache file: {exc}", file=sys.stderr)


def _save_cache(args, *orders: int) -> None:
    directory = _cache_dir(args)
    if directory is None:
        return
    for n in orders:
        if not characters.cache_path(n, directory).exists():
            try:
                characters.write_cache_file(n, directory)
            except OSError as exc:
                print(f"warning: could not write cache: {exc}", file=sys.stderr)


def _check_scale(group: GroupKind, n: int) -> None:
    limit = TABLE_MAX_N[group]
    if not 1 <= n <= limit:
        raise UnsupportedScaleError(f"group {group.value} supports 1 <= n <= {limit}, got {n}")


def _parse_label(group: GroupKind, n: int, text: str) -> tuple[tuple[int, ...], bool]:
    """A partition of n, or else a permutation (degree n for U, 2n for O/Sp).

    Returns the parsed tuple and whether it is a partition.
    """
    if not text.strip().startswith("("):
        try:
            lam = parse_partition(text)
        except InvalidArgumentError:
            lam = None
        if lam is not None and sum(lam) == n:
            return lam, True
    degree = n if group is GroupKind.UNITARY else 2 * n
    return parse_permutation(text, degree), False


def cmd_value(args) -> int:
    group = GroupKind.parse(args.group)
    _check_scale(group, args.n)
    label, is_partition = _parse_label(group, args.n, args.label)
    _load_cache(args)
    if group is GroupKind.UNITARY:
        value = wg_unitary(label if is_partition else cycle_type(label), args.N)
        orders = (args.n,)
    elif group is GroupKind.ORTHOGONAL:
        value = wg_orthogonal(label if is_partition else coset_type(label), args.N)
        orders = (args.n, 2 * args.n)
    else:
        value = wg_symplectic_normalized(label, args.N) if is_partition else wg_symplectic(label, args.N)
        orders = (args.n, 2 * args.n)
    _save_cache(args, *orders)
    _emit(rational_record(value))
    return 0


def cmd_table(args) -> int:
    group = GroupKind.parse(args.group)
    _check_scale(group, args.n)
    _load_cache(args)
    table = wg_table(group, args.n, args.N)
    out = []
    for entry in table.entries:
        record = {"class": format_partition(entry.label), **rational_record(entry.value)}
        if group is GroupKind.SYMPLECTIC:
            record["representative"] = ",".join(map(str, entry.representative))
            record["representative_sign"] = entry.representative_sign
            record["representative_value"] = rational_record(entry.representative_value)
        out.append(record)
    _save_cache(args, *((args.n,) if group is GroupKind.UNITARY else (args.n, 2 * args.n)))
    _emit(out)
    return 0


def _read_spec(source: str) -> MomentSpec:
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InvalidArgumentError(f"cannot read spec file: {exc}") from None
    return MomentSpec.from_json(text)


def cmd_integrate(args) -> int:
    spec = _read_spec(args.spec)
    _load_cache(args)
    exact = integrate(spec)
    if args.mc is None:
        _emit(rational_record(exact))
        return 0
    est = estimate_moment(spec, args.mc, args.seed, workers=args.workers)
    z = (est.mean.real - float(exact)) / est.stderr if est.stderr > 0 else 0.0
    _emit({"exact": rational_record(exact), "estimate": estimate_record(est), "z": z})
    return 0


def cmd_selftest(args) -> int:
    try:
        _load_cache(args, strict=True)
    except (InvalidArgumentError, OSError) as exc:
        print(f"FAIL character-cache: unreadable cache file: {exc}")
        return EXIT_SELFTEST
    failed = None
    for result in run_suites(args.level, seed=args.seed):
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}")
        print(f"  {result.name}: {result.seconds:.2f}s", file=sys.stderr)
        if not result.passed and failed is None:
            failed = result
    if failed is not None:
        print(f"first failure in {failed.name}: {failed.detail}")
        return EXIT_SELFTEST
    return 0


def cmd_cache(args) -> int:
    directory = Path(args.cache_dir) if args.cache_dir else characters.cache_dir()
    if args.action == "path":
        print(directory)
    elif args.action == "build":
        if not 1 <= args.n <= 2 * TABLE_MAX_N[GroupKind.ORTHOGONAL]:
            raise UnsupportedScaleError(f"cache build supports n <= {2 * TABLE_MAX_N[GroupKind.ORTHOGONAL]}")
        for n in range(1, args.n + 1):
            print(characters.write_cache_file(n, directory))
    elif args.action == "clear":
        if directory.is_dir():
            for path in directory.glob("characters_*.txt"):
                path.unlink()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wg", description="Exact Weingarten calculus.")
    parser.add_argument("--no-cache", action="store_true", help="do not read or write character cache files")
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="character cache directory (default: $WGCALC_CACHE_DIR or ~/.cache/wgcalc)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    group_help = "u = U(N), o = O(N), sp = Sp(2N) with N the half-dimension"

    p = sub.add_parser(
        "value",
        help="one Weingarten value",
        description=(
            "Print Wg for one class.  --class takes a partition of n (cycle type for u, "
            "coset type for o/sp) or a permutation, as an image list '2,1,4,3' or cycles "
            "'(1 2)(3 4)'.  Wg^Sp is sign-covariant, Wg(tau xi) = s(xi) Wg(tau); a partition "
            "label for sp gives the value at a sign +1 representative."
        ),
    )
    p.add_argument("--group", required=True, choices=["u", "o", "sp"], help=group_help)
    p.add_argument("--n", type=int, required=True, help="order (number of U factors, or half the factors)")
    p.add_argument("--N", type=int, required=True, help="dimension")
    p.add_argument("--class", dest="label", required=True)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("table", help="all Weingarten values of one order")
    p.add_argument("--group", required=True, choices=["u", "o", "sp"], help=group_help)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("integrate", help="exact Haar moment of an entry product")
    p.add_argument("spec", help="spec file path, inline JSON object, or - for stdin")
    p.add_argument("--mc", type=int, default=None, metavar="SAMPLES", help="also run a Monte-Carlo estimate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("selftest", help="run the exact invariant suites")
    p.add_argument("--level", type=int, default=3, help="n-bound for the suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("cache", help="manage character cache files")
    p.add_argument("action", choices=["build", "clear", "path"])
    p.add_argument("--n", type=int, default=6, help="build tables for S_1 .. S_n")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericalFailureError, SamplerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
