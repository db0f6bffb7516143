"""
cli.py
Command-line front end: relation checks, catalyst search, pair generators, midpoint sums and
geometry reports.

Exit codes: 0 holds / success / catalyst found, 1 fails, 2 usage or input error,
3 catalyst not found up to the maximum dimension, 4 prefilter fails, 5 inconclusive.

JSON reports are validated against schemas/report.schema.json before they are printed.
"""

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from dotenv import load_dotenv

from .catalysis import SearchConfig, search_catalyst
from .errors import InputError, MajorizerError
from .families import bennett05_pair, bennett_pair, flip_pattern, midpoint_monotone_check
from .families import midpoint_sequence
from .functionals import ScanConfig
from .geometry import classify_extreme_point, contains_chain, rado_decompose
from .relations import (
    integer_trump_certificate,
    majorize,
    power_majorize,
    power_majorize_via_klimesh,
    submajorize,
    supermajorize,
    trumped,
)
from .schema import validate_report
from .utils.utils import get_logger, read_json, write_json
from .vectors import DVector
from .verdicts import jsonable

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_PREFILTER = 4

RELATIONS = {
    "majorize": lambda x, y, cfg: majorize(x, y),
    "submajorize": lambda x, y, cfg: submajorize(x, y),
    "supermajorize": lambda x, y, cfg: supermajorize(x, y),
    "power": power_majorize,
    "power-klimesh": power_majorize_via_klimesh,
    "trump": trumped,
    "certificate": integer_trump_certificate,
}

_INT_RE = re.compile(r"^[+-]?\d+$")


# **********************************
# Vector text
# **********************************


def _parse_token(token, exact: bool):
    if isinstance(token, bool):
        raise InputError(f"Not a number: {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, float):
        return Fraction(str(token)) if exact else token
    text = str(token).strip()
    try:
        if "/" in text:
            return Fraction(text)
        if _INT_RE.match(text):
            return int(text)
        return Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Cannot parse {text!r} as a number") from e


def parse_vector(text, exact: bool = False) -> DVector:
    """Parse whitespace-separated numbers or a JSON array into a :class:`DVector`.

    Integer and ``p/q`` tokens are exact; decimals are floats unless ``exact`` is set, in
    which case they are read as exact decimal fractions.

    Raises:
        InputError: unparsable text or an empty vector.
        DomainError: negative or non-finite components.

    """
    if isinstance(text, (list, tuple)):
        tokens = list(text)
    else:
        text = str(text).strip()
        if text.startswith("["):
            try:
                tokens = json.loads(text)
            except json.JSONDecodeError as e:
                raise InputError(f"Invalid JSON array: {e}") from e
            if not isinstance(tokens, list):
                raise InputError("JSON input must be an array of numbers")
        else:
            tokens = text.replace(",", " ").split()
    if not tokens:
        raise InputError("A vector needs at least one component")
    values = [_parse_token(t, exact) for t in tokens]
    return DVector(values, exact=True if exact else None)


def format_number(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def format_vector(v: DVector) -> str:
    """Canonical text: integers bare, other rationals as p/q, floats via ``repr``."""
    return " ".join(format_number(c) for c in v.components)


def expand_vectors(items: List[str], exact: bool) -> List[DVector]:
    """Turn positional arguments into vectors; ``@path`` reads one vector per line."""
    out_ls = []
    for item in items:
        if not item.startswith("@"):
            out_ls.append(parse_vector(item, exact))
            continue
        path = item[1:]
        try:
            if path.endswith(".json"):
                data = read_json(path)
                rows = data if data and isinstance(data[0], list) else [data]
            else:
                with open(path, "r", encoding="utf-8") as f:
                    rows = [ln for ln in f.read().splitlines() if ln.strip()]
                    rows = [ln for ln in rows if not ln.lstrip().startswith("#")]
        except OSError as e:
            raise InputError(f"Cannot read {path}: {e}") from e
        except (ValueError, TypeError, IndexError) as e:
            raise InputError(f"Cannot parse {path}: {e}") from e
        out_ls.extend(parse_vector(row, exact) for row in rows)
    return out_ls


def _pair(args) -> List[DVector]:
    vectors = expand_vectors(args.vectors, args.exact)
    if len(vectors) != 2:
        raise InputError(f"Expected exactly two vectors, got {len(vectors)}")
    return vectors


# **********************************
# Parser
# **********************************


def _build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    fmt = output.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="Machine-readable output")
    fmt.add_argument("--text", action="store_true", help="Human-readable output (default)")
    output.add_argument("--out", default=None, help="Also write the JSON report to this file")

    scan = argparse.ArgumentParser(add_help=False)
    scan.add_argument("--exact", action="store_true", help="Read decimals as exact fractions")
    scan.add_argument("--tol", type=float, default=None, help="Scanner margin tolerance")
    scan.add_argument("--r-max", type=float, default=None, help="Base scan window [-R, R]")
    scan.add_argument("--grid", type=int, default=None, help="Base grid points")

    parser = argparse.ArgumentParser(
        prog="majorizer", description="Majorization, trumping and catalysis checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[output, scan], help="Check a relation")
    check.add_argument("--relation", choices=sorted(RELATIONS), default="majorize")
    check.add_argument("vectors", nargs="+", help="Two vectors, inline or @file")

    catalyst = sub.add_parser("catalyst", parents=[output, scan], help="Search a catalyst")
    catalyst.add_argument("--max-dim", type=int, default=None)
    catalyst.add_argument("--restarts", type=int, default=None)
    catalyst.add_argument("--seed", type=int, default=None)
    catalyst.add_argument("vectors", nargs="+", help="Two vectors, inline or @file")

    gen = sub.add_parser("gen", help="Generate integer pairs")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    for name in ("bennett", "nonexample"):
        g = gen_sub.add_parser(name, parents=[output])
        g.add_argument("--n", type=int, required=True)

    riemann = sub.add_parser("riemann", parents=[output], help="Midpoint sums of t^p")
    riemann.add_argument("--p", type=float, required=True)
    riemann.add_argument("--n-max", type=int, required=True)
    riemann.add_argument("--a", type=float, default=0.0)
    riemann.add_argument("--b", type=float, default=2.0)

    geometry = sub.add_parser("geometry", help="S(y), T(y), P(y) reports")
    geo_sub = geometry.add_subparsers(dest="report", required=True)
    for name in ("membership", "extreme", "decompose"):
        g = geo_sub.add_parser(name, parents=[output, scan])
        g.add_argument("vectors", nargs="+", help="x then y, inline or @file")

    return parser


def _scan_config(args) -> ScanConfig:
    r_max = getattr(args, "r_max", None)
    return ScanConfig.from_env(
        r_lo=-r_max if r_max else None,
        r_hi=r_max,
        grid_points=getattr(args, "grid", None),
        margin_tol=getattr(args, "tol", None),
    )


def _emit(args, report: str, payload: Dict, lines: List[str]):
    """Print the text lines or the schema-checked JSON report, and write it to --out."""
    payload = validate_report({"report": report, **payload})
    if args.out:
        write_json(args.out, payload)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _verdict_lines(payload: Dict) -> List[str]:
    lines = []
    for key in ("relation", "status", "witness", "reason", "first_violation_k", "strict"):
        if payload.get(key) not in (None, ""):
            lines.append(f"{key}: {payload[key]}")
    return lines


# **********************************
# Commands
# **********************************


def _cmd_check(args) -> int:
    x, y = _pair(args)
    verdict = RELATIONS[args.relation](x, y, _scan_config(args))
    payload = verdict.to_dict()
    payload["x"], payload["y"] = format_vector(x), format_vector(y)
    lines = _verdict_lines(payload)
    ascending = getattr(verdict, "ascending_margins", None)
    if ascending and args.relation == "majorize" and not verdict.holds:
        flip = next((k for k, m in enumerate(ascending, start=1) if m < 0), None)
        payload["ascending_flip_k"] = flip
        if flip is not None:
            lines.append(f"ascending_flip_k: {flip}")
    _emit(args, "check", payload, lines)
    return verdict.status.exit_code


def _cmd_catalyst(args) -> int:
    x, y = _pair(args)
    search_cfg = SearchConfig.from_env(
        max_dim=args.max_dim, restarts_per_dim=args.restarts, seed=args.seed
    )
    report = search_catalyst(x, y, search_cfg, _scan_config(args))
    payload = report.to_dict()
    lines = []
    if report.found:
        lines.append(format_vector(report.catalyst.z))
    lines.append(json.dumps(payload, indent=2))
    _emit(args, "catalyst", payload, lines)
    if report.found:
        return EXIT_OK
    return EXIT_PREFILTER if report.prefilter_failed else EXIT_NOT_FOUND


def _cmd_gen(args) -> int:
    if args.family == "bennett":
        pair = bennett_pair(args.n)
        x, y = pair.x, pair.y
        pattern = flip_pattern(pair)
        extra = {"held_prefixes": pattern.held_prefixes, "flip_index": pattern.flip_index}
    else:
        x, y = bennett05_pair(args.n)
        extra = {}
    payload = {"family": args.family, "n": args.n, "x": jsonable(x.to_list())}
    payload["y"] = jsonable(y.to_list())
    payload.update(extra)
    _emit(args, "gen", payload, [format_vector(x), format_vector(y)])
    return EXIT_OK


def _cmd_riemann(args) -> int:
    values = midpoint_sequence(args.p, args.n_max, args.a, args.b)
    monotone = midpoint_monotone_check(args.p, args.n_max, args.a, args.b)
    direction = "increasing" if (args.p > 1 or args.p < 0) else "decreasing"
    payload = {
        "p": args.p,
        "n_max": args.n_max,
        "interval": [args.a, args.b],
        "values": values,
        "direction": direction,
        "monotone": monotone,
    }
    lines = [f"{n} {repr(v)}" for n, v in enumerate(values, start=1)]
    lines.append(f"monotone ({direction}): {str(monotone).lower()}")
    _emit(args, "riemann", payload, lines)
    return EXIT_OK if monotone else EXIT_FAILS


def _cmd_geometry(args) -> int:
    x, y = _pair(args)
    cfg = _scan_config(args)
    if args.report == "membership":
        report = contains_chain(x, y, cfg)
        payload = report.to_dict()
        lines = [f"{k}: {v}" for k, v in payload.items()]
        _emit(args, "membership", payload, lines)
        return EXIT_OK
    if args.report == "extreme":
        report = classify_extreme_point(x, y, cfg)
        payload = report.to_dict()
        _emit(args, "extreme", payload, [json.dumps(payload, indent=2)])
        return EXIT_OK
    if not majorize(x, y).holds:
        payload = {"error": "x is not majorized by y"}
        _emit(args, "decompose", payload, [payload["error"]])
        return EXIT_FAILS
    decomposition = rado_decompose(x, y)
    payload = decomposition.to_dict()
    lines = [
        f"{format_number(w)}\t{format_vector(y.permuted(p))}" for w, p in decomposition.terms
    ]
    lines.append(f"reconstruction_error: {decomposition.reconstruction_error:.3e}")
    _emit(args, "decompose", payload, lines)
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "catalyst": _cmd_catalyst,
    "gen": _cmd_gen,
    "riemann": _cmd_riemann,
    "geometry": _cmd_geometry,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on ``argv`` and return the exit code.

    Args:
        argv : Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns:
        The process exit code.

    """
    load_dotenv()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        return COMMANDS[args.command](args)
    except MajorizerError as e:
        logger.debug("command %s failed: %s", args.command, e)
        if getattr(args, "json", False):
            error_dc = {"report": "error", "status": "error", "code": EXIT_USAGE}
            error_dc["message"] = str(e)
            message = json.dumps(validate_report(error_dc))
            print(message, file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    raise SystemExit(run())


