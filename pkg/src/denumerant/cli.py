"""
Command-line front end.

Every invocation writes exactly one envelope to stdout, as text or as a
single JSON line. Exit codes: 0 ok, 1 domain/precondition/overflow or
inconclusive, 2 usage error.
"""

from __future__ import annotations

import argparse
import enum
import json
import re
import sys
from fractions import Fraction
from typing import Any

from denumerant import bounds, conjecture, core, oracle, rk
from denumerant.errors import DomainError, PreconditionError, SearchInconclusive

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")

EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _decimal(text: str) -> int:
    if not _INT_RE.match(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _jsonable(value: Any) -> Any:
    # Integers become decimal strings so large values survive any JSON reader.
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _interval(iv: bounds.BoundInterval) -> dict[str, Any]:
    return {
        "lower": iv.lower,
        "upper": iv.upper,
        "integer_floor": iv.integer_floor,
        "integer_ceil": iv.integer_ceil,
    }


def cmd_count(args: argparse.Namespace) -> dict[str, Any]:
    a, b, c, n = args.a, args.b, args.c, args.n
    method = args.method
    if method == "formula":
        value = core.count_pairwise_coprime(a, b, c, n)
    elif method == "sawtooth":
        value = core.count_sawtooth(a, b, c, n)
    elif method == "brute":
        value = oracle.brute_force_count(a, b, c, n, cap=args.cap)
    else:
        value = core.count(a, b, c, n)
    result: dict[str, Any] = {"count": value, "method": method}
    if args.show_bounds:
        pairwise = min(a, b, c) >= 1 and core.is_pairwise_coprime(a, b, c)
        result["bounds"] = _interval(bounds.count_bounds(a, b, c, n)) if pairwise else None
    return result


def cmd_bounds(args: argparse.Namespace) -> dict[str, Any]:
    iv = bounds.count_bounds(args.a, args.b, args.c, args.n)
    return {**_interval(iv), "midpoint": iv.midpoint}


def _category(cat: rk.Category) -> dict[str, Any]:
    return {
        "category": cat.tag,
        "reason": cat.reason,
        "gamma": cat.gamma,
        "delta": cat.delta,
        "count_at_gamma": cat.count_at_gamma,
    }


def cmd_rk(args: argparse.Namespace) -> dict[str, Any]:
    res = rk.solve_rk(args.a, args.b, args.c, args.k, args.threshold)
    return {
        "regime": res.regime,
        **_category(res.category),
        "threshold": args.threshold,
        "threshold_M": res.threshold,
        "reduced": list(res.reduced),
        "members": list(res.members),
        "g": res.g_stat,
        "h": res.h_stat,
        "c": res.c_stat,
        "s": res.s_stat,
    }


def cmd_classify(args: argparse.Namespace) -> dict[str, Any]:
    res = rk.solve_rk(args.a, args.b, args.c, args.k, args.threshold)
    return {
        **_category(res.category),
        "threshold": args.threshold,
        "threshold_M": res.threshold,
        "reduced": list(res.reduced),
    }


def cmd_conjecture(args: argparse.Namespace) -> dict[str, Any]:
    rep = conjecture.check_counterexample(
        args.a, args.b, args.c, args.n, search_witnesses=args.search_witnesses, cap=args.cap
    )
    p = rep.profile
    result: dict[str, Any] = {
        "N1": p.N1,
        "N2": p.N2,
        "N3": p.N3,
        "Nhat": p.Nhat,
        "S1": [list(s) for s in p.s1_list],
        "S2": [list(s) for s in p.s2_list],
        "S3": [list(s) for s in p.s3_list],
        "consequence_bound": rep.consequence_bound,
        "bounds": _interval(rep.bound_interval) if rep.bound_interval else None,
        "exact_count": rep.exact_count,
        "consequence_holds": rep.conjecture_consequence_holds,
        "refuted": rep.refuted,
    }
    w = rep.decomposition_witness
    if w is not None:
        result["witness_search"] = {
            "targets": w.targets,
            "decomposed": w.decomposed,
            "undecomposable": [list(t) for t in w.undecomposable],
        }
    return result


# Value printed by --quiet in text mode.
_HEADLINE = {
    "count": "count",
    "bounds": None,
    "rk": "members",
    "classify": "category",
    "conjecture": "refuted",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a single-line JSON envelope")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="text mode: print only the main value")

    parser = _Parser(
        prog="denumerant",
        description="Count solutions of ax+by+cz=n and solve for n with exactly k solutions.",
    )
    parser.add_argument("--json", action="store_true", help="emit a single-line JSON envelope")
    parser.add_argument("--quiet", action="store_true", help="text mode: print only the main value")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple(p: argparse.ArgumentParser, last: str) -> None:
        for name in ("a", "b", "c", last):
            p.add_argument(name, type=_decimal)

    p = sub.add_parser("count", parents=[common], help="number of solutions")
    triple(p, "n")
    p.add_argument("--method", choices=["formula", "sawtooth", "brute", "auto"], default="auto")
    p.add_argument("--show-bounds", action="store_true")
    p.add_argument("--cap", type=_decimal, default=oracle.DEFAULT_CAP,
                   help="largest n accepted by --method brute")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", parents=[common], help="strict bounds on the count")
    triple(p, "n")
    p.set_defaults(func=cmd_bounds)

    for name, func, help_ in (
        ("rk", cmd_rk, "the set of n with exactly k solutions"),
        ("classify", cmd_classify, "category of k"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        triple(p, "k")
        p.add_argument("--threshold", choices=[t.value for t in rk.Threshold],
                       default=rk.Threshold.THEOREM3.value)
        p.set_defaults(func=func)

    p = sub.add_parser("conjecture", parents=[common], help="boundary profile and consequence bound")
    triple(p, "n")
    p.add_argument("--search-witnesses", action="store_true",
                   help="try to decompose every solution")
    p.add_argument("--cap", type=_decimal, default=conjecture.DEFAULT_SEARCH_CAP,
                   help="largest number of (s1, s3) pairs per target")
    p.set_defaults(func=cmd_conjecture)
    return parser


def _render_text(value: Any) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_render_text(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_text(v) for v in value) + "]"
    if isinstance(value, enum.Enum):
        return str(value.value)
    return str(value)


def _emit(envelope: dict[str, Any], as_json: bool, quiet: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(envelope), separators=(",", ":")))
        return
    result = envelope["result"]
    if envelope["status"] != "ok":
        print(f"{envelope['status']}: {envelope['message']}")
        return
    key = _HEADLINE.get(envelope["command"])
    if quiet and key is not None:
        print(_render_text(result[key]))
        return
    shown = list(envelope["inputs"].values())[:4]
    print(f"{envelope['command']} {' '.join(str(v) for v in shown)}")
    for k, v in result.items():
        print(f"  {k}: {_render_text(v)}")


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(parser.format_usage(), end="", file=sys.stderr)
        print(exc, file=sys.stderr)
        as_json = "--json" in argv
        _emit({"command": None, "inputs": {"argv": list(argv)}, "result": None,
               "status": "usage_error", "message": str(exc)}, as_json, False)
        return EXIT_USAGE

    positional = ("a", "b", "c", "k" if args.command in ("rk", "classify") else "n")
    inputs = {name: getattr(args, name) for name in positional}
    for opt in ("method", "show_bounds", "threshold", "search_witnesses", "cap"):
        if hasattr(args, opt):
            inputs[opt] = getattr(args, opt)

    status, message, result, code = "ok", "", None, EXIT_OK
    try:
        result = args.func(args)
    except DomainError as exc:
        status, message, code = "domain_error", str(exc), EXIT_ERROR
    except PreconditionError as exc:
        status, message, code = "precondition_error", str(exc), EXIT_ERROR
    except SearchInconclusive as exc:
        status, message, code = "inconclusive", str(exc), EXIT_ERROR
    except OverflowError as exc:
        status, message, code = "overflow", str(exc), EXIT_ERROR
    if code:
        print(message, file=sys.stderr)
    envelope = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "status": status,
        "message": message,
    }
    _emit(envelope, args.json, args.quiet)
    return code


if __name__ == "__main__":
    sys.exit(main())
