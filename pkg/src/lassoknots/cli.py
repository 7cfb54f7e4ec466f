"""Command-line front end.

Exit codes: 0 success, 1 computation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings

from . import __version__
from .alexander import AlexanderSpecTerm, alexander_closure, parse_spec, realize_spec
from .braid import BraidParseError, BraidWord, bracket_closure, jones_closure, parallel_jones
from .catalog import CatalogError, lookup, resolve_knot, self_check
from .lasso import Lasso, LassoParseError, bracket, degree, jones_st, normalize, writhe
from .satellite import (
    AnnularPattern,
    SatelliteReport,
    SatelliteSpec,
    distinguish,
    satellite_alexander,
    satellite_bracket,
    satellite_jones,
    satellite_writhe,
)

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("lassoknots")


class UsageError(ValueError):
    pass


# -- argument helpers -------------------------------------------------------

def parse_pattern(text: str, axis: int = 0):
    text = text.strip()
    if text.startswith("L"):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return Lasso.parse(text)
    if text.upper().startswith("B"):
        return AnnularPattern(BraidWord.parse(text), axis)
    raise UsageError(f"pattern {text!r} is neither a lasso 'L(...)' nor a braid 'Bn: ...'")


def _family(template: str, values: str) -> list[Lasso]:
    if "r" not in template:
        raise UsageError(f"family template {template!r} has no 'r' placeholder")
    try:
        rs = [int(v) for v in values.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"--r expects comma-separated integers: {values!r}") from exc
    return [Lasso.parse(template.replace("r", str(r))) for r in rs]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_lasso(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        L = Lasso.parse(args.lasso)
    for w in caught:
        log.info("%s", w.message)
    payload = {"lasso": str(L)}
    if args.op == "degree":
        value = degree(normalize(L))
        payload["degree"] = value
        text = str(value)
    elif args.op == "writhe":
        value = writhe(L)
        payload["writhe"] = value
        text = str(value)
    elif args.op == "normalize":
        value = normalize(L)
        payload["normalized"] = str(value)
        text = str(value)
    elif args.op == "bracket":
        value = bracket(L)
        payload.update(bracket=value.to_json(), text=value.to_text())
        text = value.to_text()
    else:
        value = jones_st(L)
        payload.update(jones_st=value.to_json(), text=value.to_text())
        text = value.to_text()
    _emit(args, payload, text)
    return EXIT_OK


def cmd_knot(args) -> int:
    beta, name = resolve_knot(args.knot)
    payload = {"knot": name, "braid": str(beta)}
    if args.op == "jones":
        value = jones_closure(beta)
        payload["jones"] = value.to_text()
    elif args.op == "alexander":
        value = alexander_closure(beta)
        payload["alexander"] = value.to_text()
    elif args.op == "bracket":
        value = bracket_closure(beta, "sphere")
        payload["bracket"] = value.to_text()
    else:
        if args.k is None or args.k < 0:
            raise UsageError("parallel-jones needs --k K with K >= 0")
        value = parallel_jones(beta, args.k)
        payload.update(k=args.k, parallel_jones=value.to_text())
    _emit(args, payload, value.to_text())
    return EXIT_OK


def _satellite(args) -> SatelliteSpec:
    if not args.pattern:
        raise UsageError("--pattern is required")
    companion, name = resolve_knot(args.companion)
    return SatelliteSpec(parse_pattern(args.pattern[0], args.axis), companion, name)


def cmd_sat(args) -> int:
    if args.op == "distinguish":
        return _cmd_distinguish(args)
    s = _satellite(args)
    payload = {"satellite": str(s)}
    if args.op == "jones":
        value = satellite_jones(s, verify=args.verify)
        payload["jones"] = value.to_text()
        text = value.to_text()
    elif args.op == "alexander":
        value = satellite_alexander(s)
        payload["alexander"] = value.to_text()
        text = value.to_text()
    elif args.op == "bracket":
        value = satellite_bracket(s)
        payload.update(bracket=value.to_text(), writhe=satellite_writhe(s))
        text = value.to_text()
    else:
        report = SatelliteReport.of(s, verify=args.verify)
        payload = report.to_json()
        text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    if args.verify:
        payload["routes_agree"] = True
        if not args.json:
            text += "\nboth Jones routes agree"
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_distinguish(args) -> int:
    if args.family:
        if args.r is None:
            raise UsageError("--family needs --r with two values")
        patterns = _family(args.family, args.r)
    else:
        patterns = [parse_pattern(p) for p in args.pattern or ()]
    if len(patterns) != 2 or not all(isinstance(p, Lasso) for p in patterns):
        raise UsageError("distinguish needs exactly two lasso patterns")
    companion, name = resolve_knot(args.companion)
    report = distinguish(patterns[0], patterns[1], companion, name)
    payload = report.to_json()
    lines = [f"{SatelliteSpec(p, companion, name)}: jones {r.jones}; alexander {r.alexander}"
             for p, r in zip(patterns, (report.first, report.second))]
    lines.append(report.verdict)
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_realize(args) -> int:
    spec = parse_spec(args.spec)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lassos = [Lasso.parse(text) for text in args.lasso or ()]

    def alexander_of(name: str):
        return alexander_closure(lookup(name).braid)

    result = realize_spec(spec, alexander_of, lassos, proper_satellites=args.proper)
    payload = result.to_json()
    text = "\n".join([
        result.recipe,
        f"target: {result.target}",
        f"recomputed: {result.recomputed}",
        "certificate: " + ("equal" if result.verified else "MISMATCH"),
    ])
    _emit(args, payload, text)
    return EXIT_OK if result.verified else EXIT_FAILURE


def cmd_self_test(args) -> int:
    from .reference import reference_checks

    results = self_check() + reference_checks()
    failed = [r for r in results if not r[1]]
    if args.json:
        print(json.dumps({"checks": [{"label": l, "ok": ok, "value": d} for l, ok, d in results],
                          "passed": not failed}, indent=2))
    else:
        for label, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if not ok else ""))
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_FAILURE


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="lassoknots", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--self-test", action="store_true", help="recompute catalog and reference values")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("lasso", parents=[common], help="lasso invariants")
    p.add_argument("op", choices=["degree", "writhe", "bracket", "jones-st", "normalize"])
    p.add_argument("lasso", help='e.g. "L(1,2)"')
    p.set_defaults(func=cmd_lasso)

    p = sub.add_parser("knot", parents=[common], help="invariants of a catalog knot or braid closure")
    p.add_argument("op", choices=["jones", "alexander", "bracket", "parallel-jones"])
    p.add_argument("knot", help='catalog name (3_1) or braid ("B3: 1 -2 1 -2")')
    p.add_argument("--k", type=int, help="number of parallel strands")
    p.set_defaults(func=cmd_knot)

    p = sub.add_parser("sat", parents=[common], help="satellite invariants")
    p.add_argument("op", choices=["jones", "alexander", "bracket", "report", "distinguish"])
    p.add_argument("--pattern", action="append", help="lasso or annular braid; twice for distinguish")
    p.add_argument("--axis", type=int, default=0, help="first strand whose closure winds the core")
    p.add_argument("--companion", default="U")
    p.add_argument("--verify", action="store_true", help="evaluate both Jones routes")
    p.add_argument("--family", help='lasso template such as "L(r)" or "L(1,r)"')
    p.add_argument("--r", help="comma-separated values for the family template")
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("realize", parents=[common], help="knot with a requested Alexander polynomial")
    p.add_argument("spec", help='e.g. "5_1^2 * 8_19@3"')
    p.add_argument("--lasso", action="append", help="use this lasso for terms of matching degree")
    p.add_argument("--proper", action="store_true", help="use satellites for power-1 terms too")
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s: %(message)s")
    if args.self_test:
        return cmd_self_test(args)
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, LassoParseError, BraidParseError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # remaining ValueErrors come from realization-request or polynomial parsing or bad arguments
        if type(exc) is ValueError:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as exc:  # noqa: BLE001
        log.debug("traceback", exc_info=True)
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
