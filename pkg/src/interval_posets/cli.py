"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 domain
violation, 4 method mismatch, 5 size cap exceeded.
"""
import argparse
from dataclasses import dataclass, field
import json
import os
import sys
import time

from .bijection import b_poset, phi, phi_inverse, psi
from .dissection import Dissection
from .enumeration import FAMILIES, METHODS, count_table
from .errors import (HasCrossings, HasQuadrilateral, IntervalPosetError, InvalidDissection,
                     InvalidPoset, MalformedInput, NotAPermutation, NotBinary, NotFramed,
                     TooLarge)
from .permutation import intervals_of, is_block_wise_simple, is_separable, is_simple, parse_permutation
from .poset import IntervalPoset, build_poset, classify, to_dot, validate_interval_poset
from .render import render_svg
from .suites import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_CAP = range(6)


@dataclass
class RunReport:
    command: str
    status: str = "pass"
    rows: list = field(default_factory=list)
    wall_time: float = 0.0


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_json(source):
    """``source`` is a path to a JSON file or inline JSON text."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    return json.loads(source)


def cmd_analyze(args):
    report = RunReport("analyze")
    p = parse_permutation(args.permutation)
    P = build_poset(p)
    c = classify(P)
    print(f"permutation: {p}")
    print(f"n: {p.n}")
    print("intervals: " + " ".join(str(iv) for iv in sorted(intervals_of(p))))
    proper = P.proper()
    print("proper intervals: " + (" ".join(map(str, proper)) if proper else "none"))
    flags = [
        ("simple", is_simple(p)),
        ("separable", is_separable(p)),
        ("block-wise simple", is_block_wise_simple(p)),
        ("poset tree", c.is_tree),
        ("poset binary", c.is_binary),
        ("poset dual claw", c.is_dual_claw),
        ("poset argyle", c.is_argyle),
    ]
    for name, value in flags:
        print(f"{name}: {str(value).lower()}")
    report.rows = flags
    if args.dot:
        _write(args.dot, to_dot(P))
    if args.json:
        _write(args.json, P.dumps())
    return report


def _infer_direction(data):
    if "m" in data:
        return "dissection-to-poset"
    if "n" in data:
        return "poset-to-dissection"
    raise MalformedInput("JSON needs an 'n' (poset) or 'm' (dissection) field")


def cmd_convert(args):
    report = RunReport("convert")
    try:
        data = _load_json(args.input)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    direction = args.direction or _infer_direction(data)
    try:
        if direction == "poset-to-dissection":
            P = IntervalPoset.from_json(data)
            if args.map == "phi":
                check = validate_interval_poset(P, P.n)
                if not check:
                    raise InvalidPoset(f"{check.reason}: not an interval poset")
                result = phi(P)
            else:
                result = psi(P)
            if args.svg:
                render_svg(result, args.svg)
        else:
            D = Dissection.from_json(data)
            result = phi_inverse(D) if args.map == "phi" else b_poset(D)
            if args.svg:
                render_svg(D, args.svg)
            if args.dot:
                _write(args.dot, to_dot(result))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, IntervalPosetError):
            raise
        raise MalformedInput(f"input does not match the JSON schema: {exc}") from None
    text = result.dumps()
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    report.rows = [result.to_json()]
    return report


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def cmd_enumerate(args):
    report = RunReport("enumerate")
    try:
        ns = _parse_range(args.range)
        methods = [m.strip() for m in args.methods.split(",")] if args.methods else list(METHODS)
    except ValueError:
        raise MalformedInput(f"bad range {args.range!r}; use e.g. 2..7") from None
    bad = [m for m in methods if m not in METHODS]
    if bad:
        raise MalformedInput(f"unknown methods {bad}; expected some of {list(METHODS)}")
    table = count_table(args.family, ns, methods, workers=args.workers, big=args.big)
    text = (json.dumps(table.to_json(), indent=2) + "\n") if args.format == "json" else table.to_csv()
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    report.rows = table.rows
    mismatched = table.mismatches()
    if mismatched:
        report.status = "fail"
        print(f"methods disagree at n = {mismatched}", file=sys.stderr)
    return report


def cmd_verify(args):
    report = RunReport("verify")
    if args.poset:
        try:
            data = _load_json(args.poset)
            n = int(data["n"])
            S = [tuple(iv) for iv in data["intervals"]]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad poset JSON: {exc}") from None
        check = validate_interval_poset(S, n)
        line = "PASS poset fixture" if check else f"FAIL poset fixture: {check.reason}"
        print(line)
        if not check:
            print(f"  counterexample: {json.dumps({'n': n, 'intervals': sorted(map(list, S))})}")
            report.status = "fail"
        report.rows.append(line)
        return report
    names = [s.strip() for s in args.suites.split(",")] if args.suites else None
    try:
        results = run_suites(args.max_n, names, workers=args.workers)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None
    for res in results:
        print(res.line())
    report.rows = results
    if not all(r.passed for r in results):
        report.status = "fail"
    return report


def build_parser():
    parser = argparse.ArgumentParser(
        prog="interval-posets",
        description="Interval posets of permutations and their polygon dissections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="intervals and classification of a permutation")
    p.add_argument("permutation", help='e.g. 314297856 or "2,4,1,3"')
    p.add_argument("--dot", metavar="FILE", help="write the Hasse diagram as DOT")
    p.add_argument("--json", metavar="FILE", help="write the poset as JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", help="map a poset to its dissection or back")
    p.add_argument("input", help="JSON file or inline JSON")
    p.add_argument("--direction", choices=["poset-to-dissection", "dissection-to-poset"],
                   help="default: inferred from the JSON fields")
    p.add_argument("--map", choices=["phi", "psi"], default="phi")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--svg", metavar="FILE", help="render the dissection")
    p.add_argument("--dot", metavar="FILE", help="render the resulting poset")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="count a family by several methods")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("range", help="sizes n, e.g. 2..7")
    p.add_argument("--methods", help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--big", action="store_true", help="allow the n=10 permutation scan")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--suites", help="comma-separated subset of " + ",".join(SUITES))
    p.add_argument("--poset", metavar="FILE", help="validate one poset JSON instead")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (MalformedInput, NotAPermutation) as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotFramed, HasQuadrilateral, NotBinary, HasCrossings, InvalidPoset,
            InvalidDissection) as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    report.wall_time = time.perf_counter() - start
    if report.status == "pass":
        return EXIT_OK
    return EXIT_MISMATCH if report.command == "enumerate" else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
