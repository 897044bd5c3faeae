"""Command-line front end.

Exit codes: 0 clean, 1 a violation / bad pair / non-smooth pair was found,
2 usage error, 3 order-window error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from pathlib import Path

from . import consistency, metrics, smoothness
from .engine import assignment_from_json, segment
from .grid import DigitalSegment, Point
from .orders import ExplicitWindow, OrderWindowError, spec_from_json
from .render import RenderStyle, render

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_WINDOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_json(value: str):
    text = value.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(value).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {value!r}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _assignment(value: str):
    return assignment_from_json(_load_json(value))


def _ints(text: str) -> list:
    return [int(v) for v in text.split(",") if v.strip()]


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_gen(args) -> int:
    if args.render and not args.out:
        raise UsageError("--render needs --out")
    assignment = _assignment(args.assignment)
    seg = segment(assignment, Point.parse(args.from_), Point.parse(args.to))
    _emit(seg.to_json())
    if args.render:
        Path(args.out).write_text(render([seg], RenderStyle(args.render, args.cell_size, args.annotate_sums)))
    return EXIT_OK


def cmd_verify(args) -> int:
    assignment = _assignment(args.assignment)
    region = consistency.Region.parse(args.region)
    props = [p.strip().upper() for p in args.properties.split(",") if p.strip()]
    report = consistency.verify_region(assignment, region, props, max_side=args.max_region)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FOUND


def _random_trial(rng: random.Random, max_end_sum: int):
    def spec(lo):
        values = list(range(lo, max_end_sum + 1))
        rng.shuffle(values)
        return ExplicitWindow(lo, max_end_sum, values)

    span = max(0, (max_end_sum - 1) // 4)
    while True:
        p1 = Point(rng.randint(-span, span), rng.randint(-span, span))
        p2 = Point(rng.randint(-span, span), rng.randint(-span, span))
        if max(p1.sum, p2.sum) < max_end_sum:
            return p1, spec(p1.sum), p2, spec(p2.sum)


def cmd_badpair(args) -> int:
    if args.random_trials is not None:
        rng = random.Random(args.seed)
        failures = []
        for trial in range(args.random_trials):
            p1, s1, p2, s2 = _random_trial(rng, args.max_end_sum)
            report = consistency.equivalence_check(p1, s1, p2, s2, args.max_end_sum)
            if not report.consistent:
                failures.append({"trial": trial, "p1": list(p1), "spec1": s1.to_json(),
                                 "p2": list(p2), "spec2": s2.to_json(), **report.to_json()})
        _emit({"trials": args.random_trials, "seed": args.seed, "inconsistent": len(failures),
               "consistent": not failures, "failures": failures})
        return EXIT_OK if not failures else EXIT_FOUND

    if not (args.p1 and args.p2 and args.spec1 and args.spec2):
        raise UsageError("--p1, --spec1, --p2 and --spec2 are required")
    p1, p2 = Point.parse(args.p1), Point.parse(args.p2)
    spec1, spec2 = spec_from_json(_load_json(args.spec1)), spec_from_json(_load_json(args.spec2))
    if args.equivalence:
        report = consistency.equivalence_check(p1, spec1, p2, spec2, args.max_end_sum)
        _emit(report.to_json())
        return EXIT_FOUND if report.bad_pair else EXIT_OK
    finding = consistency.find_bad_pair(p1, spec1, p2, spec2, args.max_end_sum)
    if finding is None:
        print("none")
        return EXIT_OK
    _emit(finding.to_json())
    return EXIT_FOUND


def cmd_smooth(args) -> int:
    assignment = _assignment(args.assignment)
    if args.pair:
        coords = _ints(args.pair)
        if len(coords) != 8:
            raise UsageError("--pair needs fromA,toA,fromB,toB as eight integers")
        a1, a2, b1, b2 = (Point(coords[i], coords[i + 1]) for i in range(0, 8, 2))
        s1, s2 = segment(assignment, a1, a2), segment(assignment, b1, b2)
        profile = smoothness.dist_profile(s1, s2)
        verdict = smoothness.is_smooth_pair(s1, s2)
        _emit({**verdict.to_json(), "profile": profile.to_json(), "dists": profile.dists,
               "segments": [s1.to_json(), s2.to_json()]})
        return EXIT_OK if verdict.smooth else EXIT_FOUND
    if not args.region:
        raise UsageError("either --pair or --region is required")
    region = consistency.Region.parse(args.region)
    if args.window_length:
        report = smoothness.agreement_smoothness_check(assignment, region, args.window_length, margin=args.margin,
                                         max_side=args.max_region)
        _emit(report.to_json())
        return EXIT_OK if report.smooth_all else EXIT_FOUND
    report = smoothness.is_smooth_region(assignment, region, margin=args.margin or 0, max_side=args.max_region)
    _emit(report.to_json())
    return EXIT_OK if report.smooth else EXIT_FOUND


def cmd_hausdorff(args) -> int:
    assignment = _assignment(args.assignment)
    p = Point.parse(args.from_)
    if args.to:
        q = Point.parse(args.to)
        direction, n_values = (q.x - p.x, q.y - p.y), [1]
    elif args.direction and args.n:
        direction, n_values = tuple(_ints(args.direction)), _ints(args.n)
        if len(direction) != 2:
            raise UsageError("--direction needs dx,dy")
    else:
        raise UsageError("give --to, or --direction together with --n")
    rows = metrics.hausdorff_growth(assignment, p, direction, n_values, args.step)
    sys.stdout.write(metrics.rows_to_csv(rows))
    return EXIT_OK


def cmd_render(args) -> int:
    data = json.loads(sys.stdin.read())
    if isinstance(data, dict) and "segments" in data:
        data = data["segments"]
    if isinstance(data, dict):
        data = [data]
    segments = [DigitalSegment.from_json(item) for item in data]
    text = render(segments, RenderStyle(args.format, args.cell_size, args.annotate_sums))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdsgrid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def style_flags(p, default_format=None):
        if default_format is None:
            p.add_argument("--render", choices=["svg", "ascii"])
        else:
            p.add_argument("--format", choices=["svg", "ascii"], default=default_format)
        p.add_argument("--cell-size", type=int, default=24)
        p.add_argument("--annotate-sums", action="store_true")
        p.add_argument("--out")

    p = sub.add_parser("gen", help="generate one segment")
    p.add_argument("--assignment", required=True, help="assignment JSON, inline or a file path")
    p.add_argument("--from", dest="from_", required=True, metavar="X,Y")
    p.add_argument("--to", required=True, metavar="X,Y")
    style_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check S1-S5 over a region")
    p.add_argument("--assignment", required=True)
    p.add_argument("--region", required=True, metavar="X0:X1,Y0:Y1")
    p.add_argument("--properties", default="S1,S2,S3,S4,S5")
    p.add_argument("--max-region", type=int, default=None, help="max region side (default 17 or CDS_MAX_REGION)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("badpair", help="search two orders for a bad pair")
    p.add_argument("--p1")
    p.add_argument("--spec1")
    p.add_argument("--p2")
    p.add_argument("--spec2")
    p.add_argument("--max-end-sum", type=int, required=True)
    p.add_argument("--equivalence", action="store_true", help="also run the conflict and witness searches")
    p.add_argument("--random-trials", type=int, help="run seeded random equivalence trials instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_badpair)

    p = sub.add_parser("smooth", help="distance profiles and smoothness")
    p.add_argument("--assignment", required=True)
    p.add_argument("--region", metavar="X0:X1,Y0:Y1")
    p.add_argument("--pair", metavar="AX,AY,BX,BY,CX,CY,DX,DY")
    p.add_argument("--margin", type=int, default=None)
    p.add_argument("--window-length", type=int, help="also check order agreement (full equivalence report)")
    p.add_argument("--max-region", type=int, default=None)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("hausdorff", help="Hausdorff distance to the Euclidean segment, as CSV")
    p.add_argument("--assignment", required=True)
    p.add_argument("--from", dest="from_", required=True, metavar="X,Y")
    p.add_argument("--to", metavar="X,Y")
    p.add_argument("--direction", metavar="DX,DY")
    p.add_argument("--n", metavar="N1,N2,...")
    p.add_argument("--step", type=float, default=metrics.DEFAULT_STEP)
    p.set_defaults(func=cmd_hausdorff)

    p = sub.add_parser("render", help="draw segment JSON read from stdin")
    style_flags(p, default_format="svg")
    p.set_defaults(func=cmd_render)
    return parser


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _join_negative_values(argv: list) -> list:
    # "--from -2,2" would otherwise be read as an unknown flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(argv))
    try:
        return args.func(args)
    except OrderWindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except (UsageError, consistency.RegionCapError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
