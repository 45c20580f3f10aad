"""Command-line front end: every library operation behind one subcommand.

Exact rationals cross this boundary as ``p/q`` strings; decimals appear only
as extra display columns.  Exit codes: 0 success, 1 domain error, 2 parse or
usage error.  Identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import analysis, cylinders, fixtures, representations
from .blockops import OperatorSchedule
from .words import DigitWord, ParseError, SignPattern

RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Exact p/q parser; decimal notation is deliberately rejected."""
    if not RATIONAL_RE.fullmatch(text.strip()):
        raise ParseError(f"{text!r} is not an exact rational (use p/q or an integer)")
    return Fraction(text.strip())


def parse_interval(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ParseError(f"{text!r} is not an interval (use a:b)")
    return parse_rational(parts[0]), parse_rational(parts[1])


def parse_digit_seq(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse ``pre(per)`` digit sequences; commas allowed for multi-digit entries."""
    m = re.fullmatch(r"([0-9,]*)\(([0-9,]+)\)", text.strip())
    if not m:
        raise ParseError(f"{text!r} is not a digit sequence (use pre(per))")

    def read(chunk: str) -> tuple[int, ...]:
        if not chunk:
            return ()
        parts = [p for p in chunk.split(",") if p] if "," in chunk else list(chunk)
        return tuple(int(p) for p in parts)

    return read(m.group(1)), read(m.group(2))


def parse_base_digits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    parts = [p for p in text.split(",") if p] if "," in text else list(text)
    return tuple(int(p) for p in parts)


def load_schedule(path: str) -> OperatorSchedule:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read schedule file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"schedule file {path} is not valid JSON: {exc}") from exc
    return OperatorSchedule.from_json(obj)


def max_rank_cap() -> int:
    raw = os.environ.get("RADIXFORGE_MAX_RANK", "20")
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"RADIXFORGE_MAX_RANK={raw!r} is not an integer") from exc


def check_rank(label: str, value: int) -> None:
    cap = max_rank_cap()
    if value > cap:
        raise ValueError(f"{label} {value} exceeds RADIXFORGE_MAX_RANK ({cap})")


def default_scan_rank(sch: OperatorSchedule) -> int:
    """Preperiod plus two schedule periods: covers every anchor switch."""
    return min(sch.pre_digits + 2 * sch.per_digits, max_rank_cap())


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _render(args, plain: str, obj) -> None:
    fmt = getattr(args, "format", "plain")
    if fmt == "json":
        _emit(args, _json(obj))
    elif fmt == "plain":
        _emit(args, plain)
    else:
        raise ParseError("csv output is only available for the dist subcommand")


def cmd_expand(args) -> int:
    from .words import expand
    w = expand(parse_rational(args.x), args.base)
    _render(args, str(w), w.to_json())
    return 0


def cmd_eval(args) -> int:
    from .words import evaluate
    v = evaluate(DigitWord.parse(args.word))
    _render(args, str(v), {"value": str(v)})
    return 0


def cmd_transform(args) -> int:
    sch = load_schedule(args.schedule)
    w = DigitWord.parse(args.word)
    out = (representations.inverse_transform if args.inverse
           else representations.transform)(w, sch)
    _render(args, str(out), out.to_json())
    return 0


def cmd_classify(args) -> int:
    sch = load_schedule(args.schedule)
    res = representations.classify_point(parse_rational(args.x), sch)
    plain = (f"{res.kind}: images {' '.join(str(w) for w in res.images)}"
             f" values {' '.join(str(v) for v in res.values)}"
             + (f" equal={res.equal}" if res.equal is not None else ""))
    _render(args, plain, res.to_json())
    return 0


def cmd_cylinder(args) -> int:
    base = parse_base_digits(args.base)
    system = load_schedule(args.schedule) if args.schedule else args.base_s
    if system is None:
        raise ParseError("cylinder needs --schedule or --base-s")
    cyl = cylinders.cylinder_interval(base, system)
    obj = {"base": list(cyl.base), "rank": cyl.rank,
           "interval": [str(cyl.lo), str(cyl.hi)], "length": str(cyl.length)}
    plain = f"[{cyl.lo}, {cyl.hi}] length {cyl.length}"
    if args.children:
        kids = cylinders.children(cyl)
        obj["children"] = [{"base": list(c.base), "interval": [str(c.lo), str(c.hi)]}
                           for c in kids]
        plain += "\n" + "\n".join(
            f"{''.join(map(str, c.base))} [{c.lo}, {c.hi}]" for c in kids)
    _render(args, plain, obj)
    return 0


def cmd_image(args) -> int:
    sch = load_schedule(args.schedule)
    check_rank("depth", args.depth)
    a, b = parse_interval(args.interval)
    img = cylinders.image_of_interval(a, b, sch, args.depth)
    plain_parts = [" U ".join(f"[{lo}, {hi}]" for lo, hi in img.intervals) or "(empty)"]
    if img.points:
        plain_parts.append("points {" + ", ".join(str(p) for p in img.points) + "}")
    plain_parts.append(f"measure {img.measure}" if img.exact
                       else f"measure in [{img.inner}, {img.outer}]")
    _render(args, "; ".join(plain_parts), img.to_json())
    return 0


def cmd_adjacency(args) -> int:
    sch = load_schedule(args.schedule)
    check_rank("rank", args.rank)
    prof = cylinders.adjacency_profile(sch, args.rank)
    plain = f"{prof.kind}: " + ",".join(str(j) for j in prof.left_to_right)
    _render(args, plain, prof.to_json())
    return 0


def cmd_continuity(args) -> int:
    sch = load_schedule(args.schedule)
    res = analysis.continuity_classify(parse_rational(args.x), sch)
    plain = "continuous" if res.continuous else f"jump {res.jump} (left {res.left}, right {res.right})"
    _render(args, plain, res.to_json())
    return 0


def cmd_monotonicity(args) -> int:
    sch = load_schedule(args.schedule)
    rank = args.rank if args.rank is not None else default_scan_rank(sch)
    check_rank("rank", rank)
    res = analysis.monotonicity_scan(sch, rank)
    plain = res.kind
    if res.witness:
        plain += " witness " + " ".join(str(x) for x in res.witness)
    _render(args, plain, res.to_json())
    return 0


def cmd_distance(args) -> int:
    sch = load_schedule(args.schedule)
    rank = args.rank if args.rank is not None else default_scan_rank(sch)
    check_rank("rank", rank)
    pair = analysis.distance_counterexample(sch, rank)
    if pair is None:
        _render(args, "none", {"witness": None})
    else:
        _render(args, f"{pair[0]} {pair[1]}", {"witness": [str(pair[0]), str(pair[1])]})
    return 0


def cmd_integral(args) -> int:
    sch = load_schedule(args.schedule)
    K = sum(sch.op_for_block(m).k for m in range(1, args.blocks + 1))
    check_rank("partition rank", K)
    v = analysis.partition_integral(sch, args.blocks)
    _render(args, str(v), {"blocks": args.blocks, "rank": K, "value": str(v)})
    return 0


def cmd_dist(args) -> int:
    probs = tuple(parse_rational(p) for p in args.p.split(","))
    pvec = analysis.ProbabilityVector.constant(probs)
    sch = load_schedule(args.schedule) if args.schedule else None
    if getattr(args, "format", "csv") != "csv":
        raise ParseError("dist emits CSV; use --format csv")
    rows = analysis.distribution_rows(pvec, sch, args.points, args.function)
    lines = ["x,F,x_decimal,F_decimal"]
    for x, v in rows:
        lines.append(f"{x},{v},{analysis.decimal_string(x)},{analysis.decimal_string(v)}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_nega(args) -> int:
    v = representations.nega_value(DigitWord.parse(args.word))
    _render(args, str(v), {"value": str(v)})
    return 0


def cmd_quasinega(args) -> int:
    pattern = SignPattern.parse(args.pattern)
    if args.bounds:
        if args.base is None:
            raise ParseError("quasinega --bounds needs --base")
        lo, hi = representations.quasi_bounds(args.base, pattern)
        _render(args, f"{lo} {hi}", {"lo": str(lo), "hi": str(hi)})
    elif args.expand_x is not None:
        if args.base is None:
            raise ParseError("quasinega --expand-x needs --base")
        w = representations.quasi_nega_expand(parse_rational(args.expand_x), args.base, pattern)
        _render(args, str(w), w.to_json())
    else:
        if args.word is None:
            raise ParseError("quasinega needs --word (or --bounds / --expand-x)")
        v = representations.quasi_nega_value(DigitWord.parse(args.word), pattern)
        _render(args, str(v), {"value": str(v)})
    return 0


def cmd_cantor(args) -> int:
    e_pre, e_per = parse_digit_seq(args.digits)
    q_pre, q_per = parse_digit_seq(args.bases)
    pattern = SignPattern.parse(args.pattern) if args.pattern else None
    v = representations.cantor_value(e_pre, e_per, q_pre, q_per, pattern)
    _render(args, str(v), {"value": str(v)})
    return 0


def cmd_paper_fixtures(args) -> int:
    lines = []
    failures = 0
    for name, ok, detail in fixtures.fixture_checks():
        if ok:
            lines.append(f"PASS {name}")
        else:
            failures += 1
            lines.append(f"FAIL {name} ({detail})")
    lines.append(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}")
    _emit(args, "\n".join(lines))
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixforge",
        description="Exact arithmetic for digit-permuted positional numeral systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
        p.add_argument("--output", help="write to this path instead of stdout")
        return p

    p = add("expand", cmd_expand, help="base-s expansion of a rational")
    p.add_argument("--x", required=True)
    p.add_argument("--base", type=int, required=True)

    p = add("eval", cmd_eval, help="exact value of a digit word")
    p.add_argument("--word", required=True)

    p = add("transform", cmd_transform, help="blockwise digit rewrite of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--inverse", action="store_true")

    p = add("classify", cmd_classify, help="map both expansions of a point")
    p.add_argument("--x", required=True)
    p.add_argument("--schedule", required=True)

    p = add("cylinder", cmd_cylinder, help="endpoints of a cylinder")
    p.add_argument("--base", default="")
    p.add_argument("--base-s", type=int, dest="base_s")
    p.add_argument("--schedule")
    p.add_argument("--children", action="store_true")

    p = add("image", cmd_image, help="image of an interval under the digit map")
    p.add_argument("--interval", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--depth", type=int, required=True)

    p = add("adjacency", cmd_adjacency, help="left-to-right order of image cylinders")
    p.add_argument("--schedule", required=True)
    p.add_argument("--rank", type=int, required=True)

    p = add("continuity", cmd_continuity, help="continuity or jump at a point")
    p.add_argument("--x", required=True)
    p.add_argument("--schedule", required=True)

    p = add("monotonicity", cmd_monotonicity, help="monotonicity class of the map")
    p.add_argument("--schedule", required=True)
    p.add_argument("--rank", type=int)

    p = add("distance", cmd_distance, help="distance non-preservation witness")
    p.add_argument("--schedule", required=True)
    p.add_argument("--rank", type=int)

    p = add("integral", cmd_integral, help="partition sum over n blocks")
    p.add_argument("--schedule", required=True)
    p.add_argument("--blocks", type=int, required=True)

    p = add("dist", cmd_dist, help="CSV grid of the distribution function")
    p.set_defaults(format="csv")
    p.add_argument("--p", required=True, help="comma-separated digit probabilities")
    p.add_argument("--schedule")
    p.add_argument("--points", type=int, default=256)
    p.add_argument("--function", choices=["F", "fD"], default="F")

    p = add("nega", cmd_nega, help="value of a word read in base -s")
    p.add_argument("--word", required=True)

    p = add("quasinega", cmd_quasinega, help="sign-patterned expansion value/bounds/word")
    p.add_argument("--pattern", required=True, help="odd|even|all|none or pre(per) over 0/1")
    p.add_argument("--word")
    p.add_argument("--base", type=int)
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--expand-x", dest="expand_x")

    p = add("cantor", cmd_cantor, help="value of a variable-base digit series")
    p.add_argument("--digits", required=True, help="digit sequence pre(per)")
    p.add_argument("--bases", required=True, help="base sequence pre(per)")
    p.add_argument("--pattern")

    add("paper-fixtures", cmd_paper_fixtures, help="run all pinned worked examples")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"radixforge: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"radixforge: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
