#!/usr/bin/env python3
"""Emit a CSV grid of the distribution function or its digit-map composition.

Examples:
  python scripts/distribution_grid.py --p 1/4,3/4 --points 512 --out F.csv
  python scripts/distribution_grid.py --p 1/3,2/3 --schedule schedules/pairflip.json \
      --function fD --points 1024 --out fD.csv

The emitted grid is what one plots to eyeball how mass is redistributed by
skewed digit probabilities and by the digit map; all values in the CSV are
exact rationals with decimal display columns.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from radixforge.analysis import ProbabilityVector, decimal_string, distribution_rows
from radixforge.cli import load_schedule, parse_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", required=True, help="comma-separated digit probabilities")
    ap.add_argument("--schedule", help="schedule JSON file (optional for F)")
    ap.add_argument("--function", choices=["F", "fD"], default="F")
    ap.add_argument("--points", type=int, default=256)
    ap.add_argument("--out", default="-", help="output CSV path, - for stdout")
    args = ap.parse_args()

    p = ProbabilityVector.constant([parse_rational(t) for t in args.p.split(",")])
    sch = load_schedule(args.schedule) if args.schedule else None
    rows = distribution_rows(p, sch, args.points, args.function)
    lines = ["x,F,x_decimal,F_decimal"]
    lines += [f"{x},{v},{decimal_string(x)},{decimal_string(v)}" for x, v in rows]
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
