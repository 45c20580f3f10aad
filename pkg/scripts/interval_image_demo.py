#!/usr/bin/env python3
"""Show how interval images resolve as the cylinder depth grows.

For an interval that does not sit on the grid, the image comes back as a
certified superset with inner/outer measure bounds whose gap shrinks like
2 * s^-depth; on-grid intervals resolve exactly, including any isolated
image points contributed by the endpoints' second expansions.

  python scripts/interval_image_demo.py --schedule schedules/ternaryswap.json \
      --interval 2/27:4/27 --max-depth 6
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from radixforge.cylinders import image_of_interval
from radixforge.cli import load_schedule, parse_interval


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--schedule", required=True)
    ap.add_argument("--interval", default="1/5:2/3")
    ap.add_argument("--max-depth", type=int, default=8)
    args = ap.parse_args()

    sch = load_schedule(args.schedule)
    a, b = parse_interval(args.interval)
    print(f"interval [{a}, {b}] of length {b - a}")
    for depth in sch.boundaries_upto(args.max_depth):
        img = image_of_interval(a, b, sch, depth)
        tag = "exact" if img.exact else f"bounds [{img.inner}, {img.outer}]"
        print(f"depth {depth:2d}: {tag}")
        print("          " + json.dumps(img.to_json(), sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
