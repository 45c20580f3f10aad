#!/usr/bin/env python3
"""Regenerate the schedule JSON files in schedules/ from the library fixtures."""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from radixforge.fixtures import named_schedules


def main() -> int:
    target = Path(__file__).resolve().parents[1] / "schedules"
    target.mkdir(exist_ok=True)
    for name, sch in sorted(named_schedules().items()):
        path = target / f"{name}.json"
        path.write_text(json.dumps(sch.to_json(), sort_keys=True, indent=2) + "\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
