#!/usr/bin/env python3
"""Regenerate the committed Hochschild golden tables from the bar oracle.

The small-resolution path must reproduce these files exactly; no table value
is ever asserted by hand.  Run from the repository root:

    python3 scripts/gen_hh_golden.py
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from entriv.hochschild import GradedUnitalAlgebra, bar_hochschild  # noqa: E402

RINGS = ("Z", "F2", "F3", "Q")
NS = (1, 2, 3, 4)
SMAX = 6


def main():
    out = {}
    for ring in RINGS:
        out[ring] = {}
        for n in NS:
            table = bar_hochschild(GradedUnitalAlgebra.square_zero(ring, n), SMAX)
            out[ring][str(n)] = table.to_json()
    golden_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"
    target = golden_dir / "hochschild_s6.json"
    target.write_text(json.dumps(out, sort_keys=True, indent=1) + "\n")
    print(f"wrote {target}")
    # standalone table consumed by `hh --golden` in the acceptance manifest
    single = golden_dir / "hh_Z_n2_s6.json"
    single.write_text(json.dumps(out["Z"]["2"], sort_keys=True, indent=1) + "\n")
    print(f"wrote {single}")


if __name__ == "__main__":
    main()
