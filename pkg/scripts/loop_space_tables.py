#!/usr/bin/env python3
"""Print free-loop-space cohomology tables computed from Hochschild homology
of the square-zero extension, for a few spheres and coefficient rings.

    python3 scripts/loop_space_tables.py [smax]
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from entriv.hochschild import loop_space_table  # noqa: E402


def main():
    smax = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    for n in (2, 3, 4):
        for ring in ("Z", "Q", "F2"):
            table = loop_space_table(n, ring, smax)
            print(f"\n== sphere dimension {n}, coefficients {ring} "
                  f"(complete through degree {table.complete_through})")
            print(table.markdown())


if __name__ == "__main__":
    main()
