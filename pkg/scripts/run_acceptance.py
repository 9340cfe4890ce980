#!/usr/bin/env python3
"""Run the acceptance suite and the CLI-level manifest, printing one line per
criterion.  Exits nonzero on any failure.

    python3 scripts/run_acceptance.py
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def main() -> int:
    rc = subprocess.call([sys.executable, "-m", "pytest",
                          str(ROOT / "tests" / "test_acceptance.py"), "-q", "-s"])
    if rc != 0:
        return rc
    return subprocess.call([sys.executable, "-m", "entriv.cli", "batch",
                            "--manifest", str(ROOT / "manifests" / "acceptance.json"),
                            "--out", str(ROOT / "acceptance_report.json")],
                           cwd=ROOT)


if __name__ == "__main__":
    sys.exit(main())
