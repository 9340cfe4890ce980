#!/usr/bin/env python3
"""Regenerate manifests/acceptance.json, the CLI-level acceptance driver."""

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[1]


def main():
    cmds = []
    for p in (2, 3, 5, 7):
        for n in range(1, 9):
            for which in ("first", "second"):
                cmds.append(["ses", "--prime", p, "--n", n, "--which", which])
            cmds.append(["pushout", "--prime", p, "--n", n])
    for p in (2, 3, 5):
        cmds.append(["moore", "--prime", p])
        cmds.append(["transfer", "--prime", p, "--window=-2:40"])
        for n in range(2, 13):
            cmds.append(["ku-ses", "--prime", p, "--n", n])
            cmds.append(["witness", "--prime", p, "--n", n])
        for n in range(1, 11):
            cmds.append(["theta", "--n", n, "--prime", p])
    for p in (3, 5):
        cmds.append(["extpow", "--prime", p, "--n", 2, "--family", "einf",
                     "--window=-10:10"])
    cmds.append(["extpow", "--prime", 2, "--n", 3, "--family", "en+1"])
    for n in (1, 2, 3):
        cmds.append(["steenrod", "witness", "--n", n])
        cmds.append(["steenrod", "sq", "--sphere", n, "--k", 0])
    cmds.append(["stunted", "sq", "--range=-1:0", "--k", 1])
    cmds.append(["stunted", "sq", "--range", "2:5", "--k", 2])
    cmds.append(["stunted", "homology", "--range=-1:0"])
    cmds.append(["compose", "--input", "manifests/inputs/pair_a.json",
                 "manifests/inputs/pair_b.json", "--truncate", "4"])
    cmds.append(["suspend", "--input", "manifests/inputs/pair_a.json", "--k", 1])
    for ring in ("Z", "Q", "F2", "F3"):
        cmds.append(["hh", "--ring", ring, "--n", 2, "--smax", 4])
    cmds.append(["hh", "--ring", "Z", "--n", 2, "--smax", 6,
                 "--golden", "tests/golden/hh_Z_n2_s6.json"])
    for m in (1, 2, 3):
        cmds.append(["euler", "--m", m, "--t", m + 1, "--samples", 200, "--seed", 42])
    cmds.append(["formality", "--input", "manifests/inputs/complex_rp2.json"])

    manifest = [{"argv": [str(a) for a in argv]} for argv in cmds]
    target = ROOT / "manifests" / "acceptance.json"
    target.write_text(json.dumps(manifest, indent=1) + "\n")
    print(f"wrote {target} ({len(manifest)} commands)")


if __name__ == "__main__":
    main()
