"""Command-line entry point.

Every verb produces a Report rendered as canonical JSON (sorted keys, no
whitespace, one trailing newline), so identical commands with identical
seeds are byte-identical.  Exit codes: 0 the verified claim holds, 1 a
verification failed, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import euler_section, extended_powers, hochschild, steenrod_cochains, stunted_ktheory, sym_seq
from .core_algebra import ChainComplex, formality_splitting, homology


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Command:
    verb: str
    params: dict
    fmt: str
    out: str | None


@dataclass(frozen=True)
class Report:
    verb: str
    parameters: dict
    passed: bool
    claim: str
    payload: dict

    def to_json(self) -> dict:
        return {"verb": self.verb, "parameters": self.parameters,
                "pass": self.passed, "claim": self.claim, "payload": self.payload}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
        lines = [f"# {self.verb}", "",
                 f"* parameters: `{json.dumps(self.parameters, sort_keys=True)}`",
                 f"* claim: {self.claim}",
                 f"* pass: {'yes' if self.passed else 'NO'}", ""]
        lines.append("```json")
        lines.append(json.dumps(self.payload, sort_keys=True, indent=1))
        lines.append("```")
        return "\n".join(lines) + "\n"


def _window(text: str) -> tuple:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad window {text!r}, expected LO:HI") from exc
    if lo > hi:
        raise UsageError("window bounds inverted")
    return (lo, hi)


def _cell_range(text: str) -> tuple:
    win = _window(text)
    return win


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="entriv", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("extpow", help="list one extended-power homology basis")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=extended_powers.FAMILIES, required=True)
    p.add_argument("--window", type=_window, default=None)
    common(p)

    p = sub.add_parser("ses", help="verify one of the two extended-power sequences")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("first", "second"), required=True)
    p.add_argument("--window", type=_window, default=None)
    common(p)

    p = sub.add_parser("pushout", help="kernel comparison for the square of families")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=_window, default=None)
    common(p)

    p = sub.add_parser("moore", help="two-cell family vs the mod-p Moore spectrum")
    p.add_argument("--prime", type=int, required=True)
    common(p)

    p = sub.add_parser("transfer", help="one-class difference of the widest families")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--window", type=_window, default=(-2, 40))
    common(p)

    p = sub.add_parser("ku-ses", help="certify the K-theory short exact sequence")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("theta", help="eigenvalue of theta on a Bott power")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    common(p)

    p = sub.add_parser("witness", help="smash-nilpotence detection report")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("stunted", help="stunted projective computations")
    p.add_argument("mode", choices=("sq", "homology"))
    p.add_argument("--range", dest="cells", type=_cell_range, required=True)
    p.add_argument("--k", type=int, default=1)
    common(p)

    p = sub.add_parser("steenrod", help="Steenrod squares on sphere models")
    p.add_argument("mode", choices=("sq", "witness"))
    p.add_argument("--sphere", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, default=None)
    common(p)

    p = sub.add_parser("compose", help="composition product of two sequence files")
    p.add_argument("--input", nargs=2, required=True)
    p.add_argument("--truncate", type=int, required=True)
    common(p)

    p = sub.add_parser("suspend", help="operadic suspension of a sequence file")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("hh", help="Hochschild homology of R[x]/x^2")
    p.add_argument("--ring", choices=("Z", "Q", "F2", "F3"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("--golden", default=None)
    common(p)

    p = sub.add_parser("euler", help="section nonvanishing: sampled sweep or one configuration")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--float", dest="float_mode", action="store_true")
    p.add_argument("--config", default=None,
                   help="JSON file: array of point arrays (numbers or 'a/b' strings)")
    common(p)

    p = sub.add_parser("formality", help="minimal model of a chain complex file")
    p.add_argument("--input", required=True)
    common(p)

    p = sub.add_parser("batch", help="run a JSON manifest of commands")
    p.add_argument("--manifest", required=True)
    p.add_argument("--seed", type=int, default=None)
    common(p)

    return parser


def parse(argv) -> Command:
    argv = list(argv)
    if argv[:1] == ["extpow"] and len(argv) > 1 and argv[1] in ("ses", "pushout"):
        argv = argv[1:]
    ns = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(ns).items() if k not in ("verb", "format", "out")}
    _validate(ns.verb, params)
    return Command(ns.verb, params, ns.format, ns.out)


def _validate(verb: str, params: dict):
    prime = params.get("prime")
    if prime is not None:
        if prime < 2 or any(prime % q == 0 for q in range(2, prime)):
            raise UsageError(f"--prime {prime} is not a prime")
    if verb == "ku-ses" and params["n"] < 2:
        raise UsageError("ku-ses requires --n >= 2")
    if verb in ("ses", "pushout") and params["n"] < 1:
        raise UsageError(f"{verb} requires --n >= 1")
    if verb == "extpow" and params["n"] < 0:
        raise UsageError("extpow requires --n >= 0")
    if verb == "witness" and params["n"] < 1:
        raise UsageError("witness requires --n >= 1")
    if verb == "theta" and params["n"] < 1:
        raise UsageError("theta requires --n >= 1")
    if verb == "hh" and (params["n"] < 1 or params["smax"] < 0):
        raise UsageError("hh requires --n >= 1 and --smax >= 0")
    if verb == "euler":
        if params.get("config") is None:
            if params.get("m") is None or params.get("t") is None:
                raise UsageError("euler requires --m and --t (or --config FILE)")
            if params["m"] < 1 or params["t"] < 2 or params["samples"] < 1:
                raise UsageError("euler requires --m >= 1, --t >= 2, --samples >= 1")
    if verb == "steenrod":
        if params["mode"] == "sq" and (params.get("sphere") is None or params["sphere"] < 1):
            raise UsageError("steenrod sq requires --sphere >= 1")
        if params["mode"] == "witness" and (params.get("n") is None or params["n"] < 1):
            raise UsageError("steenrod witness requires --n >= 1")


# ---------------------------------------------------------------------------
# verb handlers


def _run_extpow(p):
    if p["prime"] == 2:
        model = extended_powers.p2_stunted_model(p["n"], p["family"])
        window = p["window"] or (model.bottom, model.bottom + 12)
        payload = {"model": model.label(),
                   "cells": model.cells(window),
                   "class_degrees": extended_powers.p2_class_degrees(
                       p["n"], p["family"], window)}
        ok = extended_powers.p2_cell_class_agreement(p["n"], p["family"], window)
        claim = "stunted cell model agrees with the degree-class encoding"
    else:
        window = p["window"] or extended_powers.default_window(p["prime"], p["n"])
        basis = extended_powers.dl_basis(p["prime"], p["n"], p["family"], window)
        payload = basis.to_json()
        ok = extended_powers.bockstein_pairing_consistent(p["prime"], p["n"], p["family"])
        claim = "the Bockstein partner accompanies every strictly admissible class"
    return ok, payload, claim


def _run_ses(p):
    report = extended_powers.verify_ses(p["prime"], p["n"], p["which"], p["window"])
    return report.passed, report.to_json(), \
        "degreewise exactness of the extended-power sequence"


def _run_pushout(p):
    report = extended_powers.pushout_rank_check(p["prime"], p["n"], p["window"])
    return report.passed, report.to_json(), \
        "the two vertical maps of the family square have equal kernels"


def _run_moore(p):
    report = extended_powers.moore_identification(p["prime"])
    return report.passed, report.to_json(), \
        "the two-cell family is the shifted mod-p Moore spectrum with top-cell projection"


def _run_transfer(p):
    report = extended_powers.transfer_cofiber_check(p["prime"], p["window"])
    return report.passed, report.to_json(), \
        "the widest families differ by exactly one class in degree -1"


def _run_ku_ses(p):
    triple, cert = stunted_ktheory.ku_ses(p["prime"], p["n"])
    payload = {"left": triple.left, "middle": triple.middle, "right": triple.right,
               "k": triple.k, "map_in": list(triple.map_in),
               "certificate": cert.to_json()}
    return cert.passed, payload, \
        "Smith-form certificate of the K-theory short exact sequence"


def _run_theta(p):
    value = stunted_ktheory.adams_theta(p["n"], p["prime"])
    ok = value * p["prime"] == p["prime"] ** p["n"]
    return ok, {"value": value}, "theta eigenvalue times p recovers the psi eigenvalue"


def _run_witness(p):
    w = stunted_ktheory.nilpotence_witness(p["prime"], p["n"])
    consistent = (p["n"] >= 2 and w.detected == (stunted_ktheory.torsion_exponent(p["n"]) >= 1)) \
        or (p["n"] == 1 and not w.detected)
    return consistent, w.to_json(), \
        "detection flag agrees with the torsion exponent case split"


def _run_stunted(p):
    a, b = p["cells"]
    if p["mode"] == "sq":
        mat = stunted_ktheory.stunted_sq(a, b, p["k"])
        sq1 = stunted_ktheory.stunted_sq(a, b, 1)
        ok = sq1.mul(sq1).is_zero()
        return ok, {"k": p["k"], "matrix": mat.to_lists()}, \
            "squares computed by the mod-2 binomial rule (Sq^1 Sq^1 = 0 spot check)"
    h = stunted_ktheory.stunted_integral_homology(a, b)
    mod2 = homology(stunted_ktheory.StuntedCellComplex(a, b).chain_complex(), "F2")
    ok = all(mod2.component(d) == (1, ()) for d in range(a, b + 1))
    return ok, {"integral": h.to_json(), "mod2": mod2.to_json()}, \
        "integral homology of the alternating cell complex; mod-2 sees every cell"


def _run_steenrod(p):
    if p["mode"] == "sq":
        n, k = p["sphere"], p["k"]
        model = steenrod_cochains.sphere_model(n)
        gen = steenrod_cochains.Cochain.create(n, ["t"])
        cls = steenrod_cochains.sq(model, k, gen)
        target_dim = steenrod_cochains.h_dim(model, n + k)
        ok = (not cls.is_zero()) if k == 0 else len(cls.representative) <= target_dim
        return ok, {"sphere": n, "k": k, "class": list(cls.representative),
                    "target_dimension": target_dim}, \
            "the square lands in the correct (possibly zero) cohomology group"
    report = steenrod_cochains.triviality_witness(p["n"])
    return report.not_trivial, report.to_json(), \
        "cochain-level Sq^0 is the identity while the square-zero value is forced to vanish"


def _run_compose(p):
    with open(p["input"][0]) as fh:
        a = sym_seq.SymSeq.from_json(json.load(fh))
    with open(p["input"][1]) as fh:
        b = sym_seq.SymSeq.from_json(json.load(fh))
    result = sym_seq.compose(a, b, p["truncate"])
    raw = {n: sym_seq.compose_dimensions_raw(a, b, n) for n in range(1, p["truncate"] + 1)}
    ok = all({d: m.dim for d, m in dict_components(result, n).items()} == raw[n]
             for n in range(1, p["truncate"] + 1))
    payload = {"result": result.to_json(),
               "raw_dimension_check": {str(n): {str(d): v for d, v in raw[n].items()}
                                       for n in raw}}
    return ok, payload, "orbit-induced dimensions equal the raw partition sum"


def dict_components(seq: sym_seq.SymSeq, arity: int) -> dict:
    return {d: seq.module(arity, d) for d in seq.degrees(arity)}


def _run_suspend(p):
    with open(p["input"]) as fh:
        a = sym_seq.SymSeq.from_json(json.load(fh))
    result = sym_seq.suspend(a, p["k"])
    ok = sym_seq.suspend(result, -p["k"]) == a
    return ok, {"result": result.to_json()}, "suspension followed by desuspension is the identity"


def _run_hh(p):
    bar = hochschild.bar_hochschild(
        hochschild.GradedUnitalAlgebra.square_zero(p["ring"], p["n"]), p["smax"])
    small = hochschild.small_resolution_hh(p["ring"], p["n"], p["smax"])
    ok = bar == small
    payload = {"table": small.to_json(), "bar_equals_small_resolution": ok}
    if p.get("golden"):
        with open(p["golden"]) as fh:
            golden = hochschild.BigradedGroup.from_json(json.load(fh))
        matches = golden == small
        payload["matches_golden"] = matches
        ok = ok and matches
    return ok, payload, "bar complex and periodic resolution agree on every bidegree"


def _run_euler(p):
    if p.get("config"):
        from fractions import Fraction
        from itertools import permutations

        with open(p["config"]) as fh:
            rows = json.load(fh)
        cfg = euler_section.Configuration.from_rational(
            [[Fraction(x) if isinstance(x, str) else Fraction(int(x)) for x in pt]
             for pt in rows])
        value = euler_section.section_eval(cfg)
        if cfg.size <= 5:
            sigmas = list(permutations(range(cfg.size)))
        else:
            from entriv.rng import CounterRng
            rng = CounterRng(p["seed"])
            sigmas = [rng.permutation(cfg.size) for _ in range(24)]
        equivariant = all(euler_section.equivariance_test(cfg, s).equal for s in sigmas)
        payload = {"points": [[str(x) for x in pt] for pt in cfg.points],
                   "section": [[str(x) for x in comp] for comp in value.components],
                   "nonzero": not value.is_zero(),
                   "equivariance_checked": len(sigmas),
                   "equivariant": equivariant}
        return (not value.is_zero()) and equivariant, payload, \
            "the mean-centered coordinate section is nonzero and relabelling-equivariant"
    cert = euler_section.nullhomotopy_certificate(
        p["m"], p["t"], p["samples"], p["seed"], exact=not p["float_mode"])
    return cert.passed, cert.to_json(), \
        "the mean-centered coordinate section never vanishes on sampled configurations"


def _run_formality(p):
    with open(p["input"]) as fh:
        cx = ChainComplex.from_json(json.load(fh))
    minimal, certified = formality_splitting(cx)
    return certified, {"minimal": minimal.to_json(),
                       "homology": homology(cx, "Z").to_json(),
                       "certified": certified}, \
        "the split minimal model has the homology of the input"


_HANDLERS = {
    "extpow": _run_extpow, "ses": _run_ses, "pushout": _run_pushout,
    "moore": _run_moore, "transfer": _run_transfer, "ku-ses": _run_ku_ses,
    "theta": _run_theta, "witness": _run_witness, "stunted": _run_stunted,
    "steenrod": _run_steenrod, "compose": _run_compose, "suspend": _run_suspend,
    "hh": _run_hh, "euler": _run_euler, "formality": _run_formality,
}


def _json_safe(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def run(cmd: Command) -> Report:
    if cmd.verb == "batch":
        return run_batch(cmd)
    try:
        passed, payload, claim = _HANDLERS[cmd.verb](cmd.params)
    except (ValueError, OSError) as exc:
        return Report(cmd.verb, {k: _json_safe(v) for k, v in cmd.params.items()},
                      False, "structured failure", {"error": str(exc)})
    return Report(cmd.verb, {k: _json_safe(v) for k, v in cmd.params.items()},
                  passed, claim, payload)


def run_batch(cmd: Command) -> Report:
    try:
        with open(cmd.params["manifest"]) as fh:
            manifest = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read manifest: {exc}") from exc
    if not isinstance(manifest, list):
        raise UsageError("manifest must be a JSON list of commands")
    reports = []
    failures = []
    for idx, entry in enumerate(manifest):
        argv = entry["argv"] if isinstance(entry, dict) else entry
        if not isinstance(argv, list):
            raise UsageError(f"manifest entry {idx} has no argv list")
        argv = [str(a) for a in argv]
        if cmd.params.get("seed") is not None and "--seed" not in argv \
                and argv[:1] == ["euler"]:
            argv += ["--seed", str(cmd.params["seed"])]
        sub = parse(argv)
        rpt = run(sub)
        reports.append(rpt.to_json())
        if not rpt.passed:
            failures.append(idx)
    payload = {"commands": len(manifest), "failed_indices": failures,
               "reports": reports}
    return Report("batch", {"manifest": cmd.params["manifest"]},
                  not failures, "every manifest command passed", payload)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cmd = parse(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        report = run(cmd)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    text = report.render(cmd.fmt)
    if cmd.out:
        with open(cmd.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
