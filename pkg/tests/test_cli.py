import json
import pathlib

import pytest

from entriv.cli import Command, UsageError, main, parse, run

ROOT = pathlib.Path(__file__).resolve().parents[1]


class TestParse:
    def test_extpow_ses_alias(self):
        cmd = parse(["extpow", "ses", "--prime", "3", "--n", "2", "--which", "first"])
        assert cmd.verb == "ses"
        assert cmd.params["prime"] == 3 and cmd.params["n"] == 2
        assert cmd.params["which"] == "first"

    def test_ku_ses_precondition_surfaced(self):
        with pytest.raises(UsageError):
            parse(["ku-ses", "--prime", "2", "--n", "1"])

    def test_euler_seed(self):
        cmd = parse(["euler", "--m", "2", "--t", "3", "--samples", "10000",
                     "--seed", "42"])
        assert cmd.params["seed"] == 42

    def test_unknown_verb(self):
        with pytest.raises(UsageError):
            parse(["frobnicate"])

    def test_bad_window(self):
        with pytest.raises(UsageError):
            parse(["ses", "--prime", "3", "--n", "2", "--which", "first",
                   "--window=4:-4"])

    def test_non_prime_rejected(self):
        with pytest.raises(UsageError):
            parse(["theta", "--n", "2", "--prime", "6"])


class TestRun:
    def test_ses_report(self):
        report = run(parse(["ses", "--prime", "3", "--n", "2", "--which", "first"]))
        assert report.passed
        assert report.payload["degrees"]["-4"] == {"A": 1, "B": 1, "C": 0}

    def test_witness_report(self):
        report = run(parse(["witness", "--prime", "2", "--n", "3"]))
        assert report.passed
        assert report.payload["not_smash_nilpotent"] is True
        assert "k=1" in report.payload["reason"]

    def test_hh_report(self):
        report = run(parse(["hh", "--ring", "Q", "--n", "3", "--smax", "6"]))
        assert report.passed
        assert report.payload["bar_equals_small_resolution"] is True

    def test_compose_files(self):
        report = run(parse(["compose", "--input",
                            str(ROOT / "manifests/inputs/pair_a.json"),
                            str(ROOT / "manifests/inputs/pair_b.json"),
                            "--truncate", "4"]))
        assert report.passed

    def test_formality_file(self):
        report = run(parse(["formality", "--input",
                            str(ROOT / "manifests/inputs/complex_rp2.json")]))
        assert report.passed and report.payload["certified"]

    def test_module_error_becomes_structured_failure(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"ranks": {"0": 1, "1": 1}, "differentials":
                                   {"1": [[1, 1]]}}))
        report = run(parse(["formality", "--input", str(bad)]))
        assert not report.passed and "error" in report.payload

    def test_determinism_single_command(self):
        argv = ["euler", "--m", "2", "--t", "3", "--samples", "60", "--seed", "7"]
        a = run(parse(argv)).render("json")
        b = run(parse(argv)).render("json")
        assert a == b

    def test_markdown_rendering(self):
        report = run(parse(["theta", "--n", "2", "--prime", "2"]))
        text = report.render("md")
        assert text.startswith("# theta") and "pass: yes" in text


class TestMain:
    def test_exit_codes(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["theta", "--n", "3", "--prime", "2", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["pass"] is True
        assert main(["ku-ses", "--prime", "2", "--n", "0"]) == 2
        capsys.readouterr()

    def test_failing_command_exits_one(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"ranks": {"0": 1, "1": 1},
                                   "differentials": {"1": [[1, 1]]}}))
        assert main(["formality", "--input", str(bad), "--out",
                     str(tmp_path / "o.json")]) == 1


class TestBatch:
    def test_empty_manifest(self, tmp_path):
        manifest = tmp_path / "m.json"
        manifest.write_text("[]")
        report = run(Command("batch", {"manifest": str(manifest), "seed": None},
                             "json", None))
        assert report.passed and report.payload["commands"] == 0

    def test_failing_entry_fails_batch(self, tmp_path):
        golden = ROOT / "tests/golden/hh_Z_n2_s6.json"
        perturbed = json.loads(golden.read_text())
        perturbed["0,0"]["free"] = 5
        bad = tmp_path / "perturbed.json"
        bad.write_text(json.dumps(perturbed))
        manifest = tmp_path / "m.json"
        manifest.write_text(json.dumps([
            {"argv": ["hh", "--ring", "Z", "--n", "2", "--smax", "6",
                      "--golden", str(bad)]}]))
        assert main(["batch", "--manifest", str(manifest),
                     "--out", str(tmp_path / "o.json")]) == 1
        out = json.loads((tmp_path / "o.json").read_text())
        assert out["payload"]["failed_indices"] == [0]

    def test_seed_inheritance(self, tmp_path):
        manifest = tmp_path / "m.json"
        manifest.write_text(json.dumps([{"argv": ["euler", "--m", "1", "--t", "2",
                                                  "--samples", "20"]}]))
        a = run(parse(["batch", "--manifest", str(manifest), "--seed", "4"]))
        b = run(parse(["batch", "--manifest", str(manifest), "--seed", "4"]))
        c = run(parse(["batch", "--manifest", str(manifest), "--seed", "5"]))
        assert a.render("json") == b.render("json")
        assert a.payload["reports"][0]["parameters"]["seed"] == 4
        assert c.payload["reports"][0]["parameters"]["seed"] == 5
