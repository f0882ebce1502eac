import csv
import json
from importlib import resources

import jsonschema
import pytest

from logmaj.cli import main

SCHEMA = json.loads(resources.files("logmaj").joinpath("report_schema.json").read_text())


def run(argv):
    return main(argv)


class TestRegistryDump:
    def test_dump(self, tmp_path):
        out = tmp_path / "catalog.json"
        assert run(["registry-dump", "--out", str(out)]) == 0
        dump = json.loads(out.read_text())
        assert {"ZOU-1", "CONJ-1.1", "THM-4.2"} <= {e["id"] for e in dump["entries"]}


class TestVerify:
    def test_report_validates_and_exit_zero(self, tmp_path):
        out = tmp_path / "r.json"
        rc = run(
            ["verify", "--ids", "ZOU-1,LEM-4.1,EX-2.1", "--trials", "6",
             "--dims", "2,3", "--seed", "5", "--out", str(out)]
        )
        assert rc == 0
        report = json.loads(out.read_text())
        jsonschema.validate(report, SCHEMA)
        assert report["summary"]["all_ok"] is True
        assert len(report["outcomes"]) == 3 * 2 * 6

    def test_csv_summary_row_count(self, tmp_path):
        out = tmp_path / "s.csv"
        ids = "ZOU-1,LEM-4.1,PROP-4.1"
        rc = run(["verify", "--ids", ids, "--trials", "4", "--dims", "2",
                  "--format", "csv-summary", "--out", str(out)])
        assert rc == 0
        rows = list(csv.reader(out.read_text().splitlines()))
        assert rows[0] == ["id", "trials", "failures", "worst_margin", "status"]
        assert len(rows) == 1 + 3

    def test_invalid_tolerance_exits_2(self):
        assert run(["verify", "--ids", "ZOU-1", "--tol", "-1"]) == 2

    def test_unknown_id_exits_2(self):
        assert run(["verify", "--ids", "NOPE", "--trials", "2"]) == 2

    def test_bad_dims_exit_2(self):
        assert run(["verify", "--ids", "ZOU-1", "--dims", "1"]) == 2
        assert run(["verify", "--ids", "ZOU-1", "--dims", "12"]) == 2

    def test_usage_error_exits_2(self):
        assert run(["verify", "--definitely-not-a-flag"]) == 2

    def test_replay_roundtrip(self, tmp_path):
        out = tmp_path / "r.json"
        assert run(["verify", "--ids", "THM-3.1", "--trials", "5", "--dims", "2,3",
                    "--seed", "3", "--out", str(out)]) == 0
        assert run(["verify", "--replay", str(out)]) == 0

    def test_replay_detects_tampering(self, tmp_path):
        out = tmp_path / "r.json"
        assert run(["verify", "--ids", "THM-3.1", "--trials", "3", "--dims", "2",
                    "--seed", "3", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        report["outcomes"][0]["min_margin"] += 0.5
        out.write_text(json.dumps(report))
        assert run(["verify", "--replay", str(out)]) == 1


class TestSearchCommand:
    def test_refutation_found_exit_zero(self, tmp_path):
        out = tmp_path / "s.json"
        rc = run(["search", "--ids", "EX-2.1", "--budget", "30", "--hill-steps", "3",
                  "--seed", "5", "--out", str(out)])
        assert rc == 0
        report = json.loads(out.read_text())
        jsonschema.validate(report, SCHEMA)
        assert report["searches"][0]["violation_found"] is True

    def test_open_conjecture_quiet_exit_zero(self, tmp_path):
        out = tmp_path / "s.json"
        rc = run(["search", "--ids", "CONJ-4.1", "--budget", "20", "--hill-steps", "2",
                  "--seed", "5", "--out", str(out)])
        assert rc == 0
        report = json.loads(out.read_text())
        assert report["searches"][0]["violation_found"] is False

    def test_search_on_theorem_exits_2(self):
        assert run(["search", "--ids", "ZOU-1", "--budget", "5"]) == 2


class TestReproduce:
    def test_ex21(self, tmp_path, capsys):
        out = tmp_path / "rep.json"
        rc = run(["reproduce", "EX-2.1", "--budget", "40", "--hill-steps", "3",
                  "--seed", "7", "--out", str(out)])
        assert rc == 0
        text = capsys.readouterr().out
        assert "violating instance of EX-2.1" in text
        assert "per-k margins" in text
        report = json.loads(out.read_text())
        jsonschema.validate(report, SCHEMA)


class TestByteStability:
    def test_reports_identical_across_thread_counts(self, tmp_path, monkeypatch):
        outs = []
        for threads in ("1", "3"):
            monkeypatch.setenv("LOGMAJ_THREADS", threads)
            out = tmp_path / f"r{threads}.json"
            assert run(["verify", "--ids", "ZOU-1,THM-4.1", "--trials", "6",
                        "--dims", "2,3", "--seed", "11", "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
