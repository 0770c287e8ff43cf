from __future__ import annotations

import csv
import json
import io

import pytest

from signedshift.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPattern:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "pattern", "--sigma", "+--", "--word", "(00110221)", "--n", "8")
        assert code == 0
        assert out.strip() == "12453786"

    def test_undefined(self, capsys):
        code, out, _ = run(capsys, "pattern", "--sigma", "++", "--word", "(0)", "--n", "3")
        assert code == 0
        assert out.strip() == "undefined(0,1)"

    def test_bad_word_exits_two(self, capsys):
        code, _, err = run(capsys, "pattern", "--sigma", "++", "--word", "012", "--n", "2")
        assert code == 2
        assert "error" in err


class TestDecide:
    def test_dagger_failure_message(self, capsys):
        code, out, _ = run(capsys, "decide", "--sigma", "+-", "--perm", "591482637")
        assert code == 0
        assert out.strip() == "not allowed: dagger fails (b=2)"

    def test_no_segmentation_message(self, capsys):
        code, out, _ = run(capsys, "decide", "--sigma", "--", "--perm", "3425617")
        assert code == 0
        assert out.strip() == "not allowed: no segmentation"

    def test_allowed_prints_certificate(self, capsys):
        code, out, _ = run(capsys, "decide", "--sigma", "+--", "--perm", "12453786")
        assert code == 0
        assert out.startswith("allowed: segmentation=(")
        assert "monotone=" in out and "witness=" in out

    def test_bad_signature_exits_two(self, capsys):
        code, _, err = run(capsys, "decide", "--sigma", "+*", "--perm", "12")
        assert code == 2


class TestEnumerate:
    def test_text_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--sigma", "++", "--n", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert "count 6" in lines
        assert len(lines) == 3 + 6

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--sigma", "+-", "--n", "3",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["signature"] == "+-"
        assert payload["n"] == 3
        assert payload["count"] == 5
        assert payload["patterns"] == sorted(payload["patterns"])
        assert len(payload["patterns"]) == 5
        assert set(payload["bounds"]) == {"lower", "upper", "exact", "ok"}

    def test_csv_columns(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--sigma", "+-", "--n", "4",
                           "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["signature", "n", "count", "lower_bound", "upper_bound", "bound_ok"]
        assert rows[1] == ["+-", "4", "12", "11", "15", "True"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "patterns.json"
        code, out, _ = run(capsys, "enumerate", "--sigma", "++", "--n", "2",
                           "--format", "json", "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["count"] == 2


class TestOracle:
    def test_default_bounds(self, capsys):
        code, out, _ = run(capsys, "oracle", "--sigma", "+-", "--n", "3")
        assert code == 0
        assert "count 5" in out

    def test_explicit_bounds(self, capsys):
        code, out, _ = run(capsys, "oracle", "--sigma", "+-", "--n", "3",
                           "--pre", "5", "--per", "5")
        assert code == 0
        assert "count 5" in out
        assert "321" not in out.splitlines()[3:]


class TestCrosscheck:
    def test_agreement(self, capsys):
        code, out, _ = run(capsys, "crosscheck", "--sigma", "--", "--n", "4")
        assert code == 0
        assert "agree" in out

    def test_parallel_agreement(self, capsys):
        code, out, _ = run(capsys, "--jobs", "2", "crosscheck", "--sigma", "++", "--n", "4")
        assert code == 0
        assert "agree" in out


class TestBounds:
    def test_report(self, capsys):
        code, out, _ = run(capsys, "bounds", "--sigma", "+-", "--n", "4")
        assert code == 0
        assert "count 12" in out
        assert "lower 11 ok" in out
        assert "upper 15 ok" in out


class TestTable:
    def test_csv_sweep(self, capsys):
        code, out, _ = run(capsys, "table", "--k", "2", "--nmax", "4")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["signature", "n", "count", "lower_bound", "upper_bound", "bound_ok"]
        assert len(rows) == 1 + 4 * 3
        assert all(row[-1] == "True" for row in rows[1:])

    def test_deterministic_across_jobs(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(capsys, "table", "--k", "2", "--nmax", "4", "--out", str(a))[0] == 0
        assert run(capsys, "--jobs", "2", "table", "--k", "2", "--nmax", "4",
                   "--out", str(b))[0] == 0
        assert a.read_text() == b.read_text()


class TestReports:
    def test_scan(self, capsys):
        code, out, _ = run(capsys, "scan", "--k", "2", "--nmax", "3")
        assert code == 0
        assert out.splitlines()[0] == "n ++ +- -+ -- chain_ok"
        assert "3 6 5 5 6 True" in out

    def test_recurrence(self, capsys):
        code, out, _ = run(capsys, "recurrence", "--k", "3", "--n", "3")
        assert code == 0
        assert "interval_count 18" in out
        assert "series degree" in out

    def test_tent_stats(self, capsys):
        code, out, _ = run(capsys, "tent-stats", "--n", "4")
        assert code == 0
        assert "intervals 22 expected 22" in out
        assert "identity_ok True" in out


class TestArgumentErrors:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["pattern", "--nope"])
        assert exc.value.code == 2
