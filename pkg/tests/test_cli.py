import io
import json

import pytest

from app.cli import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCompute:
    @pytest.mark.parametrize("argv, expected", [
        (["--family", "path:4"], "5"),
        (["--graph6", "Bw"], "3"),
        (["--family", "edgeless:5"], "0"),
        (["--family", "path:4", "--k", "0"], "8"),
        (["--family", "complete:4", "--k", "6"], "1"),
        (["--family", "path:3", "--k", "5"], "0"),
    ])
    def test_single_value(self, capsys, argv, expected):
        code, out, _ = run(capsys, "compute", *argv)
        assert code == EXIT_OK
        assert out.strip() == expected

    def test_json(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "broom:7:3", "--format", "json")
        assert code == EXIT_OK
        [result] = json.loads(out)
        assert result["source"] == "broom:7:3"
        assert (result["n"], result["m"], result["k"]) == (7, 6, 1)

    def test_file(self, capsys, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("A_\nBw\n\n", encoding="ascii")
        code, out, _ = run(capsys, "compute", "--file", str(path), "--format", "tsv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == ["graph6", "n", "m", "k", "sigma"]
        assert [line.split("\t")[-1] for line in lines[1:]] == ["1", "3"]

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(">>graph6<<Bw\nA_\n"))
        code, out, _ = run(capsys, "compute", "--format", "tsv")
        assert code == EXIT_OK
        assert [line.split("\t")[-1] for line in out.strip().splitlines()[1:]] == ["3", "1"]

    def test_empty_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("\n"))
        code, _, err = run(capsys, "compute")
        assert code == EXIT_USAGE
        assert "No graphs" in err

    @pytest.mark.parametrize("argv", [
        ["--family", "hypercube:3"],
        ["--family", "cycle:2"],
        ["--graph6", "!!"],
        ["--graph6", "Bw", "--family", "path:3"],
        ["--family", "path:3", "--jobs", "0"],
        ["--file", "/nonexistent/graphs.g6"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, "compute", *argv)
        assert code == EXIT_USAGE
        assert out == ""
        assert err


class TestVerify:
    def test_max_bound_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "max-bound", "--n", "6", "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["passed"] is True
        assert all(check["status"] == "pass" for check in report["checks"])

    def test_max_bound_below_range(self, capsys):
        code, _, err = run(capsys, "verify", "max-bound", "--n", "5")
        assert code == EXIT_USAGE
        assert "MAX_BOUND_MIN_N" in err

    @pytest.mark.parametrize("argv", [
        ["max-bound", "--max-n", "5"],
        ["min-bound", "--max-n", "0"],
        ["h-family", "--max-n", "0"],
    ])
    def test_empty_order_range(self, capsys, argv):
        code, out, err = run(capsys, "verify", *argv)
        assert code == EXIT_USAGE
        assert out == ""
        assert "below the minimum" in err

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "verify", "h-family", "--max-n", "4")
        assert code == EXIT_OK
        assert out.startswith("h-family: PASS")

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "everything")
        assert code == EXIT_USAGE


class TestTable:
    def test_tsv(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "4", "--format", "tsv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 12
        assert lines[-1].endswith("\t6")

    def test_json_order_one(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "1", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert (data["count"], data["max"]) == (1, 0)

    def test_connected_filter(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "4", "--filter", "connected", "--format", "json")
        assert code == EXIT_OK
        assert [row["sigma1"] for row in json.loads(out)["rows"]] == [3, 4, 5, 5, 5, 6]

    @pytest.mark.parametrize("argv", [["--n", "9"], ["--n", "4", "--filter", "bogus"], []])
    def test_rejected(self, capsys, argv):
        code, _, _ = run(capsys, "table", *argv)
        assert code == EXIT_USAGE


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == EXIT_OK
    assert out.startswith("sigmak ")


def test_log_level_is_case_insensitive(capsys):
    code, out, _ = run(capsys, "--log-level", "debug", "compute", "--family", "path:4")
    assert code == EXIT_OK
    assert out.strip() == "5"


def test_unknown_log_level(capsys):
    code, out, err = run(capsys, "--log-level", "bogus", "compute", "--family", "path:4")
    assert code == EXIT_USAGE
    assert out == ""
    assert "--log-level" in err
