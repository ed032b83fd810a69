"""Tests for the command-line interface."""

import json

import pytest

from denumerant.cli import main


@pytest.fixture(autouse=True)
def _project(tmp_path, monkeypatch):
    """Run every command in an empty project directory."""
    monkeypatch.chdir(tmp_path)


def _run(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    return exc.value.code


class TestCount:

    def test_csv(self, capsys):
        assert _run(["--csv", "count", "--set", "1,2,3", "--upto", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,value"
        assert lines[1:] == ["0,1", "1,1", "2,2", "3,3", "4,4", "5,5"]

    def test_from(self, capsys):
        assert _run(["--json", "count", "--set", "{1, 2, 3, 4}", "--from", "8", "--upto", "8"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["rows"] == [{"n": 8, "value": "15"}]

    def test_empty_set_is_usage_error(self, capsys):
        assert _run(["count", "--set", "{}", "--upto", "5"]) == 64

    def test_bad_range(self, capsys):
        assert _run(["count", "--set", "1,2", "--from", "6", "--upto", "5"]) == 1


class TestCommands:

    def test_decompose_needs_both(self, capsys):
        assert _run(["decompose", "--set", "1,2,3", "--modulus", "6"]) == 64

    def test_decompose_piece(self, capsys):
        assert _run(["--csv", "decompose", "--set", "1,2,3", "--modulus", "6", "--residue", "0"]) == 0
        out = capsys.readouterr().out
        assert "1/1 3/1 3/1" in out

    def test_pell(self, capsys):
        assert _run(["--json", "pell", "--d", "2", "--take", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["solutions"] == [["3", "2"], ["17", "12"]]

    def test_pell_square_d(self, capsys):
        assert _run(["pell", "--d", "9"]) == 1
        assert "error" in capsys.readouterr().err

    def test_solve(self, capsys):
        assert _run(["--csv", "solve", "--a", "1,2,3", "--b", "1,2,3,4", "--xmax", "50", "--ymax", "30"]) == 0
        assert "49,27,225" in capsys.readouterr().out.splitlines()

    def test_hunt_squares(self, capsys):
        assert _run(["--csv", "hunt-squares", "--parts", "1,2,3,4,5", "--xmax", "3000"]) == 0
        assert capsys.readouterr().out.splitlines() == ["x,y", "1,1", "2027,77129"]

    def test_unknown_family(self, capsys):
        assert _run(["families", "--name", "no_such_family"]) == 64

    def test_unknown_topic(self, capsys):
        assert _run(["verify", "--select", "s9"]) == 64

    def test_verify_topic(self, capsys):
        assert _run(["--json", "verify", "--select", "s2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["selection"] == ["sertoz"]


class TestGlobalFlags:

    def test_no_command_prints_help(self, capsys):
        main([])
        assert "usage" in capsys.readouterr().out

    def test_version(self, capsys):
        assert _run(["--version"]) == 0
        assert capsys.readouterr().out.startswith("denumerant ")

    def test_bad_workers(self, capsys):
        assert _run(["--workers", "0", "count", "--set", "1", "--upto", "1"]) == 64
