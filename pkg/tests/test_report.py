"""Tests for result models and rendering."""

import json

import pytest

from denumerant.models.config import OutputFormat
from denumerant.models.report import CheckResult, CheckStatus, SuiteReport, render


def _result(key, status, informational=False):
    return CheckResult(
        key=key, topic="squares", description=key, status=status, informational=informational,
    )


class TestExitCode:
    """0 when everything passes, 1 on failure, 2 when only bounded results remain."""

    def test_all_pass(self):
        assert SuiteReport(results=[_result("a", CheckStatus.PASS)]).exit_code == 0

    def test_failure_wins(self):
        report = SuiteReport(results=[
            _result("a", CheckStatus.BOUNDED), _result("b", CheckStatus.FAIL),
        ])
        assert report.exit_code == 1

    def test_bounded(self):
        report = SuiteReport(results=[
            _result("a", CheckStatus.PASS), _result("b", CheckStatus.BOUNDED),
        ])
        assert report.exit_code == 2

    def test_informational_ignored(self):
        report = SuiteReport(results=[
            _result("a", CheckStatus.PASS), _result("b", CheckStatus.FAIL, informational=True),
        ])
        assert report.exit_code == 0

    def test_matrix(self):
        row = SuiteReport(results=[_result("a", CheckStatus.PASS)]).matrix()[0]
        assert row == {"topic": "squares", "check": "a", "status": "pass", "checked": 0, "errata": 0}


class TestRender:

    @pytest.fixture
    def report(self):
        return SuiteReport(selection=["squares"], results=[_result("a", CheckStatus.PASS)])

    def test_json(self, report):
        data = json.loads(render("Verification", report, OutputFormat.JSON))
        assert data["results"][0]["status"] == "pass"

    def test_text(self, report):
        text = render("Verification", report, OutputFormat.TEXT)
        assert text.startswith("### Verification")
        assert "status: pass" in text

    def test_csv(self, report):
        text = render("Verification", report, OutputFormat.CSV, rows=report.matrix())
        assert text.splitlines() == ["topic,check,status,checked,errata", "squares,a,pass,0,0"]

    def test_csv_without_rows_falls_back_to_json(self, report):
        assert json.loads(render("Verification", report, OutputFormat.CSV))["selection"] == ["squares"]

    def test_csv_joins_lists(self):
        text = render("Pieces", {}, OutputFormat.CSV, rows=[{"piece": ["1/1", "3/1"]}])
        assert text.splitlines()[1] == "1/1 3/1"
