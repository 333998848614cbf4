"""CLI: simulate, export, report subcommands."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from scicontest.cli import main

from scenario_builder import write_fixture_set

REPO = Path(__file__).resolve().parent.parent
DEMO_CONFIG = REPO / "fixtures" / "demo" / "contest.json"


@pytest.fixture(scope="module")
def fixture_paths(tmp_path_factory):
    return write_fixture_set(tmp_path_factory.mktemp("fixtures"))


def run_simulate(out_dir, fixture_paths, extra=()):
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "simulate",
            "--config", str(DEMO_CONFIG),
            "--fixture", str(fixture_paths["fixture"]),
            "--jury", str(fixture_paths["jury1"]),
            "--jury", str(fixture_paths["jury2"]),
            "--jury", str(fixture_paths["jury3"]),
            "--out", str(out_dir),
            *extra,
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0, result.output
    return result


class TestSimulateCommand:
    def test_writes_exports_figures_summary(self, tmp_path, fixture_paths):
        result = run_simulate(tmp_path / "run", fixture_paths)
        exports = {p.name for p in (tmp_path / "run" / "exports").iterdir()}
        assert exports == {
            "outbox.csv",
            "rankings_by_category.csv",
            "rankings_by_country.csv",
            "samples.csv",
            "winners.csv",
        }
        figures = {p.name for p in (tmp_path / "run" / "figures").iterdir()}
        assert figures == {
            "submissions_by_country.png",
            "submissions_by_category.png",
            "community_scores.png",
            "winner_aggregates.png",
        }
        summary = json.loads((tmp_path / "run" / "summary.json").read_text())
        assert summary["winners"] == 12
        assert "12" in result.output or '"winners": 12' in result.output

    def test_no_figures_flag(self, tmp_path, fixture_paths):
        run_simulate(tmp_path / "run", fixture_paths, extra=["--no-figures"])
        assert not (tmp_path / "run" / "figures").exists()

    def test_missing_fixture_fails(self, tmp_path):
        runner = CliRunner()
        result = runner.invoke(
            main,
            [
                "simulate",
                "--config", str(DEMO_CONFIG),
                "--fixture", str(tmp_path / "nope.json"),
                "--jury", str(DEMO_CONFIG),
                "--out", str(tmp_path / "run"),
            ],
        )
        assert result.exit_code != 0


class TestExportAndReportCommands:
    def test_export_from_store_requires_phase(self, tmp_path):
        # A fresh store is in SETUP; rankings are gated, samples are not.
        from scicontest.store import DocumentStore

        store_path = tmp_path / "contest.db"
        DocumentStore(store_path).close()
        runner = CliRunner()
        gated = runner.invoke(
            main,
            [
                "export", "--kind", "rankings",
                "--config", str(DEMO_CONFIG),
                "--store", str(store_path),
                "--out", str(tmp_path / "exports"),
            ],
        )
        assert gated.exit_code != 0
        assert "PHASE_TOO_EARLY" in gated.output
        ok = runner.invoke(
            main,
            [
                "export", "--kind", "samples",
                "--config", str(DEMO_CONFIG),
                "--store", str(store_path),
                "--out", str(tmp_path / "exports"),
            ],
        )
        assert ok.exit_code == 0, ok.output
        assert (tmp_path / "exports" / "samples.csv").exists()

    def test_store_env_var_override(self, tmp_path):
        from scicontest.store import DocumentStore

        store_path = tmp_path / "contest.db"
        DocumentStore(store_path).close()
        runner = CliRunner()
        result = runner.invoke(
            main,
            [
                "export", "--kind", "samples",
                "--config", str(DEMO_CONFIG),
                "--out", str(tmp_path / "exports"),
            ],
            env={"SCICONTEST_STORE": str(store_path)},
        )
        assert result.exit_code == 0, result.output
        assert (tmp_path / "exports" / "samples.csv").exists()

    def test_report_renders_what_exists(self, tmp_path):
        from scicontest.store import DocumentStore

        store_path = tmp_path / "contest.db"
        DocumentStore(store_path).close()
        runner = CliRunner()
        result = runner.invoke(
            main,
            [
                "report",
                "--config", str(DEMO_CONFIG),
                "--store", str(store_path),
                "--out", str(tmp_path / "report"),
            ],
        )
        assert result.exit_code == 0, result.output
        # Empty contest: samples/outbox exports exist, rankings skipped.
        names = {p.name for p in (tmp_path / "report" / "exports").iterdir()}
        assert "samples.csv" in names and "rankings_by_country.csv" not in names
