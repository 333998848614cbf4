"""Command line interface.

    scicontest serve    --config contest.json [--store contest.db]
    scicontest simulate --config contest.json --fixture scenario.json \
                        --jury jury1.json --jury jury2.json --out run/
    scicontest export   --kind rankings --store contest.db --out exports/
    scicontest report   --store contest.db --config contest.json --out report/

SCICONTEST_STORE and SCICONTEST_LISTEN override the store path and listen
address.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .domain.config import load_config
from .errors import ContestError
from .service.exports import write_exports
from .service.orchestrator import ContestService
from .service.simulate import simulate_from_paths
from .store import DocumentStore

ENV_STORE = "SCICONTEST_STORE"
ENV_LISTEN = "SCICONTEST_LISTEN"


@click.group()
def main():
    """Run and operate a social-media-rated STEM contest."""


def _service(config_path: str, store_path: str | None) -> ContestService:
    config = load_config(config_path)
    store = DocumentStore(store_path or ":memory:")
    return ContestService(config, store)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--store", "store_path", envvar=ENV_STORE, default="contest.db", show_default=True)
@click.option("--listen", envvar=ENV_LISTEN, default="127.0.0.1:8000", show_default=True)
def serve(config_path, store_path, listen):
    """Start the contest service (fails fast on invalid config)."""
    import uvicorn

    from .service.app import create_app

    try:
        service = _service(config_path, store_path)
    except ContestError as err:
        raise click.ClickException(f"{err.code}: {err.message}")
    app = create_app(service)
    phase = service.current_phase().value
    click.echo(f"contest phase: {phase}; store: {store_path}")
    if service.settings.poll_interval_s > 0:
        _start_poll_worker(service)
    host, _, port = listen.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000), log_level="info")


def _start_poll_worker(service: ContestService) -> None:
    import threading

    stop = threading.Event()

    def loop():
        while not stop.wait(service.settings.poll_interval_s):
            try:
                outcome = service.run_poll_cycle()
                click.echo(
                    f"poll cycle: {len(outcome.samples)} samples,"
                    f" {len(outcome.failures)} failures"
                )
            except Exception as err:  # worker must survive provider trouble
                click.echo(f"poll cycle failed: {err}", err=True)

    threading.Thread(target=loop, name="metrics-poller", daemon=True).start()


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--fixture", "fixture_path", required=True, type=click.Path(exists=True),
              help="Scenario document: participants, samples, tick_seconds.")
@click.option("--jury", "jury_paths", multiple=True, required=True,
              type=click.Path(exists=True), help="Jury score file (repeatable).")
@click.option("--out", "out_dir", default="simulation", show_default=True)
@click.option("--figures/--no-figures", default=True, show_default=True)
def simulate(config_path, fixture_path, jury_paths, out_dir, figures):
    """Run a whole contest on virtual time and write exports + figures."""
    try:
        result = simulate_from_paths(
            config_path, fixture_path, jury_paths, out_dir, figures=figures
        )
    except ContestError as err:
        raise click.ClickException(f"{err.code}: {err.message}")
    click.echo(json.dumps(result.summary, indent=2, sort_keys=True))
    for path in result.export_paths + result.figure_paths:
        click.echo(f"wrote {path}")
    if result.summary["below_country_target"]:
        click.echo("warning: participating countries below target", err=True)


EXPORT_KINDS = ["rankings", "winners", "samples", "outbox"]


@main.command()
@click.option("--kind", type=click.Choice(EXPORT_KINDS), required=True)
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--store", "store_path", envvar=ENV_STORE, required=True,
              type=click.Path(exists=True))
@click.option("--out", "out_dir", default="exports", show_default=True)
def export(kind, config_path, store_path, out_dir):
    """Write one export kind from a contest store to CSV files."""
    service = _service(config_path, store_path)
    try:
        payloads = service.export_payloads(kind)
    except ContestError as err:
        raise click.ClickException(f"{err.code}: {err.message}")
    for path in write_exports(payloads, out_dir):
        click.echo(f"wrote {path}")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--store", "store_path", envvar=ENV_STORE, required=True,
              type=click.Path(exists=True))
@click.option("--out", "out_dir", default="report", show_default=True)
def report(config_path, store_path, out_dir):
    """Render figures plus every available export for the current state."""
    from .report.figures import render_contest_figures

    service = _service(config_path, store_path)
    payloads = {}
    for kind in EXPORT_KINDS:
        try:
            payloads.update(service.export_payloads(kind))
        except ContestError as err:
            click.echo(f"skipping {kind}: {err.code}", err=True)
    written = write_exports(payloads, Path(out_dir) / "exports")
    figures = render_contest_figures(service, Path(out_dir) / "figures")
    for path in written + figures:
        click.echo(f"wrote {path}")


if __name__ == "__main__":
    sys.exit(main())
