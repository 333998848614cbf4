"""Full virtual contest runs.

A scenario document supplies the participants (each with one entry) and the
simulated platform's metric timeline; jury score files supply the second
rating stage. The run drives the real service stack on a manual clock with
content-derived ids, so two runs over the same inputs, in any input order,
produce byte-identical exports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import timedelta
from pathlib import Path
from typing import Any, Sequence

from ..errors import ContestError
from ..ids import content_ids
from ..metrics.simulated import SimulatedProvider
from ..submissions.media import validate_media_link
from ..timeutil import ManualClock, parse_date
from .orchestrator import ContestService
from .phases import Phase
from .settings import ServiceSettings
from ..store import DocumentStore

FIXTURE_PASSWORD = "fixture-password"  # virtual contests hold no real credentials


@dataclass
class Scenario:
    participants: list[dict[str, Any]]
    samples: list[dict[str, Any]]
    tick_seconds: int = 3600

    @classmethod
    def load(cls, path: str | Path) -> "Scenario":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as bad:
            raise ContestError("PARSE_ERROR", f"scenario is not valid JSON: {bad}")
        if isinstance(doc, dict) and "participants" in doc:
            return cls(
                participants=list(doc["participants"]),
                samples=list(doc.get("samples", [])),
                tick_seconds=int(doc.get("tick_seconds", 3600)),
            )
        # Bare sample sequences remain valid provider fixtures, but a full
        # simulation needs participants to submit something.
        raise ContestError(
            "PARSE_ERROR", "scenario document needs a 'participants' list"
        )


@dataclass
class JuryFile:
    juror_id: str
    scores: list[dict[str, Any]]  # {"url": ..., "criteria": {...}}

    @classmethod
    def load(cls, path: str | Path) -> "JuryFile":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as bad:
            raise ContestError("PARSE_ERROR", f"jury file is not valid JSON: {bad}")
        try:
            return cls(juror_id=doc["juror_id"], scores=list(doc["scores"]))
        except (KeyError, TypeError) as bad:
            raise ContestError("PARSE_ERROR", f"malformed jury file {path}: {bad}")


@dataclass
class SimulationResult:
    summary: dict[str, Any]
    export_paths: list[Path] = field(default_factory=list)
    figure_paths: list[Path] = field(default_factory=list)


def run_simulation(
    config,
    scenario: Scenario,
    jury_files: Sequence[JuryFile],
    out_dir: str | Path,
    figures: bool = True,
) -> SimulationResult:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    clock = ManualClock(config.submission_open)
    settings = ServiceSettings.from_config(config)
    settings.kdf_iterations = min(settings.kdf_iterations, 600)
    provider = SimulatedProvider(scenario.samples)
    service = ContestService(
        config,
        DocumentStore(),
        clock=clock,
        id_factory=content_ids(),
        settings=settings,
        provider=provider,
    )

    def tick_time(tick: int):
        return config.submission_open + timedelta(seconds=tick * scenario.tick_seconds)

    # Registration and drafts at the window open, in a content-determined
    # order so input permutations cannot matter.
    url_to_submission: dict[str, str] = {}
    enrolled = sorted(scenario.participants, key=lambda p: p["email"])
    for person in enrolled:
        account_id = service.submissions.register_account(
            person.get("first_name", "Participant"),
            person.get("last_name", ""),
            person["email"],
            person.get("password", FIXTURE_PASSWORD),
        )
        service.submissions.complete_profile(
            account_id,
            parse_date(person["birth_date"]),
            person["country"],
            person.get("participation_mode", "individual"),
            person.get("group_member_names", ()),
        )
        entry = person["submission"]
        submission_id = service.submissions.create_submission(
            account_id,
            entry["title"],
            entry.get("description", ""),
            entry["topic_id"],
            entry["media_type_id"],
            entry["url"],
        )
        person["_account_id"] = account_id
        person["_submission_id"] = submission_id
        link = validate_media_link(entry["url"])
        url_to_submission[entry["url"]] = submission_id
        url_to_submission[link.normalized_url] = submission_id

    # Finalize in submission-time order.
    for person in sorted(enrolled, key=lambda p: (int(p.get("submitted_at_tick", 0)), p["email"])):
        clock.set(tick_time(int(person.get("submitted_at_tick", 0))))
        service.submissions.finalize_submission(
            person["_account_id"],
            person["_submission_id"],
            hashtag_attested=person.get("hashtag_attested", True),
        )

    # Poll once per fixture tick; post-freeze cycles still record history
    # but can no longer move any ranking.
    pre_freeze = [t for t in provider.ticks() if tick_time(t) <= config.metrics_freeze]
    post_freeze = [t for t in provider.ticks() if tick_time(t) > config.metrics_freeze]
    for tick in pre_freeze:
        clock.set(tick_time(tick))
        provider.set_time(tick)
        service.run_poll_cycle()

    clock.set(config.metrics_freeze)
    service.advance_phase("simulator", Phase.FROZEN)
    service.advance_phase("simulator", Phase.JURY)

    clock.set(config.metrics_freeze + timedelta(days=1))
    shortlist = service.shortlist()
    shortlisted = shortlist.ids()
    applied = 0
    skipped: list[str] = []
    entries = sorted(
        (
            (jury.juror_id, row)
            for jury in jury_files
            for row in jury.scores
        ),
        key=lambda pair: (pair[0], pair[1].get("url", "")),
    )
    for juror_id, row in entries:
        submission_id = url_to_submission.get(row.get("url", ""))
        if submission_id is None:
            raise ContestError(
                "PARSE_ERROR", f"jury file references unknown url {row.get('url')!r}"
            )
        if submission_id not in shortlisted:
            skipped.append(submission_id)
            continue
        service.record_jury_score(juror_id, submission_id, row["criteria"])
        applied += 1

    service.advance_phase("simulator", Phase.COMPLETE)

    for tick in post_freeze:
        clock.set(tick_time(tick))
        provider.set_time(tick)
        service.run_poll_cycle()

    # Exports: delimited files plus (optionally) the report figures.
    export_dir = out / "exports"
    export_dir.mkdir(parents=True, exist_ok=True)
    payloads: dict[str, str] = {}
    for kind in ("RANKINGS", "WINNERS", "SAMPLES", "OUTBOX"):
        payloads.update(service.export_payloads(kind))
    export_paths = []
    for name, payload in sorted(payloads.items()):
        path = export_dir / name
        path.write_text(payload, encoding="utf-8")
        export_paths.append(path)

    figure_paths: list[Path] = []
    if figures:
        from ..report.figures import render_contest_figures

        figure_paths = render_contest_figures(service, out / "figures")

    stats = service.contest_stats()
    winner_set = service.winners()
    summary = {
        "participants": len(enrolled),
        "distinct_countries": stats["distinct_countries"],
        "below_country_target": stats["below_country_target"],
        "shortlist_size": len(shortlist.entries),
        "shortlist_warnings": list(shortlist.warnings),
        "jury_scores_applied": applied,
        "jury_scores_skipped_not_shortlisted": len(skipped),
        "winners": len(winner_set.winners),
        "winner_warnings": list(winner_set.warnings),
        "categories": {
            category: winner.submission_id
            for category, winner in sorted(winner_set.winners.items())
        },
    }
    (out / "summary.json").write_text(
        json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return SimulationResult(summary, export_paths, figure_paths)


def simulate_from_paths(
    config_path: str | Path,
    fixture_path: str | Path,
    jury_paths: Sequence[str | Path],
    out_dir: str | Path,
    figures: bool = True,
) -> SimulationResult:
    from ..domain.config import load_config

    return run_simulation(
        load_config(config_path),
        Scenario.load(fixture_path),
        [JuryFile.load(p) for p in jury_paths],
        out_dir,
        figures=figures,
    )
