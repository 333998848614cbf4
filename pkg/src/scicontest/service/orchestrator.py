"""Contest orchestration: lifecycle, polling, rating, syndication, exports.

One ContestService owns the store and coordinates every module. All of the
rating pipeline stays pure; this layer only sequences it and persists the
results.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Any, Iterable, Mapping

from ..domain.categories import category_index
from ..domain.config import ContestConfig
from ..domain.topics import TopicSheet, default_topic_catalog, load_topic_catalog
from ..errors import ContestError
from ..ids import IdFactory, random_ids
from ..metrics.poller import (
    MetricsProvider,
    PollOutcome,
    PollTracker,
    StubProvider,
    poll_cycle,
)
from ..metrics.samples import (
    freeze_snapshot,
    sample_from_doc,
    sample_to_doc,
    snapshot_from_doc,
    snapshot_to_doc,
)
from ..metrics.simulated import simulated_provider
from ..rating.jury import (
    JuryScore,
    default_matrix,
    jury_score_from_doc,
    jury_score_to_doc,
    record_jury_score,
)
from ..rating.ranking import GroupBy, build_shortlist, rank, shortlist_from_doc, shortlist_to_doc
from ..rating.scores import community_score, format_score
from ..rating.winners import (
    record_audience_award,
    select_winners,
    winner_set_from_doc,
    winner_set_to_doc,
)
from ..submissions.media import Platform
from ..submissions.model import Submission
from ..submissions.service import SubmissionService
from ..syndication.events import ContestEvent, EventKind, event_to_doc
from ..syndication.outbox import Outbox
from ..syndication.posts import TemplateSet, render_event_post
from ..syndication.widgets import Widget, generate_widget
from ..timeutil import Clock, rfc3339
from .exports import outbox_csv, rankings_csv, samples_csv, winners_csv
from .phases import Phase, check_transition, successor
from .settings import ServiceSettings
from ..store import DocumentStore

log = logging.getLogger(__name__)

PHASE_KEY = ("phase", "current")
SNAPSHOT_KEY = ("snapshot", "current")
SHORTLIST_KEY = ("shortlist", "current")
WINNERS_KEY = ("winners", "current")
POLL_STATE_KEY = ("poll_state", "current")
SAMPLES_LOG = "samples"
EVENTS_LOG = "events"
PHASE_LOG = "phase_log"
AUDIT_LOG = "audit"
JURY_SCORES = "jury_scores"


class PlatformStubRouter:
    """Default live provider: one inert stub per supported platform."""

    provider_id = "live"

    def __init__(self):
        self._stubs = {
            Platform.YOUTUBE: StubProvider("youtube"),
            Platform.SLIDESHARE: StubProvider("slideshare"),
        }

    def fetch(self, media_link):
        return self._stubs[media_link.platform].fetch(media_link)


class ContestService:
    def __init__(
        self,
        config: ContestConfig,
        store: DocumentStore,
        clock: Clock | None = None,
        topics: Iterable[TopicSheet] | None = None,
        id_factory: IdFactory | None = None,
        settings: ServiceSettings | None = None,
        provider: MetricsProvider | None = None,
    ):
        config.validate()
        self.config = config
        self.store = store
        self.clock = clock or Clock()
        self.settings = settings or ServiceSettings.from_config(config)
        self.ids = id_factory or random_ids()
        if topics is None:
            topics = (
                load_topic_catalog(self.settings.topic_catalog)
                if self.settings.topic_catalog
                else default_topic_catalog()
            )
        self.topics = {t.id: t for t in topics}
        self.matrix = default_matrix(config)
        self.submissions = SubmissionService(
            store,
            config,
            self.topics.values(),
            self.clock,
            id_factory=self.ids,
            kdf_iterations=self.settings.kdf_iterations,
        )
        self.submissions.on_finalize(self._on_submission_finalized)
        self.outbox = Outbox(
            store,
            backoff_base_s=self.settings.backoff_base_s,
            backoff_cap_s=self.settings.backoff_cap_s,
        )
        self.templates = (
            TemplateSet.from_dir(self.settings.template_dir)
            if self.settings.template_dir
            else TemplateSet.default()
        )
        if provider is not None:
            self.provider = provider
        elif self.settings.metrics_fixture:
            self.provider = simulated_provider(self.settings.metrics_fixture)
        else:
            self.provider = PlatformStubRouter()

    # -- phases -------------------------------------------------------------

    def stored_phase(self) -> Phase:
        doc = self.store.get(*PHASE_KEY)
        return Phase(doc["phase"]) if doc else Phase.SETUP

    def current_phase(self) -> Phase:
        """Stored phase, auto-advanced by the clock up to CLOSED."""
        stored = self.stored_phase()
        now = self.clock.now()
        if now < self.config.submission_open:
            clocked = Phase.SETUP
        elif now <= self.config.submission_close:
            clocked = Phase.OPEN
        else:
            clocked = Phase.CLOSED
        if clocked > stored:
            with self.store.transaction():
                current = self.stored_phase()
                while current < clocked:
                    nxt = successor(current)
                    boundary = (
                        self.config.submission_open
                        if nxt is Phase.OPEN
                        else self.config.submission_close
                    )
                    self._record_phase(nxt, actor="clock", at=rfc3339(boundary))
                    current = nxt
            return clocked
        return stored

    def _record_phase(self, phase: Phase, actor: str, at: str | None = None) -> None:
        entry = {"phase": phase.value, "actor": actor, "at": at or rfc3339(self.clock.now())}
        self.store.put(*PHASE_KEY, {"phase": phase.value})
        self.store.append(PHASE_LOG, entry)

    def phase_history(self) -> list[dict[str, Any]]:
        return self.store.log_entries(PHASE_LOG)

    def advance_phase(self, actor: str, target: Phase) -> Phase:
        """Admin transition to the immediate successor phase.

        Repeating the current phase is an idempotent no-op, so a retried
        FROZEN request returns the existing snapshot instead of a new one.
        """
        with self.store.transaction():
            current = self.current_phase()
            if target == current:
                return current
            check_transition(current, target)
            if target is Phase.FROZEN:
                self._freeze()
            elif target is Phase.JURY:
                self._publish_shortlist()
            elif target is Phase.COMPLETE:
                self._select_winners()
            self._record_phase(target, actor=actor)
            return target

    # -- metrics --------------------------------------------------------------

    def run_poll_cycle(self) -> PollOutcome:
        now = self.clock.now()
        if hasattr(self.provider, "set_time"):
            # Simulated providers live on virtual ticks; map the clock onto
            # them so `serve` with a fixture behaves like the simulator.
            elapsed = (now - self.config.submission_open).total_seconds()
            self.provider.set_time(max(int(elapsed // self.settings.tick_seconds), 0))
        tracker = self._load_tracker()
        outcome = poll_cycle(self.submissions.live_submissions(), self.provider, now, tracker)
        with self.store.transaction():
            for sample in outcome.samples:
                self.store.append(SAMPLES_LOG, sample_to_doc(sample))
            self._save_tracker(tracker)
        for submission_id in outcome.newly_flagged:
            log.warning("metrics unavailable %d cycles in a row for %s",
                        tracker.flag_threshold, submission_id)
        return outcome

    def sample_history(self):
        return [sample_from_doc(doc) for doc in self.store.log_entries(SAMPLES_LOG)]

    def _load_tracker(self) -> PollTracker:
        doc = self.store.get(*POLL_STATE_KEY) or {}
        return PollTracker(
            flag_threshold=self.settings.failure_flag_threshold,
            consecutive_failures=dict(doc.get("consecutive_failures", {})),
            flagged=set(doc.get("flagged", [])),
        )

    def _save_tracker(self, tracker: PollTracker) -> None:
        self.store.put(
            *POLL_STATE_KEY,
            {
                "consecutive_failures": dict(sorted(tracker.consecutive_failures.items())),
                "flagged": sorted(tracker.flagged),
            },
        )

    def _freeze(self) -> None:
        recomputed = freeze_snapshot(
            self.sample_history(),
            self.submissions.live_submissions(),
            self.config.metrics_freeze,
        )
        existing = self.store.get(*SNAPSHOT_KEY)
        if existing is not None:
            if existing != snapshot_to_doc(recomputed):
                raise ContestError(
                    "ALREADY_FROZEN", "a different snapshot already exists; refusing to overwrite"
                )
            return
        self.store.put(*SNAPSHOT_KEY, snapshot_to_doc(recomputed))

    def snapshot(self):
        doc = self.store.get(*SNAPSHOT_KEY)
        return snapshot_from_doc(doc) if doc else None

    # -- rating ---------------------------------------------------------------

    def _publish_shortlist(self) -> None:
        snapshot = self.snapshot()
        if snapshot is None:
            raise ContestError("PRECONDITION_FAILED", "no frozen snapshot to shortlist from")
        shortlist = build_shortlist(snapshot, self.submissions.live_submissions(), self.config)
        self.store.put(*SHORTLIST_KEY, shortlist_to_doc(shortlist))
        for warning in shortlist.warnings:
            log.warning("%s", warning)
        self._emit(
            EventKind.SHORTLIST_PUBLISHED,
            "shortlist",
            {
                "title": "Community rating complete",
                "topic": "",
                "link": f"{self.settings.platform_base_url}/leaderboard",
            },
        )

    def shortlist(self):
        doc = self.store.get(*SHORTLIST_KEY)
        return shortlist_from_doc(doc) if doc else None

    def _age_group_by_submission(self) -> dict[str, str]:
        categories = category_index(self.config)
        return {
            s.submission_id: categories[s.category_id].age_group_id
            for s in self.submissions.live_submissions()
            if s.category_id
        }

    def record_jury_score(
        self, juror_id: str, submission_id: str, criteria_scores: Mapping[str, int]
    ) -> JuryScore:
        if self.current_phase() is not Phase.JURY:
            raise ContestError("PHASE_TOO_EARLY", "jury rating opens in the JURY phase")
        shortlist = self.shortlist()
        assert shortlist is not None  # JURY phase implies a stored shortlist
        score = JuryScore(
            juror_id, submission_id, dict(criteria_scores), self.clock.now()
        )
        record_jury_score(score, self.matrix, shortlist, self._age_group_by_submission())
        key = f"{juror_id}:{submission_id}"
        with self.store.transaction():
            previous = self.store.get(JURY_SCORES, key)
            if previous is not None:
                self.store.append(
                    AUDIT_LOG,
                    {
                        "action": "jury_score_replaced",
                        "juror_id": juror_id,
                        "submission_id": submission_id,
                        "previous": previous["scores"],
                        "at": rfc3339(self.clock.now()),
                    },
                )
            self.store.put(JURY_SCORES, key, jury_score_to_doc(score))
        return score

    def jury_scores_by_submission(self) -> dict[str, list[JuryScore]]:
        grouped: dict[str, list[JuryScore]] = {}
        for doc in self.store.values(JURY_SCORES):
            score = jury_score_from_doc(doc)
            grouped.setdefault(score.submission_id, []).append(score)
        for scores in grouped.values():
            scores.sort(key=lambda s: s.juror_id)
        return grouped

    def scores_for_juror(self, juror_id: str) -> list[JuryScore]:
        return sorted(
            (
                jury_score_from_doc(doc)
                for doc in self.store.values(JURY_SCORES)
                if doc["juror_id"] == juror_id
            ),
            key=lambda s: s.submission_id,
        )

    def _select_winners(self) -> None:
        shortlist = self.shortlist()
        if shortlist is None:
            raise ContestError("PRECONDITION_FAILED", "no shortlist; run the JURY phase first")
        try:
            winner_set = select_winners(
                shortlist,
                self.submissions.live_submissions(),
                self.jury_scores_by_submission(),
                self.matrix,
                self.config,
            )
        except ContestError as err:
            if err.code == "UNSCORED_ENTRIES":
                raise ContestError(
                    "PRECONDITION_FAILED",
                    "shortlisted entries without jury scores block completion",
                    details=err.details,
                )
            raise
        self.store.put(*WINNERS_KEY, winner_set_to_doc(winner_set))
        for warning in winner_set.warnings:
            log.warning("%s", warning)
        self._emit(
            EventKind.WINNERS_ANNOUNCED,
            "winners",
            {
                "title": "Winners announced",
                "topic": "",
                "link": f"{self.settings.platform_base_url}/winners",
            },
        )

    def winners(self):
        doc = self.store.get(*WINNERS_KEY)
        return winner_set_from_doc(doc) if doc else None

    def set_audience_award(self, actor: str, submission_id: str):
        winner_set = self.winners()
        if winner_set is None:
            raise ContestError("PHASE_TOO_EARLY", "no winners recorded yet")
        updated = record_audience_award(winner_set, submission_id)
        with self.store.transaction():
            if winner_set.audience_award:
                self.store.append(
                    AUDIT_LOG,
                    {
                        "action": "audience_award_replaced",
                        "previous": winner_set.audience_award,
                        "new": submission_id,
                        "actor": actor,
                        "at": rfc3339(self.clock.now()),
                    },
                )
            self.store.put(*WINNERS_KEY, winner_set_to_doc(updated))
        return updated

    # -- syndication ------------------------------------------------------------

    def _on_submission_finalized(self, submission: Submission) -> None:
        topic = self.topics.get(submission.topic_id)
        self._emit(
            EventKind.SUBMISSION_FINALIZED,
            submission.submission_id,
            {
                "title": submission.title,
                "topic": topic.title if topic else "",
                "link": self._deep_link(submission.submission_id),
            },
        )

    def _deep_link(self, submission_id: str) -> str:
        return f"{self.settings.platform_base_url.rstrip('/')}/submissions/{submission_id}"

    def _emit(self, kind: EventKind, subject_id: str, context: Mapping[str, str]) -> None:
        event = ContestEvent(kind, subject_id, self.clock.now())
        self.store.append(EVENTS_LOG, event_to_doc(event))
        for channel in self.settings.channels:
            try:
                post = render_event_post(
                    event,
                    self.templates,
                    channel,
                    context,
                    self.config.required_hashtag,
                    self.ids("post", kind.value, subject_id, channel.channel_id),
                )
            except ContestError as err:
                if err.code == "NO_TEMPLATE":
                    log.warning("no template for %s on %s; post skipped",
                                kind.value, channel.channel_id)
                    continue
                raise
            self.outbox.enqueue(post)

    def widget_for(self, submission_id: str) -> Widget:
        submission = self.submissions.get_submission(submission_id)
        topic = self.topics.get(submission.topic_id)
        return generate_widget(
            submission, self.settings.platform_base_url, topic.title if topic else ""
        )

    # -- views -------------------------------------------------------------------

    def contest_stats(self) -> dict[str, Any]:
        live = self.submissions.live_submissions()
        by_country = Counter(s.country for s in live)
        by_category = Counter(s.category_id for s in live)
        distinct = len(by_country)
        return {
            "by_country": dict(sorted(by_country.items())),
            "by_category": dict(sorted(by_category.items())),
            "total_participants": len({s.account_id for s in live}),
            "distinct_countries": distinct,
            "target_min_countries": self.config.target_min_countries,
            "below_country_target": distinct < self.config.target_min_countries,
        }

    def leaderboard(self, group_by: GroupBy) -> dict[str, list[dict[str, Any]]]:
        phase = self.current_phase()
        if phase >= Phase.FROZEN:
            snapshot = self.snapshot()
        elif self.settings.leaderboard_visibility == "live":
            snapshot = freeze_snapshot(
                self.sample_history(), self.submissions.live_submissions(), self.clock.now()
            )
        else:
            raise ContestError(
                "PHASE_TOO_EARLY", "the leaderboard becomes public after the metrics freeze"
            )
        assert snapshot is not None
        live = {s.submission_id: s for s in self.submissions.live_submissions()}
        board: dict[str, list[dict[str, Any]]] = {}
        for group, ordered in rank(
            snapshot, live.values(), group_by, self.config.score_weights
        ).items():
            rows = []
            for position, sid in enumerate(ordered, start=1):
                scored = community_score(snapshot.sample_for(sid), self.config.score_weights)
                submission = live[sid]
                rows.append(
                    {
                        "rank": position,
                        "submission_id": sid,
                        "title": submission.title,
                        "category_id": submission.category_id,
                        "country": submission.country,
                        "score": format_score(scored.score),
                        "views": scored.views,
                        "likes": scored.likes,
                        "shares": scored.shares,
                    }
                )
            board[group] = rows
        return board

    # -- exports -----------------------------------------------------------------

    def export_payloads(self, kind: str) -> dict[str, str]:
        """CSV payloads by filename for RANKINGS / WINNERS / SAMPLES / OUTBOX."""
        kind = kind.upper()
        phase = self.current_phase()
        if kind == "RANKINGS":
            if phase < Phase.FROZEN:
                raise ContestError("PHASE_TOO_EARLY", "rankings exist after the freeze")
            snapshot = self.snapshot()
            live = self.submissions.live_submissions()
            return {
                "rankings_by_country.csv": rankings_csv(
                    snapshot, live, self.config, GroupBy.COUNTRY
                ),
                "rankings_by_category.csv": rankings_csv(
                    snapshot, live, self.config, GroupBy.CATEGORY
                ),
            }
        if kind == "WINNERS":
            if phase is not Phase.COMPLETE:
                raise ContestError("PHASE_TOO_EARLY", "winners exist once the contest completes")
            return {"winners.csv": winners_csv(self.winners())}
        if kind == "SAMPLES":
            return {"samples.csv": samples_csv(self.sample_history())}
        if kind == "OUTBOX":
            return {"outbox.csv": outbox_csv(self.outbox.posts())}
        raise ContestError("NOT_FOUND", f"unknown export kind {kind!r}")
