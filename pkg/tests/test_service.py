"""Service layer: HTTP surface, phases, auth roles, stats, exports."""

from __future__ import annotations

from datetime import timedelta

import pytest
from fastapi.testclient import TestClient

from scicontest.errors import ConfigError
from scicontest.ids import content_ids
from scicontest.service import ContestService, Phase
from scicontest.service.app import create_app
from scicontest.service.settings import ServiceSettings
from scicontest.store import DocumentStore
from scicontest.timeutil import ManualClock

from conftest import CLOSE, OPEN, birth_date_for_age, make_config
from scenario_builder import AG1_BIRTH, AG2_BIRTH

EXTRAS = {
    "admin_key": "admin-secret",
    "jurors": [{"juror_id": "jury-01", "key": "jury-secret"}],
    "kdf_iterations": 500,
    "platform_base_url": "https://contest.example",
}


def make_service(clock=None, config=None) -> ContestService:
    config = config or make_config(extras=EXTRAS)
    return ContestService(
        config,
        DocumentStore(),
        clock=clock or ManualClock(OPEN + timedelta(days=1)),
        id_factory=content_ids(),
        settings=ServiceSettings.from_extras(EXTRAS),
    )


@pytest.fixture
def service():
    return make_service()


@pytest.fixture
def client(service):
    return TestClient(create_app(service))


def participant_token(client, email="ada@example.org"):
    client.post(
        "/accounts",
        json={
            "first_name": "Ada",
            "last_name": "L",
            "email": email,
            "password": "corr3ct-horse",
        },
    ).raise_for_status()
    response = client.post("/sessions", json={"email": email, "password": "corr3ct-horse"})
    return response.json()["token"]


def auth(token):
    return {"Authorization": f"Bearer {token}"}


def enroll(client, token, birth_date=AG1_BIRTH, country="AT", media="video",
           url="https://www.youtube.com/watch?v=vid00000001"):
    client.put(
        "/profile",
        json={"birth_date": birth_date, "country_of_residence": country},
        headers=auth(token),
    ).raise_for_status()
    created = client.post(
        "/submissions",
        json={
            "title": "Solar oven",
            "description": "d",
            "topic_id": "AG1_01",
            "media_type_id": media,
            "media_url": url,
        },
        headers=auth(token),
    )
    created.raise_for_status()
    return created.json()["submission_id"]


class TestPublicSurface:
    def test_ready_reports_phase(self, client):
        body = client.get("/ready").json()
        assert body["phase"] == "OPEN"

    def test_contest_meta_carries_rules(self, client):
        meta = client.get("/contest").json()
        assert meta["jury_criteria"]["AG1"] == [
            "problem_presentation", "creativity", "added_value", "future_thinking"
        ]
        assert meta["jury_criteria"]["AG2"][-1] == "scientific_approach"
        assert meta["jury_scale_max"] == 10
        assert meta["leaderboard_visible"] is False

    def test_topics_served(self, client):
        topics = client.get("/topics").json()
        assert len(topics) == 51

    def test_error_envelope(self, client):
        response = client.get("/submissions/doesnotexist")
        assert response.status_code == 404
        body = response.json()
        assert set(body) == {"code", "message", "details"}
        assert body["code"] == "NOT_FOUND"


class TestAuthRoles:
    def test_participant_flow_and_public_page(self, client):
        token = participant_token(client)
        submission_id = enroll(client, token)
        finalized = client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        )
        assert finalized.status_code == 200
        assert finalized.json()["state"] == "SUBMITTED"
        page = client.get(f"/submissions/{submission_id}")
        assert page.json()["category_id"] == "AG1-video"
        widget = client.get(f"/submissions/{submission_id}/widget").json()
        assert widget["deep_link"].endswith(submission_id)
        assert widget["deep_link"] in widget["embed_markup"]

    def test_unauthenticated_rejected(self, client):
        response = client.put(
            "/profile", json={"birth_date": AG1_BIRTH, "country_of_residence": "AT"}
        )
        assert response.status_code == 401

    def test_juror_token_rejected_on_participant_endpoint(self, client):
        juror = client.post(
            "/sessions", json={"juror_id": "jury-01", "key": "jury-secret"}
        ).json()["token"]
        response = client.put(
            "/profile",
            json={"birth_date": AG1_BIRTH, "country_of_residence": "AT"},
            headers=auth(juror),
        )
        assert response.status_code == 403

    def test_participant_token_rejected_on_jury_endpoint(self, client):
        token = participant_token(client)
        response = client.get("/jury/shortlist", headers=auth(token))
        assert response.status_code == 403

    def test_admin_key_required(self, client):
        assert client.post("/sessions", json={"admin_key": "wrong"}).status_code == 401
        token = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        assert client.post("/phase", json={"target": "CLOSED"}, headers=auth(token)).status_code in (200, 409)

    def test_bad_participant_credentials(self, client):
        participant_token(client)
        response = client.post(
            "/sessions", json={"email": "ada@example.org", "password": "wrong-wrong"}
        )
        assert response.status_code == 401


def run_full_contest(client, service):
    """Drive a small contest to COMPLETE over HTTP; returns tokens."""
    entries = [
        ("ada@example.org", AG1_BIRTH, "AT", "video", "https://www.youtube.com/watch?v=vidA"),
        ("eva@example.org", AG2_BIRTH, "DE", "poster", "https://www.slideshare.net/eva/deck-1"),
    ]
    for email, birth, country, media, url in entries:
        token = participant_token(client, email)
        submission_id = enroll(client, token, birth, country, media, url)
        client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        ).raise_for_status()

    # Tokens issued after the jump: sessions expire on wall-clock TTL.
    service.clock.set(CLOSE + timedelta(hours=1))
    admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
    juror = client.post(
        "/sessions", json={"juror_id": "jury-01", "key": "jury-secret"}
    ).json()["token"]
    for target in ("FROZEN", "JURY"):
        client.post("/phase", json={"target": target}, headers=auth(admin)).raise_for_status()

    shortlist = client.get("/jury/shortlist", headers=auth(juror)).json()
    for entry in shortlist["entries"]:
        scores = {criterion: 7 for criterion in entry["criteria"]}
        client.put(
            f"/jury/scores/{entry['submission_id']}",
            json={"scores": scores},
            headers=auth(juror),
        ).raise_for_status()
    client.post("/phase", json={"target": "COMPLETE"}, headers=auth(admin)).raise_for_status()
    return admin, juror


class TestLifecycle:
    def test_clock_advances_setup_open_closed(self):
        clock = ManualClock(OPEN - timedelta(days=1))
        service = make_service(clock=clock)
        assert service.current_phase() is Phase.SETUP
        clock.set(OPEN + timedelta(days=1))
        assert service.current_phase() is Phase.OPEN
        clock.set(CLOSE + timedelta(seconds=1))
        assert service.current_phase() is Phase.CLOSED
        history = [e["phase"] for e in service.phase_history()]
        assert history == ["OPEN", "CLOSED"]

    def test_skipping_phase_rejected(self, client, service):
        admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        response = client.post("/phase", json={"target": "JURY"}, headers=auth(admin))
        assert response.status_code == 409
        assert response.json()["code"] == "INVALID_TRANSITION"

    def test_complete_blocked_by_unscored_entries(self, client, service):
        token = participant_token(client)
        submission_id = enroll(client, token)
        client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        ).raise_for_status()
        service.clock.set(CLOSE + timedelta(hours=1))
        admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        client.post("/phase", json={"target": "FROZEN"}, headers=auth(admin)).raise_for_status()
        client.post("/phase", json={"target": "JURY"}, headers=auth(admin)).raise_for_status()
        response = client.post("/phase", json={"target": "COMPLETE"}, headers=auth(admin))
        assert response.status_code == 409
        body = response.json()
        assert body["code"] == "PRECONDITION_FAILED"
        assert body["details"] == [submission_id]

    def test_freeze_is_idempotent(self, client, service):
        admin, _ = run_full_contest(client, service)
        snapshot_before = service.store.get("snapshot", "current")
        # COMPLETE already; a repeated FROZEN request is not a successor and
        # must not create a new snapshot. Re-request the current phase.
        response = client.post("/phase", json={"target": "COMPLETE"}, headers=auth(admin))
        assert response.status_code == 200
        assert service.store.get("snapshot", "current") == snapshot_before

    def test_phase_log_strictly_increasing(self, client, service):
        run_full_contest(client, service)
        order = ["SETUP", "OPEN", "CLOSED", "FROZEN", "JURY", "COMPLETE"]
        history = [e["phase"] for e in service.phase_history()]
        indices = [order.index(p) for p in history]
        assert indices == sorted(indices) and len(set(indices)) == len(indices)

    def test_full_contest_yields_winners_and_leaderboard(self, client, service):
        run_full_contest(client, service)
        winners = client.get("/winners").json()["winners"]
        assert {w["category_id"] for w in winners} == {"AG1-video", "AG2-poster"}
        board = client.get("/leaderboard?by=country").json()["groups"]
        assert set(board) == {"AT", "DE"}

    def test_leaderboard_hidden_pre_freeze(self, client):
        response = client.get("/leaderboard")
        assert response.status_code == 409
        assert response.json()["code"] == "PHASE_TOO_EARLY"

    def test_audience_award_flow(self, client, service):
        admin, _ = run_full_contest(client, service)
        winners = client.get("/winners").json()["winners"]
        picked = winners[0]["submission_id"]
        response = client.post(
            "/audience-award", json={"submission_id": picked}, headers=auth(admin)
        )
        assert response.json()["audience_award"] == picked
        bad = client.post(
            "/audience-award", json={"submission_id": "nope"}, headers=auth(admin)
        )
        assert bad.status_code == 400
        assert bad.json()["code"] == "NOT_A_WINNER"

    def test_jury_score_replacement_audited(self, client, service):
        token = participant_token(client)
        submission_id = enroll(client, token)
        client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        ).raise_for_status()
        service.clock.set(CLOSE + timedelta(hours=1))
        admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        juror = client.post(
            "/sessions", json={"juror_id": "jury-01", "key": "jury-secret"}
        ).json()["token"]
        for target in ("FROZEN", "JURY"):
            client.post("/phase", json={"target": target}, headers=auth(admin)).raise_for_status()
        entry = client.get("/jury/shortlist", headers=auth(juror)).json()["entries"][0]
        for value in (7, 9):  # second write replaces the first
            client.put(
                f"/jury/scores/{entry['submission_id']}",
                json={"scores": {criterion: value for criterion in entry["criteria"]}},
                headers=auth(juror),
            ).raise_for_status()
        audit = service.store.log_entries("audit")
        replacement = [e for e in audit if e["action"] == "jury_score_replaced"]
        assert len(replacement) == 1
        assert set(replacement[0]["previous"].values()) == {7}
        mine = client.get("/jury/scores", headers=auth(juror)).json()
        assert set(mine[0]["scores"].values()) == {9}


class TestStatsAndExports:
    def test_empty_contest_all_zeros(self, client):
        stats = client.get("/stats").json()
        assert stats["total_participants"] == 0
        assert stats["distinct_countries"] == 0
        assert stats["by_country"] == {} and stats["by_category"] == {}

    def test_stats_match_full_scan(self, client, service):
        token = participant_token(client)
        submission_id = enroll(client, token)
        client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        ).raise_for_status()
        stats = client.get("/stats").json()
        live = service.submissions.live_submissions()
        assert stats["total_participants"] == len({s.account_id for s in live})
        assert stats["by_country"] == {"AT": 1}
        assert stats["by_category"] == {"AG1-video": 1}

    def test_country_target_boundary(self):
        # 14 countries -> advisory on; 15 -> off.
        service = make_service()
        countries = [
            "AT", "BE", "CY", "CZ", "DE", "ES", "FR", "GB", "GR", "HU",
            "IE", "IT", "PL", "SE", "SI",
        ]
        config = make_config(eligible_countries=frozenset(countries), extras=EXTRAS)
        service = ContestService(
            config,
            DocumentStore(),
            clock=ManualClock(OPEN + timedelta(days=1)),
            settings=ServiceSettings.from_extras(EXTRAS),
        )
        for i, country in enumerate(countries):
            account = service.submissions.register_account(
                "P", str(i), f"p{i}@example.org", "corr3ct-horse"
            )
            service.submissions.complete_profile(
                account, birth_date_for_age(12, CLOSE.date()), country
            )
            sid = service.submissions.create_submission(
                account, "t", "", "AG1_01", "video",
                f"https://www.youtube.com/watch?v=v{i:09d}",
            )
            service.submissions.finalize_submission(account, sid, hashtag_attested=True)
            stats = service.contest_stats()
            assert stats["below_country_target"] == (i + 1 < 15)
        assert service.contest_stats()["distinct_countries"] == 15

    def test_rankings_export_gated_before_freeze(self, client, service):
        admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        response = client.get("/export/rankings", headers=auth(admin))
        assert response.status_code == 409
        assert response.json()["code"] == "PHASE_TOO_EARLY"

    def test_samples_export_anytime(self, client, service):
        admin = client.post("/sessions", json={"admin_key": "admin-secret"}).json()["token"]
        response = client.get("/export/samples", headers=auth(admin))
        assert response.status_code == 200
        assert response.text.startswith("submission_id,observed_at,views,likes,shares")

    def test_winners_export_after_complete(self, client, service):
        admin, _ = run_full_contest(client, service)
        response = client.get("/export/winners", headers=auth(admin))
        assert response.status_code == 200
        lines = response.text.strip().splitlines()
        assert lines[0] == "category_id,submission_id,jury_aggregate,audience_award"
        assert len(lines) == 3  # header + two categories

    def test_withdrawn_excluded_from_stats(self, client, service):
        token = participant_token(client)
        submission_id = enroll(client, token)
        client.post(
            f"/submissions/{submission_id}/finalize",
            json={"hashtag_attested": True},
            headers=auth(token),
        ).raise_for_status()
        client.delete(f"/submissions/{submission_id}", headers=auth(token)).raise_for_status()
        assert client.get("/stats").json()["total_participants"] == 0


class TestPolling:
    def make_enrolled_service(self):
        service = make_service()
        account = service.submissions.register_account(
            "Ada", "L", "ada@example.org", "corr3ct-horse"
        )
        service.submissions.complete_profile(
            account, birth_date_for_age(12, CLOSE.date()), "AT"
        )
        sid = service.submissions.create_submission(
            account, "t", "", "AG1_01", "video",
            "https://www.youtube.com/watch?v=pollTest01",
        )
        service.submissions.finalize_submission(account, sid, hashtag_attested=True)
        return service, sid

    def test_clock_maps_onto_simulated_provider_ticks(self):
        from scicontest.metrics import SimulatedProvider

        service, sid = self.make_enrolled_service()
        url = "https://www.youtube.com/watch?v=pollTest01"
        service.provider = SimulatedProvider(
            [
                {"url": url, "virtual_time": 0, "views": 10, "likes": 0, "shares": 0},
                {"url": url, "virtual_time": 5, "views": 50, "likes": 0, "shares": 0},
            ]
        )
        service.clock.set(OPEN + timedelta(hours=2))
        service.run_poll_cycle()
        service.clock.set(OPEN + timedelta(hours=6))
        service.run_poll_cycle()
        views = [s.views for s in service.sample_history()]
        assert views == [10, 50]

    def test_history_per_submission_ordered_by_observation(self):
        from scicontest.metrics import SimulatedProvider

        service, sid = self.make_enrolled_service()
        url = "https://www.youtube.com/watch?v=pollTest01"
        service.provider = SimulatedProvider(
            [
                {"url": url, "virtual_time": t, "views": t, "likes": 0, "shares": 0}
                for t in (0, 1, 2, 3)
            ]
        )
        for hours in (1, 2, 3, 4):
            service.clock.set(OPEN + timedelta(hours=hours))
            service.run_poll_cycle()
        history = [s for s in service.sample_history() if s.submission_id == sid]
        observed = [s.observed_at for s in history]
        assert observed == sorted(observed) and len(set(observed)) == len(observed)


class TestStartupValidation:
    def test_overlapping_age_groups_named(self):
        from scicontest.domain.config import AgeGroupDef

        with pytest.raises(ConfigError) as err:
            make_config(
                age_groups=(AgeGroupDef("AG1", 10, 15), AgeGroupDef("AG2", 15, 20))
            )
        assert any("AG1" in p and "AG2" in p for p in err.value.problems)

    def test_unreachable_store_fails(self, tmp_path):
        import sqlite3

        with pytest.raises(sqlite3.OperationalError):
            DocumentStore(tmp_path / "missing" / "contest.db")
