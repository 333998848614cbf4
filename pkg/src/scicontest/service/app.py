"""HTTP surface over the ContestService.

Request/response bodies are JSON; every error uses the uniform
{code, message, details} envelope. State-mutating endpoints are
authenticated, with strict role separation between participants, jurors,
and the admin.
"""

from __future__ import annotations

from datetime import date
from typing import Any

from fastapi import Depends, FastAPI, Header, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..errors import ContestError
from ..rating.ranking import GroupBy
from ..rating.scores import format_score
from ..submissions.model import Submission
from ..timeutil import rfc3339
from .auth import ROLE_ADMIN, ROLE_JUROR, ROLE_PARTICIPANT, SessionRegistry
from .orchestrator import ContestService
from .phases import Phase

HTTP_STATUS_BY_CODE = {
    "UNAUTHENTICATED": 401,
    "FORBIDDEN": 403,
    "ADMIN_DISABLED": 403,
    "NOT_FOUND": 404,
    "ACCOUNT_NOT_FOUND": 404,
    "EMAIL_TAKEN": 409,
    "ALREADY_SUBMITTED": 409,
    "ALREADY_FROZEN": 409,
    "INVALID_TRANSITION": 409,
    "PRECONDITION_FAILED": 409,
    "PHASE_TOO_EARLY": 409,
    "WINDOW_CLOSED": 409,
    "FROZEN": 409,
}


class RegisterBody(BaseModel):
    first_name: str
    last_name: str
    email: str
    password: str


class SessionBody(BaseModel):
    email: str | None = None
    password: str | None = None
    juror_id: str | None = None
    key: str | None = None
    admin_key: str | None = None


class ProfileBody(BaseModel):
    birth_date: date
    country_of_residence: str
    participation_mode: str = "individual"
    group_member_names: list[str] = Field(default_factory=list)


class SubmissionBody(BaseModel):
    title: str
    description: str = ""
    topic_id: str
    media_type_id: str
    media_url: str


class FinalizeBody(BaseModel):
    hashtag_attested: bool = False


class ScoresBody(BaseModel):
    scores: dict[str, int]


class PhaseBody(BaseModel):
    target: str


class AudienceAwardBody(BaseModel):
    submission_id: str


def submission_view(service: ContestService, submission: Submission) -> dict[str, Any]:
    topic = service.topics.get(submission.topic_id)
    return {
        "submission_id": submission.submission_id,
        "title": submission.title,
        "description": submission.description,
        "topic_id": submission.topic_id,
        "topic_title": topic.title if topic else "",
        "media_type_id": submission.media_type_id,
        "media_url": submission.media_link.normalized_url,
        "embed_url": submission.media_link.embed_url,
        "platform": submission.media_link.platform.value,
        "state": submission.state.value,
        "category_id": submission.category_id,
        "country": submission.country,
        "submitted_at": rfc3339(submission.submitted_at) if submission.submitted_at else None,
        "hashtag_attested": submission.hashtag_attested,
    }


def create_app(service: ContestService) -> FastAPI:
    app = FastAPI(title="scicontest", version="0.1.0")
    app.state.service = service
    sessions = SessionRegistry(service.store, service.clock, service.settings.session_ttl_s)

    @app.exception_handler(ContestError)
    async def contest_error_handler(_request: Request, err: ContestError):
        return JSONResponse(
            status_code=HTTP_STATUS_BY_CODE.get(err.code, 400),
            content={"code": err.code, "message": err.message, "details": err.details},
        )

    def bearer(authorization: str | None = Header(default=None)) -> str | None:
        if authorization and authorization.lower().startswith("bearer "):
            return authorization[7:]
        return None

    def participant(token: str | None = Depends(bearer)):
        return sessions.require(token, ROLE_PARTICIPANT)

    def juror(token: str | None = Depends(bearer)):
        return sessions.require(token, ROLE_JUROR)

    def admin(token: str | None = Depends(bearer)):
        return sessions.require(token, ROLE_ADMIN)

    # -- public ------------------------------------------------------------

    @app.get("/ready")
    def ready():
        return {"phase": service.current_phase().value, "now": rfc3339(service.clock.now())}

    @app.get("/contest")
    def contest_meta():
        config = service.config
        return {
            "phase": service.current_phase().value,
            "submission_open": rfc3339(config.submission_open),
            "submission_close": rfc3339(config.submission_close),
            "metrics_freeze": rfc3339(config.metrics_freeze),
            "eligible_countries": sorted(config.eligible_countries),
            "age_groups": [
                {"id": g.id, "min_age": g.min_age, "max_age": g.max_age}
                for g in config.age_groups
            ],
            "media_types": [
                {"id": m.id, "display_name": m.display_name} for m in config.media_types
            ],
            "jury_scale_max": config.jury_scale_max,
            "jury_criteria": {
                group: list(service.matrix.for_group(group))
                for group in config.age_group_ids()
            },
            "required_hashtag": config.required_hashtag,
            "target_min_countries": config.target_min_countries,
            "leaderboard_visible": (
                service.current_phase() >= Phase.FROZEN
                or service.settings.leaderboard_visibility == "live"
            ),
        }

    @app.get("/topics")
    def topics():
        return [
            {
                "id": t.id,
                "title": t.title,
                "age_group_scope": t.age_group_scope,
                "locales": list(t.locales),
                "keywords": list(t.keywords),
                "body": t.body,
            }
            for t in service.topics.values()
        ]

    @app.get("/stats")
    def stats():
        return service.contest_stats()

    @app.get("/leaderboard")
    def leaderboard(by: str = "category"):
        group_by = GroupBy.COUNTRY if by.lower() == "country" else GroupBy.CATEGORY
        return {"by": group_by.value.lower(), "groups": service.leaderboard(group_by)}

    @app.get("/winners")
    def winners():
        if service.current_phase() is not Phase.COMPLETE:
            raise ContestError("PHASE_TOO_EARLY", "winners are published once the contest completes")
        winner_set = service.winners()
        live = {s.submission_id: s for s in service.submissions.live_submissions()}
        return {
            "winners": [
                {
                    "category_id": category,
                    "submission_id": winner.submission_id,
                    "title": live[winner.submission_id].title,
                    "country": live[winner.submission_id].country,
                    "jury_aggregate": format_score(winner.jury_aggregate),
                    "audience_award": winner_set.audience_award == winner.submission_id,
                }
                for category, winner in sorted(winner_set.winners.items())
            ],
            "audience_award": winner_set.audience_award,
        }

    @app.get("/submissions/{submission_id}")
    def public_submission(submission_id: str):
        return submission_view(service, service.submissions.get_submission(submission_id))

    @app.get("/submissions/{submission_id}/widget")
    def widget(submission_id: str):
        w = service.widget_for(submission_id)
        return {
            "submission_id": w.submission_id,
            "embed_markup": w.embed_markup,
            "deep_link": w.deep_link,
        }

    # -- accounts & sessions -------------------------------------------------

    @app.post("/accounts", status_code=201)
    def register(body: RegisterBody):
        account_id = service.submissions.register_account(
            body.first_name, body.last_name, body.email, body.password
        )
        return {"account_id": account_id}

    @app.post("/sessions", status_code=201)
    def open_session(body: SessionBody):
        if body.admin_key is not None:
            if not service.settings.admin_key:
                raise ContestError("ADMIN_DISABLED", "no admin key configured")
            if body.admin_key != service.settings.admin_key:
                raise ContestError("UNAUTHENTICATED", "bad admin key")
            session = sessions.issue(ROLE_ADMIN, "admin")
        elif body.juror_id is not None:
            expected = service.settings.jurors.get(body.juror_id)
            if expected is None or body.key != expected:
                raise ContestError("UNAUTHENTICATED", "bad juror credentials")
            session = sessions.issue(ROLE_JUROR, body.juror_id)
        elif body.email is not None and body.password is not None:
            account = service.submissions.authenticate(body.email, body.password)
            if account is None:
                raise ContestError("UNAUTHENTICATED", "bad e-mail or password")
            session = sessions.issue(ROLE_PARTICIPANT, account.account_id)
        else:
            raise ContestError("UNAUTHENTICATED", "no credentials supplied")
        return {
            "token": session.token,
            "role": session.role,
            "subject_id": session.subject_id,
            "expires_at": session.expires_at,
        }

    # -- participant -----------------------------------------------------------

    @app.put("/profile")
    def put_profile(body: ProfileBody, session=Depends(participant)):
        result = service.submissions.complete_profile(
            session.subject_id,
            body.birth_date,
            body.country_of_residence,
            body.participation_mode,
            body.group_member_names,
        )
        return {
            "eligible": result.eligible,
            "age_group": result.age_group,
            "reasons": list(result.reasons),
        }

    @app.get("/profile")
    def get_profile(session=Depends(participant)):
        profile = service.submissions.get_profile(session.subject_id)
        if profile is None:
            raise ContestError("NOT_FOUND", "profile not completed yet")
        return {
            "birth_date": profile.birth_date.isoformat(),
            "country_of_residence": profile.country_of_residence,
            "participation_mode": profile.participation_mode.value,
            "group_member_names": list(profile.group_member_names),
        }

    @app.post("/submissions", status_code=201)
    def create_submission(body: SubmissionBody, session=Depends(participant)):
        submission_id = service.submissions.create_submission(
            session.subject_id,
            body.title,
            body.description,
            body.topic_id,
            body.media_type_id,
            body.media_url,
        )
        return submission_view(service, service.submissions.get_submission(submission_id))

    @app.get("/submissions")
    def my_submissions(session=Depends(participant)):
        return [
            submission_view(service, s)
            for s in service.submissions.submissions_for(session.subject_id)
        ]

    @app.post("/submissions/{submission_id}/finalize")
    def finalize(submission_id: str, body: FinalizeBody, session=Depends(participant)):
        submission = service.submissions.finalize_submission(
            session.subject_id, submission_id, hashtag_attested=body.hashtag_attested
        )
        return submission_view(service, submission)

    @app.delete("/submissions/{submission_id}")
    def withdraw(submission_id: str, session=Depends(participant)):
        if service.current_phase() >= Phase.FROZEN:
            raise ContestError("FROZEN", "contest metrics are frozen; withdrawal closed")
        submission = service.submissions.withdraw_submission(session.subject_id, submission_id)
        return submission_view(service, submission)

    # -- jury --------------------------------------------------------------------

    @app.get("/jury/shortlist")
    def jury_shortlist(session=Depends(juror)):
        shortlist = service.shortlist()
        if shortlist is None:
            raise ContestError("PHASE_TOO_EARLY", "the shortlist exists from the JURY phase on")
        age_groups = service._age_group_by_submission()
        views = []
        for entry in shortlist.entries:
            submission = service.submissions.get_submission(entry.submission_id)
            group = age_groups[entry.submission_id]
            views.append(
                {
                    **submission_view(service, submission),
                    "provenance": [
                        {"kind": p.kind, "key": p.key} for p in entry.provenance
                    ],
                    "age_group": group,
                    "criteria": list(service.matrix.for_group(group)),
                }
            )
        return {"entries": views, "warnings": list(shortlist.warnings)}

    @app.put("/jury/scores/{submission_id}")
    def put_score(submission_id: str, body: ScoresBody, session=Depends(juror)):
        score = service.record_jury_score(session.subject_id, submission_id, body.scores)
        return {
            "juror_id": score.juror_id,
            "submission_id": score.submission_id,
            "scores": dict(score.scores),
            "recorded_at": rfc3339(score.recorded_at),
        }

    @app.get("/jury/scores")
    def my_scores(session=Depends(juror)):
        return [
            {
                "submission_id": s.submission_id,
                "scores": dict(s.scores),
                "recorded_at": rfc3339(s.recorded_at),
            }
            for s in service.scores_for_juror(session.subject_id)
        ]

    # -- admin ----------------------------------------------------------------------

    @app.post("/phase")
    def advance(body: PhaseBody, session=Depends(admin)):
        try:
            target = Phase(body.target.upper())
        except ValueError:
            raise ContestError("INVALID_TRANSITION", f"unknown phase {body.target!r}")
        phase = service.advance_phase(session.subject_id, target)
        return {"phase": phase.value}

    @app.post("/poll")
    def poll(session=Depends(admin)):
        outcome = service.run_poll_cycle()
        return {
            "samples": len(outcome.samples),
            "failures": [{"submission_id": sid, "reason": r} for sid, r in outcome.failures],
            "newly_flagged": outcome.newly_flagged,
        }

    @app.post("/audience-award")
    def audience_award(body: AudienceAwardBody, session=Depends(admin)):
        updated = service.set_audience_award(session.subject_id, body.submission_id)
        return {"audience_award": updated.audience_award}

    @app.get("/export/{kind}")
    def export(kind: str, session=Depends(admin)):
        payloads = service.export_payloads(kind)
        if len(payloads) == 1:
            (name, payload), = payloads.items()
            return Response(
                payload,
                media_type="text/csv",
                headers={"Content-Disposition": f'attachment; filename="{name}"'},
            )
        return payloads

    return app
