"""Accounts, profiles, and submission records with store codecs."""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import date, datetime
from enum import Enum
from typing import Any

from ..timeutil import parse_rfc3339, rfc3339
from .media import MediaLink, Platform


class SubmissionState(str, Enum):
    DRAFT = "DRAFT"
    SUBMITTED = "SUBMITTED"
    WITHDRAWN = "WITHDRAWN"


class ParticipationMode(str, Enum):
    INDIVIDUAL = "individual"
    GROUP = "group"


@dataclass(frozen=True)
class Account:
    account_id: str
    first_name: str
    last_name: str
    email: str  # normalized lower case
    credential_digest: str  # never leaves the store
    created_at: datetime

    def public_view(self) -> dict[str, Any]:
        return {
            "account_id": self.account_id,
            "first_name": self.first_name,
            "last_name": self.last_name,
            "email": self.email,
        }


@dataclass(frozen=True)
class Profile:
    account_id: str
    birth_date: date
    country_of_residence: str
    participation_mode: ParticipationMode
    group_member_names: tuple[str, ...] = ()


@dataclass(frozen=True)
class Submission:
    submission_id: str
    account_id: str
    title: str
    description: str
    topic_id: str
    media_type_id: str
    media_link: MediaLink
    state: SubmissionState = SubmissionState.DRAFT
    submitted_at: datetime | None = None
    category_id: str | None = None
    country: str | None = None
    hashtag_attested: bool = False

    def with_state(self, **changes) -> "Submission":
        return replace(self, **changes)

    @property
    def is_live(self) -> bool:
        return self.state is SubmissionState.SUBMITTED


def account_to_doc(account: Account) -> dict[str, Any]:
    return {
        "account_id": account.account_id,
        "first_name": account.first_name,
        "last_name": account.last_name,
        "email": account.email,
        "credential_digest": account.credential_digest,
        "created_at": rfc3339(account.created_at),
    }


def account_from_doc(doc: dict[str, Any]) -> Account:
    return Account(
        account_id=doc["account_id"],
        first_name=doc["first_name"],
        last_name=doc["last_name"],
        email=doc["email"],
        credential_digest=doc["credential_digest"],
        created_at=parse_rfc3339(doc["created_at"]),
    )


def profile_to_doc(profile: Profile) -> dict[str, Any]:
    return {
        "account_id": profile.account_id,
        "birth_date": profile.birth_date.isoformat(),
        "country_of_residence": profile.country_of_residence,
        "participation_mode": profile.participation_mode.value,
        "group_member_names": list(profile.group_member_names),
    }


def profile_from_doc(doc: dict[str, Any]) -> Profile:
    return Profile(
        account_id=doc["account_id"],
        birth_date=date.fromisoformat(doc["birth_date"]),
        country_of_residence=doc["country_of_residence"],
        participation_mode=ParticipationMode(doc["participation_mode"]),
        group_member_names=tuple(doc["group_member_names"]),
    )


def submission_to_doc(submission: Submission) -> dict[str, Any]:
    return {
        "submission_id": submission.submission_id,
        "account_id": submission.account_id,
        "title": submission.title,
        "description": submission.description,
        "topic_id": submission.topic_id,
        "media_type_id": submission.media_type_id,
        "media": {
            "raw_url": submission.media_link.raw_url,
            "platform": submission.media_link.platform.value,
            "external_id": submission.media_link.external_id,
        },
        "state": submission.state.value,
        "submitted_at": rfc3339(submission.submitted_at) if submission.submitted_at else None,
        "category_id": submission.category_id,
        "country": submission.country,
        "hashtag_attested": submission.hashtag_attested,
    }


def submission_from_doc(doc: dict[str, Any]) -> Submission:
    media = doc["media"]
    return Submission(
        submission_id=doc["submission_id"],
        account_id=doc["account_id"],
        title=doc["title"],
        description=doc["description"],
        topic_id=doc["topic_id"],
        media_type_id=doc["media_type_id"],
        media_link=MediaLink(media["raw_url"], Platform(media["platform"]), media["external_id"]),
        state=SubmissionState(doc["state"]),
        submitted_at=parse_rfc3339(doc["submitted_at"]) if doc["submitted_at"] else None,
        category_id=doc["category_id"],
        country=doc["country"],
        hashtag_attested=doc["hashtag_attested"],
    )
