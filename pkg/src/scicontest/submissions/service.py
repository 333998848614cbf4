"""Registration, profiles, and the draft-to-submitted lifecycle.

All writes go through store transactions; concurrent finalize attempts for
one account serialize so at most one SUBMITTED entry ever exists per
account.
"""

from __future__ import annotations

import hashlib
import hmac
import re
import secrets
from datetime import date, datetime
from typing import Callable, Iterable

from ..domain import (
    ContestConfig,
    TopicSheet,
    assign_category,
    derive_age_group,
    validate_eligibility,
)
from ..domain.eligibility import EligibilityResult
from ..errors import ContestError
from ..ids import IdFactory, random_ids
from ..store import DocumentStore
from ..timeutil import Clock
from .media import validate_media_link
from .model import (
    Account,
    ParticipationMode,
    Profile,
    Submission,
    SubmissionState,
    account_from_doc,
    account_to_doc,
    profile_from_doc,
    profile_to_doc,
    submission_from_doc,
    submission_to_doc,
)

EMAIL_PATTERN = re.compile(r"^[^@\s]+@[^@\s]+\.[^@\s]+$")
MIN_PASSWORD_LENGTH = 10

ACCOUNTS = "accounts"
EMAIL_INDEX = "account_email"
PROFILES = "profiles"
SUBMISSIONS = "submissions"

# Hook invoked after a successful finalize; the api layer wires syndication in.
FinalizeListener = Callable[[Submission], None]


def hash_password(password: str, iterations: int = 100_000) -> str:
    salt = secrets.token_hex(16)
    digest = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), bytes.fromhex(salt), iterations
    ).hex()
    return f"pbkdf2_sha256${iterations}${salt}${digest}"


def verify_password(password: str, stored: str) -> bool:
    try:
        _scheme, iterations, salt, digest = stored.split("$")
    except ValueError:
        return False
    candidate = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), bytes.fromhex(salt), int(iterations)
    ).hex()
    return hmac.compare_digest(candidate, digest)


class SubmissionService:
    def __init__(
        self,
        store: DocumentStore,
        config: ContestConfig,
        topics: Iterable[TopicSheet],
        clock: Clock,
        id_factory: IdFactory | None = None,
        kdf_iterations: int = 100_000,
    ):
        self.store = store
        self.config = config
        self.topics = {t.id: t for t in topics}
        self.clock = clock
        self.ids = id_factory or random_ids()
        self.kdf_iterations = kdf_iterations
        self._finalize_listeners: list[FinalizeListener] = []

    def on_finalize(self, listener: FinalizeListener) -> None:
        self._finalize_listeners.append(listener)

    # -- accounts ---------------------------------------------------------

    def register_account(self, first: str, last: str, email: str, password: str) -> str:
        if not EMAIL_PATTERN.match(email or ""):
            raise ContestError("INVALID_EMAIL", f"not an e-mail address: {email!r}")
        if len(password) < MIN_PASSWORD_LENGTH:
            raise ContestError(
                "WEAK_PASSWORD", f"password must have at least {MIN_PASSWORD_LENGTH} characters"
            )
        normalized = email.strip().lower()
        with self.store.transaction():
            if self.store.get(EMAIL_INDEX, normalized) is not None:
                raise ContestError("EMAIL_TAKEN", f"{normalized} is already registered")
            account = Account(
                account_id=self.ids("account", normalized),
                first_name=first.strip(),
                last_name=last.strip(),
                email=normalized,
                credential_digest=hash_password(password, self.kdf_iterations),
                created_at=self.clock.now(),
            )
            self.store.put(ACCOUNTS, account.account_id, account_to_doc(account))
            self.store.put(EMAIL_INDEX, normalized, {"account_id": account.account_id})
        return account.account_id

    def authenticate(self, email: str, password: str) -> Account | None:
        pointer = self.store.get(EMAIL_INDEX, (email or "").strip().lower())
        if pointer is None:
            return None
        account = self.get_account(pointer["account_id"])
        return account if verify_password(password, account.credential_digest) else None

    def get_account(self, account_id: str) -> Account:
        doc = self.store.get(ACCOUNTS, account_id)
        if doc is None:
            raise ContestError("ACCOUNT_NOT_FOUND", f"no account {account_id!r}")
        return account_from_doc(doc)

    # -- profiles ---------------------------------------------------------

    def complete_profile(
        self,
        account_id: str,
        birth_date: date,
        country_of_residence: str,
        participation_mode: str = "individual",
        group_member_names: Iterable[str] = (),
    ) -> EligibilityResult:
        self.get_account(account_id)
        country = (country_of_residence or "").strip().upper()
        if not (len(country) == 2 and country.isalpha()):
            raise ContestError("INVALID_COUNTRY_CODE", f"not an alpha-2 code: {country_of_residence!r}")
        now = self.clock.now()
        if birth_date > now.date():
            raise ContestError("INVALID_DATE", "birth date lies in the future")
        mode = ParticipationMode(participation_mode)
        members = tuple(name.strip() for name in group_member_names if name.strip())
        if mode is ParticipationMode.GROUP and not members:
            raise ContestError("INVALID_GROUP_MEMBERS", "group participation needs member names")
        if mode is ParticipationMode.INDIVIDUAL and members:
            raise ContestError("INVALID_GROUP_MEMBERS", "individual participation lists no members")

        profile = Profile(account_id, birth_date, country, mode, members)
        self.store.put(PROFILES, account_id, profile_to_doc(profile))
        # Stored either way; the result tells the caller whether the profile
        # is flagged ineligible.
        return validate_eligibility(country, birth_date, now, self.config)

    def get_profile(self, account_id: str) -> Profile | None:
        doc = self.store.get(PROFILES, account_id)
        return profile_from_doc(doc) if doc else None

    # -- submissions ------------------------------------------------------

    def create_submission(
        self,
        account_id: str,
        title: str,
        description: str,
        topic_id: str,
        media_type_id: str,
        raw_url: str,
    ) -> str:
        self.get_account(account_id)
        if topic_id not in self.topics:
            raise ContestError("UNKNOWN_TOPIC", f"no topic sheet {topic_id!r}")
        if media_type_id not in self.config.media_type_ids():
            raise ContestError("UNKNOWN_MEDIA_TYPE", f"no media type {media_type_id!r}")
        link = validate_media_link(raw_url)
        submission = Submission(
            submission_id=self.ids("submission", account_id, link.normalized_url),
            account_id=account_id,
            title=title.strip(),
            description=description,
            topic_id=topic_id,
            media_type_id=media_type_id,
            media_link=link,
        )
        self.store.put(SUBMISSIONS, submission.submission_id, submission_to_doc(submission))
        return submission.submission_id

    def update_draft(self, account_id: str, submission_id: str, **fields) -> Submission:
        with self.store.transaction():
            submission = self._owned(account_id, submission_id)
            if submission.state is not SubmissionState.DRAFT:
                raise ContestError("NOT_A_DRAFT", "only drafts are editable")
            if "raw_url" in fields:
                fields["media_link"] = validate_media_link(fields.pop("raw_url"))
            if "topic_id" in fields and fields["topic_id"] not in self.topics:
                raise ContestError("UNKNOWN_TOPIC", f"no topic sheet {fields['topic_id']!r}")
            if (
                "media_type_id" in fields
                and fields["media_type_id"] not in self.config.media_type_ids()
            ):
                raise ContestError("UNKNOWN_MEDIA_TYPE", f"no media type {fields['media_type_id']!r}")
            updated = submission.with_state(**fields)
            self.store.put(SUBMISSIONS, submission_id, submission_to_doc(updated))
            return updated

    def finalize_submission(
        self,
        account_id: str,
        submission_id: str,
        now: datetime | None = None,
        hashtag_attested: bool = False,
    ) -> Submission:
        now = now or self.clock.now()
        with self.store.transaction():
            submission = self._owned(account_id, submission_id)
            if submission.state is SubmissionState.SUBMITTED:
                raise ContestError("ALREADY_SUBMITTED", "submission is already finalized")
            if submission.state is not SubmissionState.DRAFT:
                raise ContestError("NOT_FOUND", "withdrawn submissions cannot be finalized")
            for other in self.submissions_for(account_id):
                if other.is_live:
                    raise ContestError(
                        "ALREADY_SUBMITTED", "account already has a finalized entry"
                    )
            profile = self.get_profile(account_id)
            if profile is None:
                raise ContestError("NOT_ELIGIBLE", "complete the profile before finalizing")
            if not hashtag_attested:
                raise ContestError(
                    "ATTESTATION_REQUIRED",
                    f"confirm the entry includes {self.config.required_hashtag}",
                )
            result = validate_eligibility(
                profile.country_of_residence, profile.birth_date, now, self.config
            )
            if not result.eligible:
                if result.reasons == ("WINDOW_CLOSED",):
                    raise ContestError("WINDOW_CLOSED", "submission window is closed")
                raise ContestError("NOT_ELIGIBLE", "profile is not eligible", details=list(result.reasons))

            group = derive_age_group(
                profile.birth_date, self.config.age_reference.date(), self.config
            )
            assert group is not None  # implied by eligibility
            finalized = submission.with_state(
                state=SubmissionState.SUBMITTED,
                submitted_at=now,
                category_id=assign_category(group.id, submission.media_type_id, self.config),
                country=profile.country_of_residence,
                hashtag_attested=True,
            )
            self.store.put(SUBMISSIONS, submission_id, submission_to_doc(finalized))
        for listener in self._finalize_listeners:
            listener(finalized)
        return finalized

    def withdraw_submission(self, account_id: str, submission_id: str) -> Submission:
        with self.store.transaction():
            submission = self._owned(account_id, submission_id)
            if self.clock.now() >= self.config.metrics_freeze:
                raise ContestError("FROZEN", "contest metrics are frozen; withdrawal closed")
            withdrawn = submission.with_state(state=SubmissionState.WITHDRAWN)
            self.store.put(SUBMISSIONS, submission_id, submission_to_doc(withdrawn))
            return withdrawn

    def get_submission(self, submission_id: str) -> Submission:
        doc = self.store.get(SUBMISSIONS, submission_id)
        if doc is None:
            raise ContestError("NOT_FOUND", f"no submission {submission_id!r}")
        return submission_from_doc(doc)

    def submissions_for(self, account_id: str) -> list[Submission]:
        return [
            s
            for s in (submission_from_doc(doc) for doc in self.store.values(SUBMISSIONS))
            if s.account_id == account_id
        ]

    def live_submissions(self) -> list[Submission]:
        """All SUBMITTED, non-withdrawn entries, ordered by id."""
        return [
            s
            for s in (submission_from_doc(doc) for doc in self.store.values(SUBMISSIONS))
            if s.is_live
        ]

    def _owned(self, account_id: str, submission_id: str) -> Submission:
        submission = self.get_submission(submission_id)
        # Ownership hides foreign ids: report NOT_FOUND, not FORBIDDEN.
        if submission.account_id != account_id:
            raise ContestError("NOT_FOUND", f"no submission {submission_id!r}")
        return submission
